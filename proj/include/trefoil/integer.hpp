#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trefoil {

/// Unbounded signed integer. Transvections grow coordinates quadratically, so
/// nothing in the library uses fixed-width arithmetic for quandle elements.
using Int = mpz_class;

/// Parses an optionally signed decimal integer. Throws ParseError.
Int parse_int(std::string_view text);

std::string to_string(const Int& value);

/// Greatest integer not exceeding a / b. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Non-negative gcd; gcd(0, k) = |k|.
Int gcd(const Int& a, const Int& b);

}  // namespace trefoil
