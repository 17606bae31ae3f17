#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trefoil/fraction.hpp"
#include "trefoil/integer.hpp"

namespace trefoil {

/// [k1; k2, ..., kn] = k1 + 1/(k2 + 1/(... + 1/kn)).
/// Valid when n >= 1, k_i >= 1 for i >= 2, and kn > 1 if n >= 2.
struct ContinuedFraction {
  std::vector<Int> terms;
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

namespace detail {

inline Int floor_quotient(const Int& a, const Int& b) { return floor_div(a, b); }

template <std::signed_integral I>
I floor_quotient(I a, I b) {
  I q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Expansion of p/q (q > 0): k = floor(r), then continue with 1/(r - k) until
/// the remainder vanishes. Each term is passed to emit; expansion stops early
/// if emit returns false.
template <typename I, typename Emit>
void expand_terms(I p, I q, Emit&& emit) {
  while (true) {
    I k = floor_quotient(p, q);
    I rem = p - k * q;
    if (!emit(k)) return;
    if (rem == 0) return;
    p = std::move(q);
    q = std::move(rem);
  }
}

/// Numerator and denominator of a nonempty term list, folded from the back.
template <typename I>
std::pair<I, I> eval_terms(std::span<const I> terms) {
  I p = terms.back(), q = 1;
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    I next = terms[i] * p + q;
    q = std::move(p);
    p = std::move(next);
  }
  return {std::move(p), std::move(q)};
}

template <typename I>
bool terms_valid(std::span<const I> terms) {
  if (terms.empty()) return false;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] < 1) return false;
  return terms.size() == 1 || terms.back() > 1;
}

}  // namespace detail

/// True iff the list satisfies the constraints above. Throws DomainError on an
/// empty list.
bool cf_validate(std::span<const Int> terms);

/// Throws DomainError for 1/0, which has no continued fraction.
ContinuedFraction cf_expand(const PFrac& r);

/// Throws DomainError if the terms are not valid.
PFrac cf_eval(const ContinuedFraction& cf);

/// "[k1;k2,...,kn]" or "[k]", spaces allowed anywhere. Throws ParseError.
ContinuedFraction parse_cf(std::string_view text);
std::string to_string(const ContinuedFraction& cf);

nlohmann::json to_json(const ContinuedFraction& cf);
ContinuedFraction cf_from_json(const nlohmann::json& j);

}  // namespace trefoil
