#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trefoil/integer.hpp"

namespace trefoil {

/// Integer Laurent polynomial sum c_i t^(low + i). Normalized so the first and
/// last stored coefficients are nonzero; zero has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(Int coeff, std::int64_t exponent);
  static LaurentPoly constant(Int coeff) { return monomial(std::move(coeff), 0); }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  Int coeff(std::int64_t exponent) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// x0 y0 + x1 y1 in one pass; the inner step of a 2x2 product.
  static LaurentPoly dot2(const LaurentPoly& x0, const LaurentPoly& y0, const LaurentPoly& x1, const LaurentPoly& y1);

 private:
  LaurentPoly(std::int64_t low, std::vector<Int> coeffs);
  void normalize();

  std::int64_t low_ = 0;
  std::vector<Int> coeffs_;
};

/// Terms in increasing degree, e.g. "-t^-1 + 2 + t^3"; "0" for zero.
std::string to_string(const LaurentPoly& p);

struct LaurentMatrix {
  std::array<LaurentPoly, 4> m;  // row-major

  static LaurentMatrix identity();
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentPoly determinant() const;
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;
};

std::string to_string(const LaurentMatrix& m);

}  // namespace trefoil
