#include "trefoil/laurent.hpp"

#include <algorithm>

namespace trefoil {

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<Int> coeffs) : low_(low), coeffs_(std::move(coeffs)) { normalize(); }

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(Int coeff, std::int64_t exponent) {
  return LaurentPoly(exponent, std::vector<Int>{std::move(coeff)});
}

Int LaurentPoly::coeff(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  std::int64_t low = std::min(x.low_, y.low_), high = std::max(x.high(), y.high());
  std::vector<Int> c(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[x.low_ - low + i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[y.low_ - low + i] += y.coeffs_[i];
  return LaurentPoly(low, std::move(c));
}

namespace {

void accumulate_product(std::vector<Int>& acc, std::int64_t acc_low, std::int64_t x_low, const std::vector<Int>& x,
                        std::int64_t y_low, const std::vector<Int>& y) {
  const std::size_t offset = static_cast<std::size_t>(x_low + y_low - acc_low);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) mpz_addmul(acc[offset + i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Int> c(x.coeffs_.size() + y.coeffs_.size() - 1);
  accumulate_product(c, x.low_ + y.low_, x.low_, x.coeffs_, y.low_, y.coeffs_);
  return LaurentPoly(x.low_ + y.low_, std::move(c));
}

LaurentPoly LaurentPoly::dot2(const LaurentPoly& x0, const LaurentPoly& y0, const LaurentPoly& x1, const LaurentPoly& y1) {
  bool first = !x0.is_zero() && !y0.is_zero(), second = !x1.is_zero() && !y1.is_zero();
  if (!first && !second) return {};
  if (!second) return x0 * y0;
  if (!first) return x1 * y1;
  std::int64_t low = std::min(x0.low_ + y0.low_, x1.low_ + y1.low_);
  std::int64_t high = std::max(x0.high() + y0.high(), x1.high() + y1.high());
  std::vector<Int> c(static_cast<std::size_t>(high - low + 1));
  accumulate_product(c, low, x0.low_, x0.coeffs_, y0.low_, y0.coeffs_);
  accumulate_product(c, low, x1.low_, x1.coeffs_, y1.low_, y1.coeffs_);
  return LaurentPoly(low, std::move(c));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::int64_t e = p.low(); e <= p.high(); ++e) {
    Int c = p.coeff(e);
    if (c == 0) continue;
    bool negative = c < 0;
    Int mag = abs(c);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentMatrix LaurentMatrix::identity() {
  return {{LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(), LaurentPoly::constant(1)}};
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  return {{LaurentPoly::dot2(m[0], o.m[0], m[1], o.m[2]), LaurentPoly::dot2(m[0], o.m[1], m[1], o.m[3]),
           LaurentPoly::dot2(m[2], o.m[0], m[3], o.m[2]), LaurentPoly::dot2(m[2], o.m[1], m[3], o.m[3])}};
}

LaurentPoly LaurentMatrix::determinant() const { return LaurentPoly::dot2(m[0], m[3], -m[1], m[2]); }

std::string to_string(const LaurentMatrix& m) {
  return "[[" + to_string(m.m[0]) + ", " + to_string(m.m[1]) + "], [" + to_string(m.m[2]) + ", " + to_string(m.m[3]) + "]]";
}

}  // namespace trefoil
