#pragma once

#include <cstdint>

#include <json.hpp>

#include "trefoil/braid.hpp"

namespace trefoil {

/// An element (x, g') of the covering quandle of the long trefoil: g' has
/// exponent sum zero and x = g'^-1 m g' is derived from it.
class CoveredElement {
 public:
  const BraidElement& g_prime() const { return g_prime_; }
  const BraidElement& x() const { return x_; }

  /// Second slots equal in B3 (x then agrees automatically).
  friend bool operator==(const CoveredElement& p, const CoveredElement& q) { return braid_eq(p.g_prime_, q.g_prime_); }

 private:
  explicit CoveredElement(BraidElement g_prime);
  friend CoveredElement qt_new(const BraidElement& g_prime);

  BraidElement g_prime_;
  BraidElement x_;
};

/// (m^g', g'). Throws DomainError unless exponent_sum(g') = 0.
CoveredElement qt_new(const BraidElement& g_prime);

/// (x, g') * (y, h') = (x^y, m^-1 g' h'^-1 m h').
CoveredElement qt_op(const CoveredElement& p, const CoveredElement& q);
/// (x, g') *bar (y, h') = (x^(y^-1), m g' h'^-1 m^-1 h').
CoveredElement qt_op_inv(const CoveredElement& p, const CoveredElement& q);

/// The two spellings of each second slot: g' x^-1 y and m^-1 g' h'^-1 m h'
/// for *, g' x y^-1 and m g' h'^-1 m^-1 h' for *bar.
BraidElement qt_op_slot_via_x(const CoveredElement& p, const CoveredElement& q);
BraidElement qt_op_slot_via_m(const CoveredElement& p, const CoveredElement& q);
BraidElement qt_op_inv_slot_via_x(const CoveredElement& p, const CoveredElement& q);
BraidElement qt_op_inv_slot_via_m(const CoveredElement& p, const CoveredElement& q);

inline const BraidElement& covering_p(const CoveredElement& p) { return p.x(); }

/// (x, lambda^k g').
CoveredElement lambda_act(std::int64_t k, const CoveredElement& p);
/// (m^(g' h), m^-eps(h) g' h).
CoveredElement pi1_act(const CoveredElement& p, const BraidElement& h);

/// The k with g'2 = lambda^k g'1, searched over |k| <= |g'2 g'1^-1| + 1.
/// Throws DomainError if the points lie in different fibres or no k is found
/// within the bound.
std::int64_t fiber_compare(const CoveredElement& p1, const CoveredElement& p2);

/// {"g_prime": word, "x": word, "eps": exponent sum of x}
nlohmann::json to_json(const CoveredElement& p);

}  // namespace trefoil
