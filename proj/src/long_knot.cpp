#include "trefoil/long_knot.hpp"

#include <cassert>

#include "trefoil/error.hpp"

namespace trefoil {

namespace {

const BraidElement& m() {
  static const BraidElement value = meridian();
  return value;
}

const BraidElement& m_inv() {
  static const BraidElement value = braid_inv(meridian());
  return value;
}

const BraidElement& lambda() {
  static const BraidElement value = longitude();
  return value;
}

const BraidElement& lambda_inv() {
  static const BraidElement value = braid_inv(longitude());
  return value;
}

}  // namespace

CoveredElement::CoveredElement(BraidElement g_prime) : g_prime_(std::move(g_prime)), x_(conjugate(m(), g_prime_)) {
  assert(g_prime_.exponent_sum() == 0 && x_.exponent_sum() == 1);
}

CoveredElement qt_new(const BraidElement& g_prime) {
  if (g_prime.exponent_sum() != 0)
    throw DomainError("covered element: g' = " + to_string(g_prime) + " has exponent sum " +
                      std::to_string(g_prime.exponent_sum()) + ", expected 0");
  return CoveredElement(g_prime);
}

BraidElement qt_op_slot_via_x(const CoveredElement& p, const CoveredElement& q) {
  return p.g_prime() * braid_inv(p.x()) * q.x();
}

BraidElement qt_op_slot_via_m(const CoveredElement& p, const CoveredElement& q) {
  return m_inv() * p.g_prime() * braid_inv(q.g_prime()) * m() * q.g_prime();
}

BraidElement qt_op_inv_slot_via_x(const CoveredElement& p, const CoveredElement& q) {
  return p.g_prime() * p.x() * braid_inv(q.x());
}

BraidElement qt_op_inv_slot_via_m(const CoveredElement& p, const CoveredElement& q) {
  return m() * p.g_prime() * braid_inv(q.g_prime()) * m_inv() * q.g_prime();
}

CoveredElement qt_op(const CoveredElement& p, const CoveredElement& q) {
  CoveredElement r = qt_new(qt_op_slot_via_m(p, q));
  assert(braid_eq(r.x(), conjugate(p.x(), q.x())));
  return r;
}

CoveredElement qt_op_inv(const CoveredElement& p, const CoveredElement& q) {
  CoveredElement r = qt_new(qt_op_inv_slot_via_m(p, q));
  assert(braid_eq(r.x(), conjugate(p.x(), braid_inv(q.x()))));
  return r;
}

CoveredElement lambda_act(std::int64_t k, const CoveredElement& p) {
  CoveredElement r = qt_new(braid_pow(lambda(), k) * p.g_prime());
  assert(braid_eq(r.x(), p.x()));
  return r;
}

CoveredElement pi1_act(const CoveredElement& p, const BraidElement& h) {
  return qt_new(braid_pow(m(), -h.exponent_sum()) * p.g_prime() * h);
}

std::int64_t fiber_compare(const CoveredElement& p1, const CoveredElement& p2) {
  if (!braid_eq(p1.x(), p2.x()))
    throw DomainError("fiber_compare: different fibres (x = " + to_string(p1.x()) + " vs " + to_string(p2.x()) + ")");
  BraidElement d = p2.g_prime() * braid_inv(p1.g_prime());
  const auto bound = static_cast<std::int64_t>(d.word().size()) + 1;
  BraidElement up, down;
  if (braid_eq(up, d)) return 0;
  for (std::int64_t k = 1; k <= bound; ++k) {
    up = lambda() * up;
    if (braid_eq(up, d)) return k;
    down = lambda_inv() * down;
    if (braid_eq(down, d)) return -k;
  }
  throw DomainError("fiber_compare: no k with |k| <= " + std::to_string(bound) + " satisfies g'2 = lambda^k g'1");
}

nlohmann::json to_json(const CoveredElement& p) {
  return {{"g_prime", to_string(p.g_prime())}, {"x", to_string(p.x())}, {"eps", p.x().exponent_sum()}};
}

}  // namespace trefoil
