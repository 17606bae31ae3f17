#include <doctest.h>

#include <set>

#include "artin.hpp"
#include "trefoil/error.hpp"
#include "trefoil/long_knot.hpp"
#include "trefoil/sampling.hpp"

using namespace trefoil;

namespace {

BraidElement br(const char* text) { return BraidElement(parse_braid_word(text)); }
CoveredElement covered(const char* g) { return qt_new(br(g)); }

CoveredElement sample(Rng& rng) { return qt_new(BraidElement(random_balanced_braid_word(rng, 12))); }

std::string matrix_key(const BraidElement& u) { return to_string(u.matrix()); }

}  // namespace

TEST_CASE("construction") {
  CoveredElement base = covered("");
  CHECK(braid_eq(base.x(), meridian()));
  CHECK(braid_eq(base.g_prime(), BraidElement()));

  CoveredElement l = qt_new(longitude());
  CHECK(braid_eq(l.x(), base.x()));
  CHECK_FALSE(l == base);

  CHECK_THROWS_AS(covered("a"), DomainError);
  CHECK_THROWS_AS(covered("abA"), DomainError);
  CHECK(braid_eq(covered("aB").x(), conjugate(meridian(), br("aB"))));
}

TEST_CASE("operations on samples") {
  CoveredElement base = covered("");
  CHECK(qt_op(base, base) == base);
  CHECK(qt_op_inv(base, base) == base);
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    CoveredElement p = sample(rng), q = sample(rng), r = sample(rng);
    CHECK(qt_op(p, p) == p);
    CHECK(qt_op_inv(qt_op(p, q), q) == p);
    CHECK(qt_op(qt_op_inv(p, q), q) == p);
    CHECK(qt_op(qt_op(p, q), r) == qt_op(qt_op(p, r), qt_op(q, r)));
    CHECK(braid_eq(qt_op_slot_via_x(p, q), qt_op_slot_via_m(p, q)));
    CHECK(braid_eq(qt_op_inv_slot_via_x(p, q), qt_op_inv_slot_via_m(p, q)));
    CHECK(exponent_sum(covering_p(p)) == 1);
  }
}

TEST_CASE("second slots agree under the free-group action too") {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    CoveredElement p = sample(rng), q = sample(rng);
    CHECK(artin::equal(qt_op_slot_via_x(p, q).word(), qt_op_slot_via_m(p, q).word()));
    CHECK(artin::equal(qt_op_inv_slot_via_x(p, q).word(), qt_op_inv_slot_via_m(p, q).word()));
    CHECK(artin::equal(covering_p(qt_op(p, q)).word(), conjugate(covering_p(p), covering_p(q)).word()));
  }
}

TEST_CASE("covering map") {
  CHECK(braid_eq(covering_p(covered("")), meridian()));
  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    CoveredElement p = sample(rng), q = sample(rng);
    CHECK(braid_eq(covering_p(lambda_act(i % 7 - 3, p)), covering_p(p)));
    CHECK(braid_eq(covering_p(qt_op(p, q)), conjugate(covering_p(p), covering_p(q))));
    // Points in one fibre act identically.
    CoveredElement mate = lambda_act(i % 5 - 2, q);
    CHECK(qt_op(p, q) == qt_op(p, mate));
    CHECK(qt_op_inv(p, q) == qt_op_inv(p, mate));
  }
}

TEST_CASE("longitude action") {
  CoveredElement base = covered("");
  CHECK(lambda_act(0, base) == base);
  CoveredElement moved = lambda_act(1, base);
  CHECK(braid_eq(moved.g_prime(), longitude()));
  CHECK_FALSE(moved == base);
  CHECK(lambda_act(-1, moved) == base);
  Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    CoveredElement p = sample(rng);
    CHECK(lambda_act(2, lambda_act(-5, p)) == lambda_act(-3, p));
    for (int k = -5; k <= 5; ++k)
      if (k != 0) CHECK_FALSE(lambda_act(k, p) == p);
  }
}

TEST_CASE("fundamental group action") {
  CoveredElement base = covered("");
  CHECK(pi1_act(base, BraidElement()) == base);
  CHECK(pi1_act(base, meridian()) == base);
  Rng rng(35);
  for (int i = 0; i < 300; ++i) {
    CoveredElement p = sample(rng);
    BraidWord hw = random_balanced_braid_word(rng, 10);
    for (int j = 0; j < i % 4; ++j) hw.push_back(i % 2 ? Letter::b : Letter::A);
    BraidElement h(hw), k(random_balanced_braid_word(rng, 6));
    CoveredElement moved = pi1_act(p, h);
    CHECK(exponent_sum(moved.g_prime()) == 0);
    CHECK(braid_eq(covering_p(moved), conjugate(covering_p(p), h)));
    CHECK(pi1_act(moved, k) == pi1_act(p, h * k));
    // The quandle operation is the action of the second point's x.
    CoveredElement q = sample(rng);
    CHECK(qt_op(p, q) == pi1_act(p, covering_p(q)));
  }
}

TEST_CASE("fibre comparison") {
  Rng rng(36);
  for (int k = -3; k <= 3; ++k) {
    CoveredElement p = sample(rng);
    CHECK(fiber_compare(p, lambda_act(k, p)) == k);
  }
  CoveredElement base = covered("");
  CHECK(fiber_compare(base, base) == 0);
  CHECK(fiber_compare(base, lambda_act(12, base)) == 12);
  CHECK_THROWS_AS(fiber_compare(base, pi1_act(base, br("b"))), DomainError);
  CHECK_THROWS_AS(fiber_compare(base, covered("aB")), DomainError);
}

TEST_CASE("orbit of the base point spreads over several fibres") {
  Rng rng(37);
  std::vector<CoveredElement> actors;
  for (const char* w : {"aB", "bA", "abAB", "AAbb"}) actors.push_back(covered(w));
  std::set<std::string> images, elements;
  CoveredElement p = covered("");
  for (int step = 0; step < 40; ++step) {
    const CoveredElement& by = actors[rng() % actors.size()];
    p = rng() % 2 ? qt_op(p, by) : qt_op_inv(p, by);
    images.insert(matrix_key(covering_p(p)));
    elements.insert(matrix_key(p.g_prime()));
  }
  CHECK(images.size() >= 3);
  CHECK(elements.size() >= 3);
}

TEST_CASE("covered element JSON") {
  CHECK(to_json(covered("")).dump() == R"({"eps":1,"g_prime":"","x":"a"})");
  CHECK(to_json(covered("aB")).dump() == R"({"eps":1,"g_prime":"aB","x":"baB"})");
}
