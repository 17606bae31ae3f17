#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "trefoil/error.hpp"
#include "trefoil/groups.hpp"
#include "trefoil/quandle.hpp"

using namespace trefoil;

namespace {

// Brute-force axiom evaluation, independent of check_quandle.
struct Flags {
  bool idempotent = true, bijective = true, distributive = true;
};

Flags brute_force(const FiniteQuandle& q) {
  Flags f;
  const Index n = static_cast<Index>(q.size());
  for (Index a = 0; a < n; ++a) f.idempotent &= q.op(a, a) == a;
  for (Index b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (Index a = 0; a < n; ++a) hit[q.op(a, b)] = true;
    f.bijective &= std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) f.distributive &= q.op(q.op(a, b), c) == q.op(q.op(a, c), q.op(b, c));
  return f;
}

void agrees_with_brute_force(const FiniteQuandle& q) {
  AxiomReport r = check_quandle(q);
  Flags f = brute_force(q);
  CHECK(r.idempotent == f.idempotent);
  CHECK(r.right_translations_bijective == f.bijective);
  CHECK(r.right_distributive == f.distributive);
  CHECK(r.counterexample.has_value() == !(f.idempotent && f.bijective && f.distributive));
  if (r.counterexample) CHECK(counterexample_reproduces(q, r));
}

// S3 as permutations of {0,1,2}, multiplied as "apply left factor first".
FiniteGroup s3_by_hand(std::vector<std::vector<Index>>& perms) {
  perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<Index>> mul(6, std::vector<Index>(6));
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) {
      std::vector<Index> c(3);
      for (Index x = 0; x < 3; ++x) c[x] = perms[j][perms[i][x]];
      mul[i][j] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(mul);
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 1, 2, 0}), DomainError);
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 1, 1}), DomainError);
  CHECK_THROWS_AS(FiniteQuandle(0, {}), DomainError);
  CHECK_THROWS_AS(FiniteQuandle::from_rows({{0, 1}, {1}}), DomainError);
}

TEST_CASE("small magmas") {
  AxiomReport single = check_quandle(FiniteQuandle(1, {0}));
  CHECK(single.is_quandle());
  CHECK_FALSE(single.counterexample);

  FiniteQuandle constant(2, {0, 0, 0, 0});
  AxiomReport r = check_rack(constant);
  CHECK_FALSE(r.right_translations_bijective);
  CHECK(r.failed_axiom == Axiom::RightInvertibility);
  REQUIRE(r.counterexample);
  CHECK(counterexample_reproduces(constant, r));
  agrees_with_brute_force(constant);

  // Right translations are bijective and a*a = a, but distributivity fails.
  FiniteQuandle twisted = FiniteQuandle::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  agrees_with_brute_force(twisted);
  FiniteQuandle non_distributive = FiniteQuandle::from_rows({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}});
  agrees_with_brute_force(non_distributive);
}

TEST_CASE("dihedral quandles") {
  FiniteQuandle r3 = dihedral_quandle(3), r4 = dihedral_quandle(4);
  CHECK(r3.op(0, 1) == 2);
  CHECK(r4.op(1, 3) == 1);
  for (std::size_t n = 1; n <= 20; ++n) {
    FiniteQuandle q = dihedral_quandle(n);
    for (Index i = 0; i < n; ++i) CHECK(q.op(i, i) == i);
    CHECK(check_quandle(q).is_quandle());
    agrees_with_brute_force(q);
  }
  CHECK_THROWS_AS(dihedral_quandle(0), DomainError);
}

TEST_CASE("groups") {
  CHECK(cyclic_group(6).size() == 6);
  CHECK(dihedral_group(4).size() == 8);
  CHECK_FALSE(dihedral_group(4).is_abelian());
  CHECK(symmetric_group(4).size() == 24);
  CHECK(alternating_group(4).size() == 12);
  CHECK(quaternion_group().size() == 8);
  CHECK_FALSE(quaternion_group().is_abelian());
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).is_abelian());
  CHECK(parse_group("klein").size() == 4);
  CHECK(parse_group("dihedral:5").size() == 10);
  CHECK_THROWS_AS(parse_group("nonsense:3"), ParseError);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), DomainError);
  // Quaternion group has exactly one element of order 2.
  FiniteGroup q8 = quaternion_group();
  int involutions = 0;
  for (Index g = 1; g < 8; ++g) involutions += q8.mul(g, g) == q8.identity();
  CHECK(involutions == 1);
}

TEST_CASE("conjugation quandles") {
  FiniteQuandle klein = conj_quandle(parse_group("klein"));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) CHECK(klein.op(a, b) == a);
  CHECK(check_quandle(conj_quandle(cyclic_group(1))).is_quandle());

  std::vector<std::vector<Index>> perms;
  FiniteGroup s3 = s3_by_hand(perms);
  FiniteQuandle c = conj_quandle(s3);
  // (12) = index 1, (13) = index 2, (23) = index 3 in the hand-built table.
  CHECK(c.op(1, 2) == 3);
  for (Index b = 0; b < 6; ++b) CHECK(c.op(s3.identity(), b) == s3.identity());
  agrees_with_brute_force(c);

  // Relabeling by conjugation with a fixed u is a quandle automorphism.
  FiniteGroup s4 = symmetric_group(4);
  FiniteQuandle c4 = conj_quandle(s4);
  for (Index u = 0; u < s4.size(); ++u) {
    auto f = [&](Index x) { return s4.mul(s4.mul(s4.inverse(u), x), u); };
    for (Index a = 0; a < s4.size(); ++a)
      for (Index b = 0; b < s4.size(); ++b) CHECK(f(c4.op(a, b)) == c4.op(f(a), f(b)));
  }
}

TEST_CASE("core quandles") {
  FiniteQuandle core5 = core_quandle(cyclic_group(5));
  CHECK(core5 == dihedral_quandle(5));
  FiniteQuandle core2 = core_quandle(cyclic_group(2));
  CHECK(core2.op(0, 1) == 0);
  FiniteQuandle q8 = core_quandle(quaternion_group());
  for (Index g = 0; g < 8; ++g) CHECK(q8.op(g, g) == g);
  agrees_with_brute_force(q8);
}

TEST_CASE("automorphism quandles") {
  FiniteGroup z3 = cyclic_group(3);
  std::vector<Index> id{0, 1, 2}, twice{0, 2, 1};
  FiniteQuandle trivial = automorphism_quandle(z3, id);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) CHECK(trivial.op(a, b) == a);
  CHECK(automorphism_quandle(z3, twice) == alexander_quandle(LaurentQuotientRing(3, {-2, 1})));
  std::vector<Index> not_hom{0, 2, 2};
  CHECK_THROWS_AS(automorphism_quandle(z3, not_hom), DomainError);
  std::vector<Index> not_auto{1, 2, 0};
  CHECK_THROWS_AS(automorphism_quandle(z3, not_auto), DomainError);

  // Inversion on an abelian group reproduces the core quandle.
  for (const auto& g : {cyclic_group(7), parse_group("klein"), direct_product(cyclic_group(2), cyclic_group(4))}) {
    std::vector<Index> inv(g.size());
    for (Index x = 0; x < g.size(); ++x) inv[x] = g.inverse(x);
    FiniteQuandle q = automorphism_quandle(g, inv);
    CHECK(q == core_quandle(g));
    CHECK(check_quandle(q).is_quandle());
  }
}

TEST_CASE("Laurent quotient rings and Alexander quandles") {
  CHECK(parse_polynomial("t^2+t+1") == std::vector<std::int64_t>{1, 1, 1});
  CHECK(parse_polynomial("t - 3") == std::vector<std::int64_t>{-3, 1});
  CHECK(parse_polynomial("2t^3") == std::vector<std::int64_t>{0, 0, 0, 2});
  CHECK_THROWS_AS(parse_polynomial("t^^2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);

  FiniteQuandle minus_one = alexander_quandle(LaurentQuotientRing(3, parse_polynomial("t+1")));
  CHECK(minus_one == dihedral_quandle(3));
  LaurentQuotientRing f4(2, parse_polynomial("t^2+t+1"));
  CHECK(f4.element_count() == 4);
  FiniteQuandle q4 = alexander_quandle(f4);
  CHECK(q4.size() == 4);
  CHECK(check_quandle(q4).is_quandle());
  for (Index a = 0; a < 4; ++a) CHECK(q4.op(a, a) == a);
  agrees_with_brute_force(q4);

  CHECK_THROWS_AS(LaurentQuotientRing(4, parse_polynomial("t^2+2t")), DomainError);  // t divides h
  CHECK_THROWS_AS(LaurentQuotientRing(4, parse_polynomial("2t+1")), DomainError);    // leading coefficient
  CHECK_THROWS_AS(LaurentQuotientRing(5, parse_polynomial("5t+1")), DomainError);    // degree drops to 0

  LaurentQuotientRing r(9, parse_polynomial("t^2+4t+2"));
  for (Index i = 0; i < r.element_count(); ++i) {
    auto e = r.decode(i);
    CHECK(r.encode(e) == i);
    CHECK(r.times_t(r.times_t_inverse(e)) == e);
  }
}

TEST_CASE("bilinear-form quandles") {
  // Over Z/2 the form xy is antisymmetric but not alternating; the result is
  // neither a rack nor a quandle.
  BilinearForm xy{2, {{1}}};
  FiniteQuandle q = bilinear_form_quandle(xy);
  CHECK(q.table() == std::vector<Index>{0, 0, 1, 0});
  AxiomReport r = check_quandle(q);
  CHECK_FALSE(r.idempotent);
  CHECK_FALSE(r.right_translations_bijective);
  CHECK(r.right_distributive);
  CHECK_FALSE(r.is_rack());
  CHECK(is_antisymmetric(xy));
  CHECK_FALSE(is_alternating(xy));
  agrees_with_brute_force(q);

  // The standard symplectic form gives a quandle over Z/n.
  for (std::uint32_t n : {2u, 3u, 5u, 6u}) {
    BilinearForm omega{n, {{0, 1}, {n - 1, 0}}};
    CHECK(is_alternating(omega));
    CHECK(check_quandle(bilinear_form_quandle(omega)).is_quandle());
  }

  // Alternating implies antisymmetric on every Z/n form of rank <= 2; the
  // converse whenever 2 is a unit.
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (int code = 0; code < static_cast<int>(n * n * n * n); ++code) {
      int c = code;
      std::vector<std::vector<std::int64_t>> g(2, std::vector<std::int64_t>(2));
      for (auto& row : g)
        for (auto& v : row) {
          v = c % n;
          c /= n;
        }
      BilinearForm f{n, g};
      if (is_alternating(f)) CHECK(is_antisymmetric(f));
      if (n % 2 == 1 && is_antisymmetric(f)) CHECK(is_alternating(f));
    }
  }
}

TEST_CASE("quandle JSON") {
  FiniteQuandle r3 = dihedral_quandle(3);
  CHECK(to_json(r3).dump() == R"({"size":3,"table":[[0,2,1],[2,1,0],[1,0,2]]})");
  CHECK(quandle_from_json(to_json(r3)) == r3);
  CHECK_THROWS_AS(quandle_from_json(nlohmann::json::parse(R"({"size":2,"table":[[0,5],[1,1]]})")), DomainError);
  CHECK_THROWS(quandle_from_json(nlohmann::json::parse(R"({"table":3})")));
  FiniteGroup g = cyclic_group(3);
  CHECK(group_from_json(to_json(g)).table() == g.table());
  nlohmann::json report = to_json(check_quandle(FiniteQuandle(2, {0, 0, 0, 0})));
  CHECK(report["rack"] == false);
  CHECK(report["counterexample"].is_array());
}

TEST_CASE("every stock construction passes exhaustively") {
  for (const auto& g : stock_groups(24)) {
    CAPTURE(g.name);
    CHECK(check_quandle(conj_quandle(g.group)).is_quandle());
    CHECK(check_quandle(core_quandle(g.group)).is_quandle());
  }
}
