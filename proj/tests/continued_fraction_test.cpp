#include <doctest.h>

#include "trefoil/continued_fraction.hpp"
#include "trefoil/error.hpp"

using namespace trefoil;

namespace {

ContinuedFraction cf(std::initializer_list<long> terms) {
  ContinuedFraction c;
  for (long k : terms) c.terms.emplace_back(k);
  return c;
}

// Value of the terms by direct rational arithmetic, as num/den pairs.
PFrac naive_value(const ContinuedFraction& c) {
  Int num = c.terms.back(), den = 1;
  for (std::size_t i = c.terms.size() - 1; i-- > 0;) {
    // k + 1/(num/den) = (k num + den) / num
    Int next = c.terms[i] * num + den;
    den = num;
    num = next;
  }
  return PFrac::make(num, den);
}

}  // namespace

TEST_CASE("expansion examples") {
  CHECK(cf_expand(parse_frac("5")) == cf({5}));
  CHECK(cf_expand(parse_frac("7/3")) == cf({2, 3}));
  CHECK(cf_expand(parse_frac("-1/2")) == cf({-1, 2}));
  CHECK(cf_expand(parse_frac("0/1")) == cf({0}));
  CHECK(cf_expand(parse_frac("-7/3")) == cf({-3, 1, 2}));
  CHECK_THROWS_AS(cf_expand(PFrac::infinity()), DomainError);
}

TEST_CASE("evaluation examples") {
  CHECK(cf_eval(cf({2, 3})) == parse_frac("7/3"));
  CHECK(cf_eval(cf({-4})) == parse_frac("-4"));
  CHECK(cf_eval(cf({-1, 2})) == parse_frac("-1/2"));
  CHECK_THROWS_AS(cf_eval(cf({2, 1})), DomainError);
  CHECK_THROWS_AS(cf_eval(cf({2, 0, 3})), DomainError);
  CHECK_THROWS_AS(cf_eval(ContinuedFraction{}), DomainError);
}

TEST_CASE("validation") {
  CHECK(cf_validate(cf({2, 3}).terms));
  CHECK_FALSE(cf_validate(cf({2, 1}).terms));
  CHECK(cf_validate(cf({7}).terms));
  CHECK(cf_validate(cf({1}).terms));
  CHECK(cf_validate(cf({-5, 1, 1, 2}).terms));
  CHECK_FALSE(cf_validate(cf({-5, -1, 2}).terms));
  CHECK_THROWS_AS(cf_validate(std::vector<Int>{}), DomainError);
}

TEST_CASE("text and JSON") {
  CHECK(to_string(cf({2, 3})) == "[2;3]");
  CHECK(to_string(cf({5})) == "[5]");
  CHECK(parse_cf("[2;3]") == cf({2, 3}));
  CHECK(parse_cf(" [ -1 ; 2 , 3 ] ") == cf({-1, 2, 3}));
  CHECK(parse_cf("[7]") == cf({7}));
  CHECK_THROWS_AS(parse_cf("2;3"), ParseError);
  CHECK_THROWS_AS(parse_cf("[2,3]"), ParseError);
  CHECK_THROWS_AS(parse_cf("[]"), ParseError);
  CHECK_THROWS_AS(parse_cf("[2;]"), ParseError);
  CHECK(to_json(cf({2, 3})).dump() == R"({"terms":["2","3"]})");
  CHECK(cf_from_json(to_json(cf({-9, 4}))) == cf({-9, 4}));
  CHECK(cf_from_json(nlohmann::json::parse(R"({"terms":[1, 2]})")) == cf({1, 2}));
}

TEST_CASE("round trip over rationals with a step bound") {
  for (int q = 1; q <= 120; ++q)
    for (int p = -120; p <= 120; ++p) {
      if (std::gcd(p, q) != 1) continue;
      PFrac x = PFrac::make(p, q);
      ContinuedFraction c = cf_expand(x);
      CHECK(cf_validate(c.terms));
      CHECK(cf_eval(c) == x);
      CHECK(naive_value(c) == x);
      std::size_t bits = mpz_sizeinbase(Int(q).get_mpz_t(), 2);
      CHECK(c.terms.size() <= 2 * bits + 2);
    }
}

TEST_CASE("round trip over term lists") {
  // All lists with n <= 4 and terms in a small range.
  std::vector<long> t;
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<long> terms(n, 1);
    terms[0] = -6;
    if (n >= 2) terms.back() = 2;
    while (true) {
      ContinuedFraction c;
      for (long k : terms) c.terms.emplace_back(k);
      CHECK(cf_expand(naive_value(c)) == c);
      ++checked;
      std::size_t i = 0;
      for (; i < terms.size(); ++i) {
        long lo = i == 0 ? -6 : (i + 1 == terms.size() ? 2 : 1);
        if (++terms[i] <= 6) break;
        terms[i] = lo;
      }
      if (i == terms.size()) break;
    }
  }
  CHECK(checked == 13 + 13 * 5 + 13 * 6 * 5 + 13 * 6 * 6 * 5);
}

TEST_CASE("int64 and unbounded instantiations agree") {
  for (std::int64_t p = -300; p <= 300; p += 7)
    for (std::int64_t q = 1; q <= 300; q += 11) {
      std::vector<std::int64_t> small;
      detail::expand_terms<std::int64_t>(p, q, [&](std::int64_t k) {
        small.push_back(k);
        return true;
      });
      std::vector<Int> big;
      detail::expand_terms<Int>(Int(static_cast<long>(p)), Int(static_cast<long>(q)), [&](const Int& k) {
        big.push_back(k);
        return true;
      });
      REQUIRE(small.size() == big.size());
      for (std::size_t i = 0; i < small.size(); ++i) CHECK(big[i] == static_cast<long>(small[i]));
      auto [np, nq] = detail::eval_terms<std::int64_t>(small);
      CHECK(np * q == nq * p);
    }
}

TEST_CASE("long expansions") {
  // Ratio of consecutive Fibonacci numbers: all ones with a final 2.
  Int a = 1, b = 1;
  for (int i = 0; i < 300; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  ContinuedFraction c = cf_expand(PFrac::make(b, a));
  CHECK(c.terms.size() == 300);
  CHECK(c.terms.back() == 2);
  CHECK(cf_eval(c) == PFrac::make(b, a));
}
