#include "trefoil/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <concepts>
#include <cstdio>
#include <numeric>
#include <thread>

#include "trefoil/continued_fraction.hpp"
#include "trefoil/error.hpp"
#include "trefoil/fraction.hpp"
#include "trefoil/groups.hpp"
#include "trefoil/long_knot.hpp"
#include "trefoil/orbit.hpp"
#include "trefoil/quandle.hpp"
#include "trefoil/sampling.hpp"
#include "trefoil/word.hpp"

namespace trefoil {

namespace {

// Sample sizes and ranges fixed by the acceptance criteria.
constexpr int kDihedralMax = 64;
constexpr std::size_t kAlexanderMaxOrder = 64;
constexpr std::size_t kGroupMaxOrder = 24;
constexpr int kRandomTriples = 10'000;
constexpr std::size_t kCoveredWordLength = 12;
constexpr int kMatrixPairs = 10'000;
constexpr int kWords = 1'000;
constexpr std::size_t kWordTail = 30;
constexpr int kCfCoordinate = 200;
constexpr int kCfMaxTerms = 8;
constexpr int kCfMaxTerm = 12;
constexpr int kBraidFractions = 10'000;
constexpr int kBraidWords = 100;
constexpr int kOrbitRange = 30;
constexpr int kPowPairs = 1'000;
constexpr int kPowRange = 20;
constexpr int kPowSpecialSamples = 1'000;
constexpr int kLongSamples = 1'000;
constexpr int kLongSmallSamples = 100;
constexpr int kFreenessRange = 5;
constexpr int kPlantedRange = 3;

// Counts checks and keeps the first failure's description.
class Tally {
 public:
  template <std::invocable Describe>
  void check(bool ok, Describe&& describe) {
    ++checks_;
    if (!ok && failures_++ == 0) first_ = describe();
  }
  void check(bool ok, const std::string& description) {
    check(ok, [&] { return description; });
  }
  void merge(const Tally& o) {
    if (failures_ == 0 && o.failures_ > 0) first_ = o.first_;
    checks_ += o.checks_;
    failures_ += o.failures_;
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failures";
    if (failures_) s += "; first: " + first_;
    return s;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

unsigned thread_count(const AcceptanceOptions& options) {
  unsigned n = options.threads ? options.threads : std::thread::hardware_concurrency();
  return n ? n : 1;
}

PFrac frac(const char* text) { return parse_frac(text); }

CriterionResult worked_identities(const AcceptanceOptions&) {
  struct Chain {
    const char *x, *y, *expected;
  };
  const Chain chains[] = {{"0/1", "1/0", "1/1"}, {"1/1", "0/1", "1/0"}, {"1/0", "0/1", "-1/1"}, {"-1/1", "1/0", "0/1"}};
  Tally t;
  std::string shown;
  for (const auto& c : chains) {
    PFrac got = pf_op(frac(c.x), frac(c.y));
    t.check(got == frac(c.expected), [&] { return std::string(c.x) + " * " + c.y + " = " + to_string(got); });
    if (!shown.empty()) shown += ", ";
    shown += std::string(c.x) + "*" + c.y + "=" + to_string(got);
  }
  return {1, "worked identities", t.ok(), shown + "; " + t.summary()};
}

CriterionResult matrix_generators(const AcceptanceOptions& options) {
  Tally t;
  const TransvectionMatrix tb{{1, 1, 0, 1}}, ta{{1, 0, -1, 1}};
  t.check(transvection_matrix(frac("1/0")) == tb, [&] { return "M(1/0) = " + to_string(transvection_matrix(frac("1/0"))); });
  t.check(transvection_matrix(frac("0/1")) == ta, [&] { return "M(0/1) = " + to_string(transvection_matrix(frac("0/1"))); });
  Rng rng(options.seed);
  for (int i = 0; i < kMatrixPairs; ++i) {
    PFrac x = random_frac(rng), y = random_frac(rng);
    TransvectionMatrix m = transvection_matrix(y);
    t.check(m.determinant() == 1, [&] { return "det M(" + to_string(y) + ") != 1"; });
    t.check(apply_matrix(m, x) == pf_op(x, y), [&] { return "M(" + to_string(y) + ") " + to_string(x) + " != pf_op"; });
  }
  return {2, "matrix generators", t.ok(), "M(1/0)=" + to_string(tb) + ", M(0/1)=" + to_string(ta) + "; " + t.summary()};
}

void check_finite(Tally& t, const std::string& name, const FiniteQuandle& q) {
  AxiomReport r = check_quandle(q);
  t.check(r.is_quandle(), [&] {
    return name + " fails " + (r.failed_axiom ? to_string(*r.failed_axiom) : std::string("?"));
  });
}

std::vector<std::pair<std::string, LaurentQuotientRing>> alexander_rings(std::size_t max_order) {
  std::vector<std::pair<std::string, LaurentQuotientRing>> out;
  for (std::uint32_t n = 2; n <= max_order; ++n) {
    std::size_t order = n;
    for (std::size_t d = 1; order <= max_order; ++d, order *= n) {
      // Every monic h of degree d with h(0) a unit, so that t is invertible.
      std::vector<std::int64_t> h(d + 1, 0);
      h[d] = 1;
      while (true) {
        if (std::gcd<std::int64_t>(h[0], n) == 1) {
          std::string name = "Z/" + std::to_string(n) + "[t]/(";
          for (std::size_t i = d + 1; i-- > 0;) name += std::to_string(h[i]) + (i ? "," : ")");
          out.emplace_back(std::move(name), LaurentQuotientRing(n, h));
        }
        std::size_t i = 0;
        while (i < d && ++h[i] == n) h[i++] = 0;
        if (i == d) break;
      }
    }
  }
  return out;
}

CriterionResult quandle_axioms(const AcceptanceOptions& options) {
  Tally dihedral, alexander, groups, fractions, covered;
  for (int n = 1; n <= kDihedralMax; ++n) check_finite(dihedral, "dihedral:" + std::to_string(n), dihedral_quandle(n));
  for (const auto& [name, ring] : alexander_rings(kAlexanderMaxOrder)) check_finite(alexander, name, alexander_quandle(ring));
  for (const auto& g : stock_groups(kGroupMaxOrder)) {
    check_finite(groups, "conj " + g.name, conj_quandle(g.group));
    check_finite(groups, "core " + g.name, core_quandle(g.group));
  }

  Rng rng(options.seed + 3);
  for (int i = 0; i < kRandomTriples; ++i) {
    PFrac x = random_frac(rng), y = random_frac(rng), z = random_frac(rng);
    auto where = [&] { return "fractions " + to_string(x) + ", " + to_string(y) + ", " + to_string(z); };
    fractions.check(pf_op(x, x) == x, where);
    fractions.check(pf_op_inv(pf_op(x, y), y) == x && pf_op(pf_op_inv(x, y), y) == x, where);
    fractions.check(pf_op(pf_op(x, y), z) == pf_op(pf_op(x, z), pf_op(y, z)), where);
  }
  for (int i = 0; i < kRandomTriples; ++i) {
    auto sample = [&] { return qt_new(BraidElement(random_balanced_braid_word(rng, kCoveredWordLength))); };
    CoveredElement x = sample(), y = sample(), z = sample();
    auto where = [&] {
      return "covered g' = " + to_string(x.g_prime()) + ", " + to_string(y.g_prime()) + ", " + to_string(z.g_prime());
    };
    covered.check(qt_op(x, x) == x, where);
    covered.check(qt_op_inv(qt_op(x, y), y) == x && qt_op(qt_op_inv(x, y), y) == x, where);
    covered.check(qt_op(qt_op(x, y), z) == qt_op(qt_op(x, z), qt_op(y, z)), where);
  }

  std::string detail = "dihedral n<=64: " + dihedral.summary() + "; alexander order<=64 (" +
                       std::to_string(alexander.checks()) + " rings): " + alexander.summary() +
                       "; conj/core order<=24: " + groups.summary() + "; fraction triples: " + fractions.summary() +
                       "; covered triples: " + covered.summary();
  bool ok = dihedral.ok() && alexander.ok() && groups.ok() && fractions.ok() && covered.ok();
  return {3, "quandle axioms", ok, detail};
}

CriterionResult isomorphism_certificate(const AcceptanceOptions& options) {
  Rng rng(options.seed + 4);
  Tally t;
  for (int i = 0; i < kWords; ++i) {
    QWord w = random_word(rng, kWordTail);
    NormalForm nf = normalize(w);
    PFrac value = word_to_frac(w);
    std::string text = render_word(w);
    t.check(word_to_frac(to_word(nf)) == value, [&] { return text + ": normal form changes the fraction"; });
    t.check(frac_to_word(value) == nf, [&] { return text + ": frac_to_word disagrees with normalize"; });
    t.check(nf.is_valid(), [&] { return text + ": invalid normal form " + to_string(nf); });
  }
  return {4, "isomorphism certificate", t.ok(), std::to_string(kWords) + " words: " + t.summary()};
}

// cf_expand(cf_eval(terms)) == terms over the whole grid, on machine integers.
// Largest value is below 13^8, so int64 cannot overflow.
Tally cf_grid(unsigned threads, std::size_t& lists) {
  struct Job {
    int n, k1;
  };
  std::vector<Job> jobs;
  for (int n = 1; n <= kCfMaxTerms; ++n)
    for (int k1 = -kCfMaxTerm; k1 <= kCfMaxTerm; ++k1) jobs.push_back({n, k1});

  std::atomic<std::size_t> next{0}, total{0};
  std::vector<Tally> tallies(threads);
  auto worker = [&](Tally& tally) {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const Job job = jobs[j];
      std::vector<std::int64_t> terms(job.n, 1);
      terms[0] = job.k1;
      if (job.n >= 2) terms.back() = 2;
      std::size_t count = 0, failures = 0;
      std::vector<std::int64_t> first_bad;
      while (true) {
        ++count;
        auto [p, q] = detail::eval_terms<std::int64_t>(terms);
        std::size_t idx = 0;
        bool same = true;
        detail::expand_terms<std::int64_t>(p, q, [&](std::int64_t k) {
          if (idx >= terms.size() || k != terms[idx]) return same = false;
          ++idx;
          return true;
        });
        if (!same || idx != terms.size()) {
          if (failures++ == 0) first_bad = terms;
        }
        // Odometer over positions 1..n-1; the last term runs from 2.
        std::size_t i = 1;
        for (; i < terms.size(); ++i) {
          if (++terms[i] <= kCfMaxTerm) break;
          terms[i] = i + 1 == terms.size() ? 2 : 1;
        }
        if (i >= terms.size()) break;
      }
      total += count;
      if (failures) {
        std::string s = "[";
        for (std::size_t i = 0; i < first_bad.size(); ++i) s += (i ? "," : "") + std::to_string(first_bad[i]);
        tally.check(false, s + "] does not round-trip (" + std::to_string(failures) + " in this block)");
      } else {
        tally.check(true, "");
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker, std::ref(tallies[i]));
  worker(tallies[0]);
  for (auto& th : pool) th.join();
  Tally all;
  for (const auto& t : tallies) all.merge(t);
  lists = total;
  return all;
}

CriterionResult continued_fractions(const AcceptanceOptions& options) {
  Tally rationals;
  for (int q = 1; q <= kCfCoordinate; ++q)
    for (int p = -kCfCoordinate; p <= kCfCoordinate; ++p) {
      if (std::gcd(p, q) != 1) continue;
      PFrac x = PFrac::make(p, q);
      rationals.check(cf_eval(cf_expand(x)) == x, [&] { return to_string(x) + " does not round-trip"; });
    }

  std::size_t lists = 0;
  Tally grid = cf_grid(thread_count(options), lists);

  // The same round trip on unbounded integers, for a sample of the grid.
  Rng rng(options.seed + 5);
  Tally sample;
  std::uniform_int_distribution<int> length(1, kCfMaxTerms), k1(-kCfMaxTerm, kCfMaxTerm), k(1, kCfMaxTerm),
      last(2, kCfMaxTerm);
  for (int i = 0; i < kWords * 10; ++i) {
    ContinuedFraction cf;
    int n = length(rng);
    cf.terms.push_back(k1(rng));
    for (int j = 1; j < n; ++j) cf.terms.push_back(j + 1 == n ? last(rng) : k(rng));
    sample.check(cf_expand(cf_eval(cf)) == cf, [&] { return to_string(cf) + " does not round-trip"; });
  }

  bool ok = rationals.ok() && grid.ok() && sample.ok();
  return {5, "continued fractions", ok,
          "rationals |p|,|q|<=200: " + rationals.summary() + "; term lists n<=8 (" + std::to_string(lists) +
              " lists, " + std::to_string(grid.checks()) + " blocks): " + grid.summary() + "; unbounded sample: " +
              sample.summary()};
}

CriterionResult braid_relation(const AcceptanceOptions& options) {
  Rng rng(options.seed + 6);
  const PFrac a = PFrac::zero(), b = PFrac::infinity();
  Tally fracs, words;
  for (int i = 0; i < kBraidFractions; ++i) {
    PFrac x = random_frac(rng);
    fracs.check(pf_op(pf_op(pf_op(x, a), b), a) == pf_op(pf_op(pf_op(x, b), a), b), [&] { return to_string(x); });
  }
  for (int i = 0; i < kBraidWords; ++i) {
    QWord w = random_word(rng, kWordTail);
    words.check(braid_relation_holds(w), [&] { return render_word(w); });
  }
  return {6, "braid relation x*a*b*a = x*b*a*b", fracs.ok() && words.ok(),
          "fractions: " + fracs.summary() + "; words: " + words.summary()};
}

CriterionResult surjectivity_witness(const AcceptanceOptions&) {
  std::vector<PFrac> targets{PFrac::infinity()};
  for (int q = 1; q <= kOrbitRange; ++q)
    for (int p = -kOrbitRange; p <= kOrbitRange; ++p)
      if (std::gcd(p, q) == 1) targets.push_back(PFrac::make(p, q));
  OrbitReport report = orbit_bfs(targets, Int(kOrbitRange));
  Tally t;
  for (const PFrac& x : targets) {
    auto node = report.find(x);
    t.check(node.has_value(), [&] { return to_string(x) + " not reached"; });
    if (!node) continue;
    std::string w = report.witness(*node);
    t.check(word_to_frac(parse_word(w)) == x, [&] { return "witness " + w + " does not evaluate to " + to_string(x); });
  }
  return {7, "surjectivity witness", t.ok(),
          std::to_string(targets.size()) + " targets, " + std::to_string(report.nodes().size()) +
              " orbit points within the bound: " + t.summary()};
}

CriterionResult power_formulas(const AcceptanceOptions& options) {
  Rng rng(options.seed + 8);
  Tally iterated, special;
  for (int i = 0; i < kPowPairs; ++i) {
    PFrac x = random_frac(rng), y = random_frac(rng);
    PFrac up = x, down = x;
    iterated.check(pf_op_pow(x, y, 0) == x, [&] { return to_string(x) + " * " + to_string(y) + "^0"; });
    for (int k = 1; k <= kPowRange; ++k) {
      up = pf_op(up, y);
      down = pf_op_inv(down, y);
      iterated.check(pf_op_pow(x, y, k) == up, [&] { return to_string(x) + " * " + to_string(y) + "^" + std::to_string(k); });
      iterated.check(pf_op_pow(x, y, -k) == down,
                     [&] { return to_string(x) + " * " + to_string(y) + "^-" + std::to_string(k); });
    }
  }
  const PFrac a = PFrac::zero(), b = PFrac::infinity();
  std::uniform_int_distribution<long> exponent(1, 1'000'000);
  for (int i = 0; i < kPowSpecialSamples; ++i) {
    PFrac x = random_frac(rng);
    Int k = exponent(rng);
    const Int &p = x.p(), &q = x.q();
    auto where = [&] { return to_string(x) + " with k = " + to_string(k); };
    special.check(pf_op_pow(x, a, k) == PFrac::make(p, q - k * p), where);
    special.check(pf_op_pow(x, a, -k) == PFrac::make(p, q + k * p), where);
    special.check(pf_op_pow(x, b, k) == PFrac::make(p + k * q, q), where);
    special.check(pf_op_pow(x, b, -k) == PFrac::make(p - k * q, q), where);
  }
  return {8, "power formulas", iterated.ok() && special.ok(),
          "iterated |k|<=20: " + iterated.summary() + "; closed forms (i)-(iv): " + special.summary()};
}

CriterionResult long_trefoil(const AcceptanceOptions& options) {
  Rng rng(options.seed + 9);
  auto sample = [&] { return qt_new(BraidElement(random_balanced_braid_word(rng, kCoveredWordLength))); };
  auto g = [](const CoveredElement& p) { return to_string(p.g_prime()); };
  Tally slots, covering, representation, lambda, freeness, fibers;

  for (int i = 0; i < kLongSamples; ++i) {
    CoveredElement p = sample(), q = sample();
    slots.check(braid_eq(qt_op_slot_via_x(p, q), qt_op_slot_via_m(p, q)), [&] { return "* on " + g(p) + ", " + g(q); });
    slots.check(braid_eq(qt_op_inv_slot_via_x(p, q), qt_op_inv_slot_via_m(p, q)),
                [&] { return "*bar on " + g(p) + ", " + g(q); });
  }
  std::uniform_int_distribution<int> planted(-kPlantedRange, kPlantedRange);
  for (int i = 0; i < kLongSamples; ++i) {
    CoveredElement base = sample(), x = sample();
    int k = 0;
    while (k == 0) k = planted(rng);
    CoveredElement y = lambda_act(k, x);
    covering.check(qt_op(base, x) == qt_op(base, y), [&] { return g(base) + " on fibre of " + g(x); });
  }
  for (int i = 0; i < kLongSamples; ++i) {
    CoveredElement p = sample(), q = sample();
    representation.check(braid_eq(covering_p(qt_op(p, q)), conjugate(covering_p(p), covering_p(q))),
                         [&] { return g(p) + ", " + g(q); });
  }

  const BraidElement m = meridian(), l = longitude();
  lambda.check(exponent_sum(l) == 0, "eps(lambda) != 0");
  lambda.check(braid_eq(l * m, m * l), "lambda does not commute with m");
  lambda.check(!braid_eq(l, BraidElement()), "lambda is trivial");

  for (int i = 0; i < kLongSmallSamples; ++i) {
    CoveredElement p = sample();
    for (int k = -kFreenessRange; k <= kFreenessRange; ++k) {
      if (k == 0) continue;
      freeness.check(!(lambda_act(k, p) == p), [&] { return "lambda^" + std::to_string(k) + " fixes " + g(p); });
    }
  }
  for (int i = 0; i < kLongSmallSamples; ++i) {
    CoveredElement p = sample();
    int k = planted(rng);
    std::string got;
    try {
      got = std::to_string(fiber_compare(p, lambda_act(k, p)));
    } catch (const DomainError& e) {
      got = e.what();
    }
    fibers.check(got == std::to_string(k), [&] { return "planted " + std::to_string(k) + " on " + g(p) + ", got " + got; });
  }

  bool ok = slots.ok() && covering.ok() && representation.ok() && lambda.ok() && freeness.ok() && fibers.ok();
  return {9, "long trefoil", ok,
          "slot forms: " + slots.summary() + "; covering: " + covering.summary() + "; representation: " +
              representation.summary() + "; lambda: " + lambda.summary() + "; freeness: " + freeness.summary() +
              "; fiber_compare: " + fibers.summary()};
}

// Every Gram matrix with entries in `values` on rank r.
template <typename Visit>
void for_each_gram(std::size_t rank, const std::vector<std::int64_t>& values, Visit&& visit) {
  std::vector<std::size_t> digits(rank * rank, 0);
  while (true) {
    std::vector<std::vector<std::int64_t>> gram(rank, std::vector<std::int64_t>(rank));
    for (std::size_t i = 0; i < digits.size(); ++i) gram[i / rank][i % rank] = values[digits[i]];
    visit(gram);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == values.size()) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

CriterionResult symplectic_forms(const AcceptanceOptions&) {
  BilinearForm z2{2, {{1}}};
  AxiomReport r = check_quandle(bilinear_form_quandle(z2));
  std::string z2_detail = std::string("Z/2 rank 1, <x,y> = xy: rack ") + (r.is_rack() ? "yes" : "no") + ", idempotent " +
                          (r.idempotent ? "yes" : "no");
  if (!r.right_translations_bijective) z2_detail += " (right translation by 1 is not a bijection: 0*1 = 1*1 = 0)";
  bool z2_ok = r.is_rack() && !r.idempotent;

  Tally equivalence;
  for (std::size_t rank = 1; rank <= 2; ++rank) {
    for_each_gram(rank, {0, 1, 2, 3, 4}, [&](const auto& gram) {
      BilinearForm f{5, gram};
      equivalence.check(is_alternating(f) == is_antisymmetric(f), [&] { return "Z/5 form of rank " + std::to_string(rank); });
    });
    for_each_gram(rank, {-2, -1, 0, 1, 2}, [&](const auto& gram) {
      BilinearForm f{0, gram};
      equivalence.check(is_alternating(f) == is_antisymmetric(f), [&] { return "Z form of rank " + std::to_string(rank); });
    });
  }
  return {10, "symplectic forms", z2_ok && equivalence.ok(),
          z2_detail + "; alternating <=> antisymmetric over Z/5 and Z, rank <= 2: " + equivalence.summary()};
}

using Runner = CriterionResult (*)(const AcceptanceOptions&);
constexpr Runner kRunners[kCriterionCount] = {worked_identities,   matrix_generators, quandle_axioms, isomorphism_certificate,
                                              continued_fractions, braid_relation,    surjectivity_witness,
                                              power_formulas,      long_trefoil,      symplectic_forms};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw DomainError("no acceptance criterion " + std::to_string(id));
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[id - 1](options);
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  std::vector<CriterionResult> results;
  for (int id : ids) {
    results.push_back(run_criterion(id, options));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " + r.name +
         ": " + r.detail + " (" + seconds + ")";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace trefoil
