#include "trefoil/quandle.hpp"

#include <cctype>
#include <numeric>

#include "trefoil/error.hpp"

namespace trefoil {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Inverse of a modulo n by extended Euclid; nullopt if gcd(a, n) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, n);
}

// Enumerates every vector in {lo..hi}^rank.
template <typename Fn>
void for_each_vector(std::size_t rank, std::int64_t lo, std::int64_t hi, Fn&& fn) {
  std::vector<std::int64_t> v(rank, lo);
  while (true) {
    fn(std::span<const std::int64_t>(v));
    std::size_t i = 0;
    while (i < rank && v[i] == hi) v[i++] = lo;
    if (i == rank) return;
    ++v[i];
  }
}

std::pair<std::int64_t, std::int64_t> carrier_range(const BilinearForm& form) {
  if (form.modulus == 0) return {-2, 2};
  return {0, static_cast<std::int64_t>(form.modulus) - 1};
}

void validate_form(const BilinearForm& form) {
  if (form.gram.empty()) throw DomainError("bilinear form: empty Gram matrix");
  for (const auto& row : form.gram)
    if (row.size() != form.gram.size()) throw DomainError("bilinear form: Gram matrix is not square");
}

}  // namespace

FiniteQuandle::FiniteQuandle(std::size_t size, std::vector<Index> table)
    : size_(size), table_(std::move(table)) {
  if (size_ == 0) throw DomainError("finite quandle: size must be positive");
  if (table_.size() != size_ * size_) throw DomainError("finite quandle: table is not size x size");
  for (Index v : table_)
    if (v >= size_) throw DomainError("finite quandle: table entry " + std::to_string(v) + " out of range");
}

FiniteQuandle FiniteQuandle::from_rows(const std::vector<std::vector<Index>>& rows) {
  std::vector<Index> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DomainError("finite quandle: table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteQuandle(rows.size(), std::move(flat));
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Idempotence: return "idempotence";
    case Axiom::RightInvertibility: return "right-invertibility";
    case Axiom::RightDistributivity: return "right-distributivity";
  }
  return "?";
}

AxiomReport check_rack(const FiniteQuandle& q) {
  const auto n = static_cast<Index>(q.size());
  AxiomReport r;
  std::optional<std::array<Index, 3>> bij, dist, idem;

  std::vector<Index> preimage(n);
  std::vector<bool> seen(n);
  for (Index b = 0; b < n && !bij; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index c = 0; c < n; ++c) {
      Index v = q.op(c, b);
      if (seen[v]) {
        bij = std::array<Index, 3>{preimage[v], c, b};
        break;
      }
      seen[v] = true;
      preimage[v] = c;
    }
  }
  for (Index a = 0; a < n && !dist; ++a)
    for (Index b = 0; b < n && !dist; ++b)
      for (Index c = 0; c < n; ++c) {
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c))) {
          dist = std::array<Index, 3>{a, b, c};
          break;
        }
      }
  for (Index a = 0; a < n; ++a)
    if (q.op(a, a) != a) {
      idem = std::array<Index, 3>{a, a, a};
      break;
    }

  r.right_translations_bijective = !bij;
  r.right_distributive = !dist;
  r.idempotent = !idem;
  if (bij) {
    r.failed_axiom = Axiom::RightInvertibility;
    r.counterexample = bij;
  } else if (dist) {
    r.failed_axiom = Axiom::RightDistributivity;
    r.counterexample = dist;
  } else if (idem) {
    r.failed_axiom = Axiom::Idempotence;
    r.counterexample = idem;
  }
  return r;
}

AxiomReport check_quandle(const FiniteQuandle& q) { return check_rack(q); }

bool counterexample_reproduces(const FiniteQuandle& q, const AxiomReport& report) {
  if (!report.failed_axiom) return !report.counterexample.has_value();
  if (!report.counterexample) return false;
  auto [x, y, z] = *report.counterexample;
  if (x >= q.size() || y >= q.size() || z >= q.size()) return false;
  switch (*report.failed_axiom) {
    case Axiom::Idempotence: return q.op(x, x) != x;
    case Axiom::RightInvertibility: return x != y && q.op(x, z) == q.op(y, z);
    case Axiom::RightDistributivity: return q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z));
  }
  return false;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<Index>> mul) : mul_(std::move(mul)) {
  const std::size_t n = mul_.size();
  if (n == 0) throw DomainError("group: empty table");
  for (const auto& row : mul_) {
    if (row.size() != n) throw DomainError("group: table is not square");
    for (Index v : row)
      if (v >= n) throw DomainError("group: table entry out of range");
  }
  std::optional<Index> e;
  for (Index i = 0; i < n && !e; ++i) {
    bool ok = true;
    for (Index g = 0; g < n && ok; ++g) ok = mul_[i][g] == g && mul_[g][i] == g;
    if (ok) e = i;
  }
  if (!e) throw DomainError("group: no identity element");
  identity_ = *e;
  inverse_.assign(n, 0);
  for (Index g = 0; g < n; ++g) {
    bool found = false;
    for (Index h = 0; h < n && !found; ++h)
      if (mul_[g][h] == identity_ && mul_[h][g] == identity_) {
        inverse_[g] = h;
        found = true;
      }
    if (!found) throw DomainError("group: element " + std::to_string(g) + " has no inverse");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw DomainError("group: multiplication is not associative");
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < size(); ++a)
    for (Index b = 0; b < a; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

LaurentQuotientRing::LaurentQuotientRing(std::uint32_t modulus, std::vector<std::int64_t> h) : n_(modulus) {
  if (n_ == 0) throw DomainError("Laurent quotient ring: modulus must be positive");
  const auto n = static_cast<std::int64_t>(n_);
  std::vector<std::int64_t> reduced;
  for (auto c : h) reduced.push_back(mod(c, n));
  while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
  if (reduced.size() < 2) throw DomainError("Laurent quotient ring: h(t) must have degree >= 1 mod n");
  auto lead_inv = inverse_mod(reduced.back(), n);
  if (!lead_inv) throw DomainError("Laurent quotient ring: leading coefficient of h(t) is not a unit mod n");
  for (auto& c : reduced) c = mod(c * *lead_inv, n);
  h_.assign(reduced.begin(), reduced.end());

  // t * (h1 + h2 t + ... + t^(d-1)) = -h0, so t is a unit iff h0 is.
  auto h0_inv = inverse_mod(h_[0], n);
  if (!h0_inv) throw DomainError("Laurent quotient ring: t is not a unit (h(0) is not invertible mod n)");
  const std::size_t d = degree();
  t_inverse_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    t_inverse_[i] = static_cast<std::uint32_t>(mod(-static_cast<std::int64_t>(h_[i + 1]) * *h0_inv, n));

  Element one(d, 0);
  one[0] = 1 % n_;
  if (times_t(t_inverse_) != one) throw DomainError("Laurent quotient ring: failed to invert t");
}

std::size_t LaurentQuotientRing::element_count() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree(); ++i) count *= n_;
  return count;
}

LaurentQuotientRing::Element LaurentQuotientRing::decode(Index index) const {
  Element e(degree());
  for (auto& c : e) {
    c = index % n_;
    index /= n_;
  }
  return e;
}

Index LaurentQuotientRing::encode(const Element& e) const {
  Index index = 0;
  for (std::size_t i = e.size(); i-- > 0;) index = index * n_ + e[i];
  return index;
}

LaurentQuotientRing::Element LaurentQuotientRing::times_t(const Element& e) const {
  const std::size_t d = degree();
  const auto n = static_cast<std::int64_t>(n_);
  const std::int64_t top = e[d - 1];
  Element out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    std::int64_t v = (i == 0 ? 0 : e[i - 1]) - top * static_cast<std::int64_t>(h_[i]);
    out[i] = static_cast<std::uint32_t>(mod(v, n));
  }
  return out;
}

LaurentQuotientRing::Element LaurentQuotientRing::times_t_inverse(const Element& e) const {
  // Horner on e(t) * t^-1 = e0 t^-1 + e1 + e2 t + ...
  const std::size_t d = degree();
  Element out(d, 0);
  for (std::size_t i = 1; i < d; ++i) out[i - 1] = e[i];
  Element scaled(d);
  for (std::size_t i = 0; i < d; ++i)
    scaled[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(e[0]) * t_inverse_[i]) % n_);
  return add(out, scaled);
}

LaurentQuotientRing::Element LaurentQuotientRing::add(const Element& x, const Element& y) const {
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<std::uint32_t>((x[i] + static_cast<std::uint64_t>(y[i])) % n_);
  return out;
}

LaurentQuotientRing::Element LaurentQuotientRing::sub(const Element& x, const Element& y) const {
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<std::uint32_t>((x[i] + static_cast<std::uint64_t>(n_) - y[i]) % n_);
  return out;
}

std::vector<std::int64_t> parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial");

  struct Term {
    std::int64_t coef;
    std::int64_t exp;
  };
  std::vector<Term> terms;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("malformed polynomial '" + std::string(text) + "'"); };
  auto read_number = [&](std::int64_t& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || i - start > 9) return false;
    out = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      fail();
    }
    std::int64_t coef = 1;
    bool have_coef = read_number(coef);
    if (have_coef && i < s.size() && s[i] == '*') ++i;
    std::int64_t exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::int64_t esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        if (!read_number(exp)) fail();
        exp *= esign;
      }
    } else if (!have_coef) {
      fail();
    }
    terms.push_back({sign * coef, exp});
  }
  std::int64_t lo = 0, hi = 0;
  for (const auto& t : terms) {
    lo = std::min(lo, t.exp);
    hi = std::max(hi, t.exp);
  }
  if (hi - lo > 64) throw ParseError("polynomial degree too large");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& t : terms) coeffs[static_cast<std::size_t>(t.exp - lo)] += t.coef;
  return coeffs;
}

FiniteQuandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw DomainError("dihedral quandle: n must be positive");
  std::vector<Index> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Index>((2 * j + n - i) % n);
  return FiniteQuandle(n, std::move(t));
}

FiniteQuandle conj_quandle(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<Index> t(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a * n + b] = g.mul(g.mul(g.inverse(b), a), b);
  return FiniteQuandle(n, std::move(t));
}

FiniteQuandle core_quandle(const FiniteGroup& g) {
  const std::size_t n = g.size();
  std::vector<Index> t(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a * n + b] = g.mul(g.mul(b, g.inverse(a)), b);
  return FiniteQuandle(n, std::move(t));
}

FiniteQuandle automorphism_quandle(const FiniteGroup& g, std::span<const Index> tau) {
  const std::size_t n = g.size();
  if (tau.size() != n) throw DomainError("automorphism quandle: tau has wrong length");
  std::vector<bool> hit(n, false);
  for (Index v : tau) {
    if (v >= n || hit[v]) throw DomainError("automorphism quandle: tau is not a permutation");
    hit[v] = true;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (tau[g.mul(a, b)] != g.mul(tau[a], tau[b]))
        throw DomainError("automorphism quandle: tau is not a homomorphism");
  std::vector<Index> t(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a * n + b] = g.mul(tau[g.mul(a, g.inverse(b))], b);
  return FiniteQuandle(n, std::move(t));
}

FiniteQuandle alexander_quandle(const LaurentQuotientRing& ring) {
  const std::size_t n = ring.element_count();
  std::vector<LaurentQuotientRing::Element> elems;
  elems.reserve(n);
  for (Index i = 0; i < n; ++i) elems.push_back(ring.decode(i));
  std::vector<Index> t(n * n);
  // t a + (1 - t) b = t (a - b) + b
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      t[a * n + b] = ring.encode(ring.add(ring.times_t(ring.sub(elems[a], elems[b])), elems[b]));
  return FiniteQuandle(n, std::move(t));
}

std::int64_t BilinearForm::eval(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram[i][j] * y[j];
  return modulus == 0 ? s : mod(s, modulus);
}

FiniteQuandle bilinear_form_quandle(const BilinearForm& form) {
  validate_form(form);
  if (form.modulus == 0) throw DomainError("bilinear form quandle: carrier must be finite (modulus > 0)");
  const std::size_t r = form.rank();
  const auto n = static_cast<std::int64_t>(form.modulus);
  std::vector<std::vector<std::int64_t>> elems;
  for_each_vector(r, 0, n - 1, [&](std::span<const std::int64_t> v) { elems.emplace_back(v.begin(), v.end()); });
  // for_each_vector varies coordinate 0 fastest, matching index = sum v_i n^i.
  auto encode = [&](const std::vector<std::int64_t>& v) {
    Index idx = 0;
    for (std::size_t i = r; i-- > 0;) idx = static_cast<Index>(idx * n + v[i]);
    return idx;
  };
  const std::size_t size = elems.size();
  std::vector<Index> t(size * size);
  std::vector<std::int64_t> out(r);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      std::int64_t d = form.eval(elems[a], elems[b]);
      for (std::size_t i = 0; i < r; ++i) out[i] = mod(elems[a][i] - d * elems[b][i], n);
      t[a * size + b] = encode(out);
    }
  return FiniteQuandle(size, std::move(t));
}

bool is_alternating(const BilinearForm& form) {
  validate_form(form);
  auto [lo, hi] = carrier_range(form);
  bool ok = true;
  for_each_vector(form.rank(), lo, hi, [&](std::span<const std::int64_t> x) { ok = ok && form.eval(x, x) == 0; });
  return ok;
}

bool is_antisymmetric(const BilinearForm& form) {
  validate_form(form);
  auto [lo, hi] = carrier_range(form);
  const auto n = static_cast<std::int64_t>(form.modulus);
  bool ok = true;
  for_each_vector(form.rank(), lo, hi, [&](std::span<const std::int64_t> x) {
    std::vector<std::int64_t> xv(x.begin(), x.end());
    for_each_vector(form.rank(), lo, hi, [&](std::span<const std::int64_t> y) {
      std::int64_t s = form.eval(xv, y) + form.eval(y, xv);
      if (n != 0) s = mod(s, n);
      ok = ok && s == 0;
    });
  });
  return ok;
}

namespace {

nlohmann::json rows_to_json(std::size_t n, auto&& at) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(at(i, j));
    rows.push_back(std::move(row));
  }
  return {{"size", n}, {"table", std::move(rows)}};
}

std::vector<std::vector<Index>> rows_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table"))
    throw ParseError("expected {\"size\": n, \"table\": [[...]]}");
  if (!j["size"].is_number_unsigned()) throw ParseError("\"size\" must be a non-negative integer");
  const auto n = j["size"].get<std::size_t>();
  const auto& table = j["table"];
  if (!table.is_array() || table.size() != n) throw DomainError("table must have \"size\" rows");
  std::vector<std::vector<Index>> rows;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != n) throw DomainError("table must be size x size");
    std::vector<Index> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("table entries must be integers");
      auto x = v.get<std::int64_t>();
      if (x < 0 || static_cast<std::uint64_t>(x) >= n) throw DomainError("table entry " + std::to_string(x) + " out of range");
      r.push_back(static_cast<Index>(x));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const FiniteQuandle& q) {
  return rows_to_json(q.size(), [&](std::size_t i, std::size_t j) { return q.op(static_cast<Index>(i), static_cast<Index>(j)); });
}

nlohmann::json to_json(const FiniteGroup& g) {
  return rows_to_json(g.size(), [&](std::size_t i, std::size_t j) { return g.mul(static_cast<Index>(i), static_cast<Index>(j)); });
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json j = {
      {"idempotent", report.idempotent},
      {"right_translations_bijective", report.right_translations_bijective},
      {"right_distributive", report.right_distributive},
      {"rack", report.is_rack()},
      {"quandle", report.is_quandle()},
  };
  if (report.counterexample) {
    j["failed_axiom"] = to_string(*report.failed_axiom);
    j["counterexample"] = *report.counterexample;
  } else {
    j["failed_axiom"] = nullptr;
    j["counterexample"] = nullptr;
  }
  return j;
}

FiniteQuandle quandle_from_json(const nlohmann::json& j) {
  auto rows = rows_from_json(j);
  if (rows.empty()) throw DomainError("finite quandle: size must be positive");
  return FiniteQuandle::from_rows(rows);
}

FiniteGroup group_from_json(const nlohmann::json& j) { return FiniteGroup(rows_from_json(j)); }

}  // namespace trefoil
