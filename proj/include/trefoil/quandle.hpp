#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace trefoil {

using Index = std::uint32_t;

/// A binary operation on {0, ..., size-1} stored as a dense row-major table,
/// entry (i, j) = i * j.
class FiniteQuandle {
 public:
  /// Throws DomainError if size is zero, the table is not size*size, or an
  /// entry is out of range.
  FiniteQuandle(std::size_t size, std::vector<Index> table);

  static FiniteQuandle from_rows(const std::vector<std::vector<Index>>& rows);

  std::size_t size() const { return size_; }
  Index op(Index i, Index j) const { return table_[static_cast<std::size_t>(i) * size_ + j]; }
  const std::vector<Index>& table() const { return table_; }

  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;

 private:
  std::size_t size_;
  std::vector<Index> table_;
};

enum class Axiom { Idempotence, RightInvertibility, RightDistributivity };

std::string to_string(Axiom axiom);

/// Outcome of an exhaustive axiom check.
///
/// The counterexample triple depends on the failed axiom:
///   Idempotence          (a, a, a)   with a*a != a
///   RightInvertibility   (c, d, b)   with c != d and c*b == d*b
///   RightDistributivity  (a, b, c)   with (a*b)*c != (a*c)*(b*c)
/// When several axioms fail, the witness is for the first failure in the order
/// invertibility, distributivity, idempotence.
struct AxiomReport {
  bool idempotent = true;
  bool right_translations_bijective = true;
  bool right_distributive = true;
  std::optional<Axiom> failed_axiom;
  std::optional<std::array<Index, 3>> counterexample;

  bool is_rack() const { return right_translations_bijective && right_distributive; }
  bool is_quandle() const { return is_rack() && idempotent; }
};

/// Re-evaluates the axiom named in the report on its counterexample. Returns
/// true when the failure is reproduced (or when the report has no failure).
bool counterexample_reproduces(const FiniteQuandle& q, const AxiomReport& report);

/// Axioms (2) and (3); idempotence is computed too but does not affect is_rack().
AxiomReport check_rack(const FiniteQuandle& q);
/// Axioms (1), (2) and (3).
AxiomReport check_quandle(const FiniteQuandle& q);

/// A group given by its multiplication table, validated exhaustively.
class FiniteGroup {
 public:
  /// Throws DomainError unless the table is a group (closure, associativity,
  /// identity, inverses).
  explicit FiniteGroup(std::vector<std::vector<Index>> mul);

  std::size_t size() const { return mul_.size(); }
  Index mul(Index g, Index h) const { return mul_[g][h]; }
  Index inverse(Index g) const { return inverse_[g]; }
  Index identity() const { return identity_; }
  const std::vector<std::vector<Index>>& table() const { return mul_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<Index>> mul_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
};

/// Z_n[t, t^-1] / (h(t)) as a finite ring. Elements are coefficient vectors of
/// length deg(h), encoded as indices in base n (constant term least significant).
class LaurentQuotientRing {
 public:
  /// h lists coefficients from the constant term upward. Throws DomainError if
  /// n == 0, deg(h) < 1 after reduction mod n, the leading coefficient is not a
  /// unit mod n, or t is not a unit in the quotient.
  LaurentQuotientRing(std::uint32_t modulus, std::vector<std::int64_t> h);

  std::uint32_t modulus() const { return n_; }
  std::size_t degree() const { return h_.size() - 1; }
  const std::vector<std::uint32_t>& h() const { return h_; }
  std::size_t element_count() const;

  using Element = std::vector<std::uint32_t>;
  Element decode(Index index) const;
  Index encode(const Element& e) const;
  Element times_t(const Element& e) const;
  Element times_t_inverse(const Element& e) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> h_;  // reduced, leading coefficient made 1
  Element t_inverse_;
};

/// Parses "t^2+t+1", "2t-3", "t+1", "1-t^-1" into constant-first integer
/// coefficients. Negative exponents are shifted away (t is a unit). Throws
/// ParseError.
std::vector<std::int64_t> parse_polynomial(std::string_view text);

FiniteQuandle dihedral_quandle(std::size_t n);
FiniteQuandle conj_quandle(const FiniteGroup& g);
FiniteQuandle core_quandle(const FiniteGroup& g);
/// g * h = tau(g h^-1) h. Throws DomainError unless tau is an automorphism.
FiniteQuandle automorphism_quandle(const FiniteGroup& g, std::span<const Index> tau);
FiniteQuandle alexander_quandle(const LaurentQuotientRing& ring);

/// A bilinear form on (Z/n)^rank, or on Z^rank when modulus == 0, given by its
/// Gram matrix: <x, y> = x^T G y.
struct BilinearForm {
  std::uint32_t modulus = 0;
  std::vector<std::vector<std::int64_t>> gram;

  std::size_t rank() const { return gram.size(); }
  std::int64_t eval(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const;
};

/// x * y = x - <x, y> y on the finite module (Z/n)^rank. Throws DomainError for
/// modulus 0 or an empty/non-square Gram matrix.
FiniteQuandle bilinear_form_quandle(const BilinearForm& form);

/// <x, x> = 0 for all x. Exhaustive over (Z/n)^rank; over Z the check runs on
/// the box {-2..2}^rank, which certifies a quadratic form is identically zero.
bool is_alternating(const BilinearForm& form);
/// <x, y> = -<y, x> for all x, y, over the same carriers as is_alternating.
bool is_antisymmetric(const BilinearForm& form);

nlohmann::json to_json(const FiniteQuandle& q);
nlohmann::json to_json(const FiniteGroup& g);
nlohmann::json to_json(const AxiomReport& report);
/// Accepts {"size": n, "table": [[...], ...]}. Throws ParseError/DomainError.
FiniteQuandle quandle_from_json(const nlohmann::json& j);
FiniteGroup group_from_json(const nlohmann::json& j);

}  // namespace trefoil
