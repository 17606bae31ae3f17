#pragma once

#include <array>
#include <string>
#include <string_view>

#include <json.hpp>

#include "trefoil/integer.hpp"

namespace trefoil {

/// A point of Q u {1/0}: the projective class +-(p, q) of a primitive pair.
///
/// Stored canonically: gcd(|p|, |q|) = 1 and q > 0, or (p, q) = (1, 0). Two
/// PFracs are equal iff their fields are equal.
class PFrac {
 public:
  /// Reduces and fixes the sign. Throws DomainError for (0, 0).
  static PFrac make(const Int& p, const Int& q);
  static PFrac infinity() { return PFrac(Int(1), Int(0)); }
  static PFrac zero() { return PFrac(Int(0), Int(1)); }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  friend bool operator==(const PFrac&, const PFrac&) = default;
  /// Lexicographic on (p, q); only for use in ordered containers.
  friend bool operator<(const PFrac& x, const PFrac& y) {
    return x.p_ < y.p_ || (x.p_ == y.p_ && x.q_ < y.q_);
  }

 private:
  PFrac(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {}
  Int p_, q_;
};

/// pf_new: canonical representative of +-(p, q).
inline PFrac pf_new(const Int& p, const Int& q) { return PFrac::make(p, q); }

/// (a/b) * (c/d) = (a - Dc)/(b - Dd) with D = ad - bc.
PFrac pf_op(const PFrac& x, const PFrac& y);
/// Inverse right translation: (a + Dc)/(b + Dd).
PFrac pf_op_inv(const PFrac& x, const PFrac& y);
/// x * y^k in closed form (p - kDs)/(q - kDt); k < 0 iterates pf_op_inv.
PFrac pf_op_pow(const PFrac& x, const PFrac& y, const Int& k);

/// An unreduced element (u, v) of Z + Z; the zero vector is allowed.
struct IntPair {
  Int u, v;
  friend bool operator==(const IntPair&, const IntPair&) = default;
};

/// The symplectic form D((a, b), (c, d)) = ad - bc.
Int symplectic_form(const IntPair& x, const IntPair& y);
/// x * y = x - <x, y> y on all of Z + Z.
IntPair sympl_op(const IntPair& x, const IntPair& y);
/// x *bar y = x + <x, y> y.
IntPair sympl_op_inv(const IntPair& x, const IntPair& y);
/// gcd(|u|, |v|) = 1, with gcd(0, k) = |k|.
bool is_primitive(const IntPair& x);
/// Throws DomainError on zero or imprimitive input.
PFrac projectivize(const IntPair& x);

/// A 2x2 integer matrix [[a, b], [c, d]] acting on column vectors (p, q).
struct TransvectionMatrix {
  std::array<Int, 4> m;  // row-major: a b c d

  Int determinant() const { return m[0] * m[3] - m[1] * m[2]; }
  TransvectionMatrix operator*(const TransvectionMatrix& o) const;
  /// Equality in PSL(2, Z): equal up to a global sign.
  bool projectively_equal(const TransvectionMatrix& o) const;
  friend bool operator==(const TransvectionMatrix&, const TransvectionMatrix&) = default;
};

/// [[1 - dc, c^2], [-d^2, 1 + dc]] for y = c/d.
TransvectionMatrix transvection_matrix(const PFrac& y);
/// pf_new of m (p, q)^T. Throws DomainError unless det(m) = 1.
PFrac apply_matrix(const TransvectionMatrix& m, const PFrac& x);

/// "p/q" with an optional sign on p; a bare integer "p" means p/1. Throws
/// ParseError (including for 0/0).
PFrac parse_frac(std::string_view text);
std::string to_string(const PFrac& x);
std::string to_string(const TransvectionMatrix& m);

nlohmann::json to_json(const PFrac& x);
nlohmann::json to_json(const TransvectionMatrix& m);
/// Accepts {"p": "...", "q": "..."} with decimal-string (or integer) values.
PFrac frac_from_json(const nlohmann::json& j);

}  // namespace trefoil
