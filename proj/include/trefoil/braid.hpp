#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trefoil/laurent.hpp"
#include "trefoil/letter.hpp"

namespace trefoil {

/// A word in the three-strand braid group: a = sigma1, b = sigma2, uppercase
/// for inverses.
using BraidWord = std::vector<Letter>;

/// Any string over {a, b, A, B}; "" and "1" are the identity. Throws ParseError.
BraidWord parse_braid_word(std::string_view text);
/// The letters as written; the identity renders as "".
std::string render_braid_word(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

/// The reduced Burau image: sigma1 -> [[-t, 1], [0, 1]], sigma2 -> [[1, 0], [t, -t]].
LaurentMatrix burau_matrix(Letter generator);
LaurentMatrix burau_matrix(const BraidWord& w);

/// A braid group element with its Burau matrix and exponent sum computed once.
/// Equality is equality of matrices; the representation is faithful on B3.
class BraidElement {
 public:
  BraidElement();
  explicit BraidElement(const BraidWord& word);
  static BraidElement generator(Letter l) { return BraidElement(BraidWord{l}); }

  /// Freely reduced.
  const BraidWord& word() const { return word_; }
  const LaurentMatrix& matrix() const { return matrix_; }
  std::int64_t exponent_sum() const { return eps_; }

  friend BraidElement braid_mul(const BraidElement& u, const BraidElement& v);
  friend BraidElement braid_inv(const BraidElement& u);

 private:
  BraidElement(BraidWord word, LaurentMatrix matrix, std::int64_t eps)
      : word_(std::move(word)), matrix_(std::move(matrix)), eps_(eps) {}

  BraidWord word_;
  LaurentMatrix matrix_;
  std::int64_t eps_;
};

BraidElement braid_mul(const BraidElement& u, const BraidElement& v);
BraidElement braid_inv(const BraidElement& u);
inline bool braid_eq(const BraidElement& u, const BraidElement& v) { return u.matrix() == v.matrix(); }
inline std::int64_t exponent_sum(const BraidElement& u) { return u.exponent_sum(); }

inline BraidElement operator*(const BraidElement& u, const BraidElement& v) { return braid_mul(u, v); }
/// u^k for any integer k.
BraidElement braid_pow(const BraidElement& u, std::int64_t k);
/// g^-1 u g.
BraidElement conjugate(const BraidElement& u, const BraidElement& g);

/// m = a.
BraidElement meridian();
/// lambda = a^-4 b a a b.
BraidElement longitude();

std::string to_string(const BraidElement& u);

}  // namespace trefoil
