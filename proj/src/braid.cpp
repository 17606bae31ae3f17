#include "trefoil/braid.hpp"

#include "trefoil/error.hpp"

namespace trefoil {

BraidWord parse_braid_word(std::string_view text) {
  BraidWord w;
  if (text == "1") return w;
  for (char c : text) {
    auto l = letter_from_char(c);
    if (!l) throw ParseError(std::string("illegal character '") + c + "' in braid word");
    w.push_back(*l);
  }
  return w;
}

std::string render_braid_word(const BraidWord& w) {
  std::string out;
  for (Letter l : w) out.push_back(to_char(l));
  return out;
}

namespace {

void push_reduced(BraidWord& w, Letter l) {
  if (!w.empty() && w.back() == inverse(l)) w.pop_back();
  else w.push_back(l);
}

// (-1)^e t^-e, the inverse of det = (-t)^e.
LaurentPoly inverse_determinant(std::int64_t e) { return LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, -e); }

}  // namespace

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (Letter l : w) push_reduced(out, l);
  return out;
}

LaurentMatrix burau_matrix(Letter generator) {
  const LaurentPoly zero, one = LaurentPoly::constant(1), t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  switch (generator) {
    case Letter::a: return {{-t, one, zero, one}};
    case Letter::A: return {{-tinv, tinv, zero, one}};
    case Letter::b: return {{one, zero, t, -t}};
    case Letter::B: return {{one, zero, one, -tinv}};
  }
  return LaurentMatrix::identity();
}

LaurentMatrix burau_matrix(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity();
  for (Letter l : w) m = m * burau_matrix(l);
  return m;
}

BraidElement::BraidElement() : matrix_(LaurentMatrix::identity()), eps_(0) {}

BraidElement::BraidElement(const BraidWord& word) : word_(free_reduce(word)), matrix_(burau_matrix(word)), eps_(0) {
  for (Letter l : word) eps_ += is_positive(l) ? 1 : -1;
}

BraidElement braid_mul(const BraidElement& u, const BraidElement& v) {
  BraidWord w = u.word_;
  for (Letter l : v.word_) push_reduced(w, l);
  return BraidElement(std::move(w), u.matrix_ * v.matrix_, u.eps_ + v.eps_);
}

BraidElement braid_inv(const BraidElement& u) {
  BraidWord w;
  w.reserve(u.word_.size());
  for (auto it = u.word_.rbegin(); it != u.word_.rend(); ++it) w.push_back(inverse(*it));
  const auto& m = u.matrix_.m;
  LaurentPoly s = inverse_determinant(u.eps_);
  LaurentMatrix inv{{s * m[3], s * -m[1], s * -m[2], s * m[0]}};
  return BraidElement(std::move(w), std::move(inv), -u.eps_);
}

BraidElement braid_pow(const BraidElement& u, std::int64_t k) {
  BraidElement base = k < 0 ? braid_inv(u) : u, result;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result = result * base;
  return result;
}

BraidElement conjugate(const BraidElement& u, const BraidElement& g) { return braid_inv(g) * u * g; }

BraidElement meridian() { return BraidElement::generator(Letter::a); }

BraidElement longitude() { return BraidElement(parse_braid_word("AAAAbaab")); }

std::string to_string(const BraidElement& u) { return render_braid_word(u.word()); }

}  // namespace trefoil
