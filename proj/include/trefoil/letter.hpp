#pragma once

#include <optional>

namespace trefoil {

/// Operator letters: lowercase x is *x (or the generator x), uppercase X its
/// inverse.
enum class Letter : char { a = 'a', A = 'A', b = 'b', B = 'B' };

constexpr char to_char(Letter l) { return static_cast<char>(l); }

constexpr Letter inverse(Letter l) {
  switch (l) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::b: return Letter::B;
    case Letter::B: return Letter::b;
  }
  return l;
}

constexpr bool is_a(Letter l) { return l == Letter::a || l == Letter::A; }
constexpr bool is_positive(Letter l) { return l == Letter::a || l == Letter::b; }

constexpr std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

}  // namespace trefoil
