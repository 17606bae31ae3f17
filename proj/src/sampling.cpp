#include "trefoil/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace trefoil {

PFrac random_frac(Rng& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  while (true) {
    std::int64_t p = coord(rng), q = coord(rng);
    if (p == 0 && q == 0) continue;
    if (std::gcd(p, q) != 1) continue;
    return PFrac::make(Int(static_cast<long>(p)), Int(static_cast<long>(q)));
  }
}

QWord random_word(Rng& rng, std::size_t max_tail) {
  static constexpr Letter kLetters[] = {Letter::a, Letter::A, Letter::b, Letter::B};
  std::uniform_int_distribution<std::size_t> length(0, max_tail);
  std::uniform_int_distribution<int> pick(0, 3);
  QWord w{std::bernoulli_distribution(0.5)(rng) ? Generator::a : Generator::b, {}};
  for (std::size_t n = length(rng); n > 0; --n) w.tail.push_back(kLetters[pick(rng)]);
  return w;
}

BraidWord random_balanced_braid_word(Rng& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> half(0, max_length / 2);
  std::bernoulli_distribution coin(0.5);
  BraidWord w;
  for (std::size_t n = half(rng); n > 0; --n) {
    w.push_back(coin(rng) ? Letter::a : Letter::b);
    w.push_back(coin(rng) ? Letter::A : Letter::B);
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace trefoil
