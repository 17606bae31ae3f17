#pragma once

// Artin's faithful action of B3 on the free group F3 = <x1, x2, x3>, used as an
// equality oracle independent of the Burau matrices.

#include <array>
#include <string>
#include <vector>

#include "trefoil/braid.hpp"

namespace artin {

using FreeWord = std::vector<int>;  // +-1, +-2, +-3

inline void push(FreeWord& w, int g) {
  if (!w.empty() && w.back() == -g) w.pop_back();
  else w.push_back(g);
}

inline FreeWord invert(const FreeWord& w) {
  FreeWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

// Images of x1, x2, x3 under the automorphism of a braid word.
using Automorphism = std::array<FreeWord, 3>;

// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; inverse:
// x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
inline FreeWord generator_image(trefoil::Letter l, int g) {
  int i = trefoil::is_a(l) ? 1 : 2;
  bool positive = trefoil::is_positive(l);
  int ag = g < 0 ? -g : g;
  FreeWord image;
  if (ag == i) image = positive ? FreeWord{i, i + 1, -i} : FreeWord{i + 1};
  else if (ag == i + 1) image = positive ? FreeWord{i} : FreeWord{-(i + 1), i, i + 1};
  else image = {ag};
  return g < 0 ? invert(image) : image;
}

inline Automorphism automorphism(const trefoil::BraidWord& w) {
  Automorphism psi{FreeWord{1}, FreeWord{2}, FreeWord{3}};
  for (trefoil::Letter l : w) {
    Automorphism next;
    for (int g = 1; g <= 3; ++g)
      for (int s : generator_image(l, g)) {
        const FreeWord& sub = s > 0 ? psi[s - 1] : invert(psi[-s - 1]);
        for (int x : sub) push(next[g - 1], x);
      }
    psi = next;
  }
  return psi;
}

inline std::string key(const Automorphism& a) {
  std::string s;
  for (const auto& w : a) {
    for (int x : w) s += std::to_string(x) + ",";
    s += "|";
  }
  return s;
}

inline bool equal(const trefoil::BraidWord& u, const trefoil::BraidWord& v) { return automorphism(u) == automorphism(v); }

}  // namespace artin
