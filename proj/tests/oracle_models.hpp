#pragma once

// Test-only concrete models of small Coxeter groups, independent of the
// word engine: symmetric groups via permutation composition and dihedral
// groups via (rotation, flip) pairs. Used to cross-check reduction,
// equality and enumeration.

#include <map>
#include <numeric>
#include <vector>

#include "coxlen/coxeter_matrix.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_mul(const Perm& p, const Perm& q) { // (p*q)(i) = p(q(i))
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

/// Adjacent transpositions generating the symmetric group S_{n+1},
/// modeling the Coxeter system A_n.
inline std::vector<Perm> symmetric_group_generators(int rank) {
  std::vector<Perm> gens;
  for (int i = 0; i < rank; ++i) {
    Perm p = perm_identity(rank + 1);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
    gens.push_back(std::move(p));
  }
  return gens;
}

inline Perm perm_of_word(const coxlen::Word& w, const std::vector<Perm>& gens) {
  Perm acc = perm_identity(static_cast<int>(gens[0].size()));
  for (coxlen::Gen g : w)
    acc = perm_mul(acc, gens[g]);
  return acc;
}

/// Dihedral group of order 2m as pairs (k, e): rotation r^k, flip f^e,
/// with f r = r^-1 f. Generators s = f and t = r f model I2(m).
struct Dihedral {
  int m;
  using El = std::pair<int, int>;

  El identity() const { return {0, 0}; }

  El mul(El x, El y) const {
    auto [k1, e1] = x;
    auto [k2, e2] = y;
    int k = e1 == 0 ? (k1 + k2) % m : ((k1 - k2) % m + m) % m;
    return {k, e1 ^ e2};
  }

  El gen(int which) const { return which == 0 ? El{0, 1} : El{1, 1}; }

  El of_word(const coxlen::Word& w) const {
    El acc = identity();
    for (coxlen::Gen g : w)
      acc = mul(acc, gen(g));
    return acc;
  }
};

} // namespace oracle
