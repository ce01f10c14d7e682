#pragma once

#include <vector>

#include "matex/set_function.hpp"
#include "matex/subset.hpp"

namespace matex {

// Rank-k matroid on n elements determined by its circuit-hyperplanes: a
// family of k-sets pairwise intersecting in at most k-2 elements (a stable
// set of the Johnson graph J(n,k)).
struct SparsePavingMatroid {
  int n = 0;
  int k = 0;
  std::vector<Mask> chs;  // sorted ascending

  static SparsePavingMatroid make(int n, int k, std::vector<Mask> chs);  // validates

  int rank(Mask x) const;
  bool is_ch(Mask c) const;
  Matroid materialize() const;

  // Removes one circuit-hyperplane (turns it into a basis).
  SparsePavingMatroid relax(Mask c) const;  // throws if c is not a CH

  // Dual: rank n-k, circuit-hyperplanes are the complements.
  SparsePavingMatroid dual() const;

  bool operator==(const SparsePavingMatroid&) const = default;
};

// |a & b| <= k-2 for two k-sets, i.e. {a,b} is stable in J(n,k).
inline bool johnson_compatible(Mask a, Mask b, int k) {
  return popcount(a & b) <= k - 2;
}

bool is_stable_family(const std::vector<Mask>& fam, int k);

}  // namespace matex
