#pragma once

#include <string>
#include <vector>

#include "matex/set_function.hpp"
#include "matex/sparse_paving.hpp"

namespace matex::cat {

// Canonical image of a k-uniform family on {0..n-1} under ground-set
// relabeling: the permutation image whose sorted mask list is
// lexicographically least. Equivalently, the family indicator over
// k-subsets in colex order is lexicographically greatest, which is what
// the backtracking search maximizes (members early = strong pruning).
std::vector<Mask> canonical_family(int n, int k, const std::vector<Mask>& fam);

// Dedup key: "n.k:" plus the canonical indicator bits as '0'/'1'.
std::string canonical_family_key(int n, int k, const std::vector<Mask>& fam);

// Canonical circuit-hyperplane list.
std::vector<Mask> canonical_form(const SparsePavingMatroid& sp);
std::string canonical_key(const SparsePavingMatroid& sp);

// General matroids are keyed by the canonical image of the family of
// non-basis k-sets (the complement of the basis indicator), which
// determines the matroid on (n, k).
std::vector<Mask> nonbasis_family(const Matroid& m);
std::string canonical_key(const Matroid& m);

bool are_isomorphic(const SparsePavingMatroid& a, const SparsePavingMatroid& b);
bool are_isomorphic(const Matroid& a, const Matroid& b);

// True iff some relabeling of sub's family maps it into sup (i.e. the
// matroid of sub is, up to isomorphism, a relaxation of the matroid of sup).
bool embeds_as_subfamily(int n, const std::vector<Mask>& sub, const std::vector<Mask>& sup);

}  // namespace matex::cat
