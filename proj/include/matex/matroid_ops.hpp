#pragma once

#include <array>
#include <optional>
#include <vector>

#include "matex/set_function.hpp"
#include "matex/subset.hpp"

namespace matex {

// Smallest flat containing X: all x with f(Xx) = f(X). Idempotent, extensive.
Mask closure(const Matroid& m, Mask x);

bool is_flat(const Matroid& m, Mask x);

// All flats, ascending as masks.
std::vector<Mask> flats(const Matroid& m);
// All flats of the given rank, ascending.
std::vector<Mask> flats_of_rank(const Matroid& m, int r);
inline std::vector<Mask> lines(const Matroid& m) { return flats_of_rank(m, 2); }
inline std::vector<Mask> hyperplanes(const Matroid& m) { return flats_of_rank(m, m.rank() - 1); }

// f(F1) + f(F2) == f(F1F2) + f(F1 n F2). Throws if either input is not a flat.
bool is_modular_pair(const Matroid& m, Mask f1, Mask f2);

// f*(X) = |X| - f(Q) + f(Q\X).
Matroid dual(const Matroid& m);

// Deletion of z1 and contraction of z2: rank X -> f(X u Z2) - f(Z2) on
// Q \ (Z1 u Z2). Throws if z1 and z2 overlap.
SetFunction minor(const SetFunction& f, Mask delete_z1, Mask contract_z2);
Polymatroid minor(const Polymatroid& p, Mask delete_z1, Mask contract_z2);
Matroid minor(const Matroid& m, Mask delete_z1, Mask contract_z2);

// Ordered list of pairwise-disjoint nonempty blocks.
struct BlockPartition {
  std::vector<Mask> blocks;
  static BlockPartition make(std::vector<Mask> blocks);  // validates
};

// Polymatroid on atoms {0..m-1} with h(S) = f(union of blocks in S).
SetFunction induced_set_function(const SetFunction& f, const BlockPartition& blocks);
Polymatroid induced_polymatroid(const Polymatroid& p, const BlockPartition& blocks);
Polymatroid induced_polymatroid(const Matroid& m, const BlockPartition& blocks);

// f(AB)+f(AC)+f(AD)+f(BC)+f(BD) >= f(A)+f(B)+f(CD)+f(ABC)+f(ABD)
// over disjoint nonempty A,B,C,D (Ingleton 1971).
struct IngletonWitness {
  Mask a, b, c, d;
  Rat slack;  // negative
};
std::optional<IngletonWitness> ingleton_check(const Polymatroid& p);
std::optional<IngletonWitness> ingleton_check(const Matroid& m);

Rat ingleton_slack(const SetFunction& f, Mask a, Mask b, Mask c, Mask d);

// The four-atom polymatroid with singleton rank 2, pair ranks 3 except one
// pair of rank 4, and rank 4 beyond; the certificate pattern for the
// Ahlswede-Korner obstruction.
Polymatroid vamos_like_polymatroid();

// True iff h (on four atoms) matches the pattern above under some labeling.
bool matches_vamos_pattern(const SetFunction& h);

// Searches ordered 4-tuples of rank-2 flats, by default with pairwise
// disjoint supports, whose induced polymatroid matches the pattern. Returns
// the first witness in ascending order, or nullopt.
std::optional<std::array<Mask, 4>> contains_vamos_configuration(const Matroid& m,
                                                                bool require_disjoint = true);

}  // namespace matex
