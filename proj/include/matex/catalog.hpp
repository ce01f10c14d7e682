#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matex/matroid_ops.hpp"
#include "matex/set_function.hpp"
#include "matex/sparse_paving.hpp"

namespace matex::cat {

// Points (x,y) of the affine plane over F3 = {-1,0,1}, indexed
// 3(x+1) + (y+1), so the column order of the standard representation
// matrix is (-1,-1),(-1,0),...,(1,1). Twelve lines in four parallel
// classes of three.
struct AffinePlaneF3 {
  std::array<Mask, 3> a;  // a[i+1]: y = i
  std::array<Mask, 3> b;  // b[i+1]: x = i
  std::array<Mask, 3> c;  // c[i+1]: x - y = i
  std::array<Mask, 3> d;  // d[i+1]: x + y = i

  static int point(int x, int y) { return 3 * (x + 1) + (y + 1); }
  Mask A(int i) const { return a[i + 1]; }
  Mask B(int i) const { return b[i + 1]; }
  Mask C(int i) const { return c[i + 1]; }
  Mask D(int i) const { return d[i + 1]; }
  std::vector<Mask> all_lines() const;
};

const AffinePlaneF3& affine_plane_f3();

// (A0 u B0 minus (0,0)) u {p}; the displaced tic-tac-toe cross.
Mask displaced_cross(int px, int py);

struct CatalogEntry {
  std::string name;
  Polymatroid poly;
  std::optional<Matroid> matroid;         // present unless the entry is a proper polymatroid
  std::optional<SparsePavingMatroid> sp;  // present for sparse paving entries
};

// Constructors for the named matroids: vamos, ag32, l8, l8p, p8, p8_1,
// p8_2p, p8_2pp, p8_3, t3o, t3, t3w, t9c, t7c, 201827, vhat, and u<k>_<n>.
// Throws std::invalid_argument for unknown names.
const CatalogEntry& named(const std::string& name);

std::vector<std::string> catalog_names();

SparsePavingMatroid uniform(int k, int n);  // empty circuit-hyperplane list

// Rank-5 matroid on 9 elements rebuilt from its three rank-3 flats
// 0125, 0268, 1568 and six circuit-hyperplanes; see matroid_from_rank_bounds.
Matroid matroid_201827();

// Largest matroid rank function bounded by |X|, k, and the given flat
// bounds, with derived union bounds added until stable; throws if the
// result fails the matroid axioms or does not reproduce the given bounds
// as flats of the stated rank.
Matroid matroid_from_rank_bounds(int n, int k, std::vector<std::pair<Mask, int>> bounds);

// The 5x9 integer matrix whose columns, reduced mod 3, represent t9c.
std::vector<std::vector<int>> t9c_representation_matrix();

}  // namespace matex::cat
