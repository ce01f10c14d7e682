#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matex/matroid_ops.hpp"
#include "matex/set_function.hpp"

namespace matex {

// An upward-closed family of flats closed under intersections of modular
// pairs; in bijection with single-element extensions.
struct ModularCut {
  std::vector<Mask> flats;  // sorted ascending

  bool member(Mask f) const;
  bool operator==(const ModularCut&) const = default;
};

// Returns a description of the first violated cut axiom, or nullopt if valid.
std::optional<std::string> check_modular_cut(const Matroid& m, const ModularCut& cut);

// Least modular cut containing the generators: upward closure, then modular
// intersections, to a fixed point. Throws if a generator is not a flat.
ModularCut minimal_modular_cut(const Matroid& m, const std::vector<Mask>& generators);

// Single-element extension: g(X) = f(X), g(Xz) = f(X) if cl(X) in cut else
// f(X)+1; the new element has index m.n(). Throws if the cut is invalid.
Matroid extend_by_modular_cut(const Matroid& m, const ModularCut& cut);

// All modular cuts containing every flat of must_contain and none of
// must_exclude, by branch and prune over flats in decreasing-rank order
// (membership tried before non-membership). Deterministic output order.
// Stops after cap cuts; *truncated reports whether the cap was hit.
std::vector<ModularCut> enumerate_admissible_cuts(const Matroid& m,
                                                  const std::vector<Mask>& must_contain,
                                                  const std::vector<Mask>& must_exclude,
                                                  std::size_t cap, bool* truncated = nullptr);

}  // namespace matex
