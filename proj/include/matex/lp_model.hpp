#pragma once

#include <string>
#include <vector>

#include "matex/set_function.hpp"
#include "matex/subset.hpp"

namespace matex::lp {

// One polymatroid extension step over the ground set as augmented so far.
// CI and AK add a single new element; CL adds one element per element of Y
// with the identity bijection between Y and the copies.
struct ExtensionStep {
  enum class Kind { CI, AK, CL };
  Kind kind = Kind::CI;
  Mask x = 0, y = 0, x2 = 0;  // CL uses x = X1, x2 = X2, y = Y

  static ExtensionStep ci(Mask x, Mask y) { return {Kind::CI, x, y, 0}; }
  static ExtensionStep ak(Mask x, Mask y) { return {Kind::AK, x, y, 0}; }
  static ExtensionStep cl(Mask x1, Mask x2, Mask y) { return {Kind::CL, x1, y, x2}; }

  int new_element_count() const { return kind == Kind::CL ? popcount(y) : 1; }
};

struct RowTerm {
  Mask subset;  // unpinned variable
  int coef;
};

struct Row {
  enum class Rel { Ge, Eq };
  std::vector<RowTerm> terms;  // pinned contributions are folded into rhs
  Rel rel = Rel::Ge;
  Rat rhs;
  std::string label;
};

// Pure-feasibility model: elemental Shannon rows over the augmented ground
// set plus step equality rows, with g({}) eliminated and g pinned to the
// base rank function on base subsets by substitution. Rows whose support
// lies entirely in the base are satisfied by the base polymatroid and are
// dropped (counted in dropped_base_rows).
struct LPModel {
  int base_n = 0;
  int total_n = 0;
  SetFunction base;
  std::vector<ExtensionStep> steps;
  std::vector<std::vector<int>> step_elements;  // new element ids per step

  std::vector<Row> rows;
  std::size_t shannon_row_count = 0;  // all elemental rows, including dropped ones
  std::size_t dropped_base_rows = 0;
  std::size_t step_row_count = 0;

  std::vector<Mask> vars;      // unpinned nonempty subsets, ascending
  std::vector<int> var_index;  // mask -> position in vars, or -1

  Mask full() const { return full_mask(total_n); }
  bool is_pinned(Mask s) const { return s != 0 && contains(full_mask(base_n), s); }

  // Exact row value at g (over the full augmented ground set) minus rhs.
  Rat row_slack(const Row& r, const SetFunction& g) const;
};

// Elemental generating rows for "monotone and submodular" on n elements:
// g(N) - g(N\i) >= 0 and g(K+i) + g(K+j) - g(K+i+j) - g(K) >= 0.
std::vector<Row> build_shannon(int n);

// Equality rows of one step, over the ground set available at that step
// (context_n elements) with the step's new elements already assigned.
std::vector<Row> build_step_rows(const ExtensionStep& step, int context_n,
                                 const std::vector<int>& new_elements);

LPModel build_chain_model(const Polymatroid& base, const std::vector<ExtensionStep>& steps);

// Textual listing with exact rationals, one row per line, for external
// cross-checking.
std::string dump_model(const LPModel& model);

}  // namespace matex::lp
