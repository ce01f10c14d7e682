#pragma once

#include <optional>

#include "matex/lp_solver.hpp"
#include "matex/set_function.hpp"

namespace matex::lp {

// One LP over the full augmented ground set with base pinning and every
// step's rows; Infeasible means no polymatroid extension chain of the given
// kinds and pairs exists. Feasible AK steps are checked against the law
// g(Z) = g(X:Y) before the verdict is returned.
Verdict check_chain(const Polymatroid& base, const std::vector<ExtensionStep>& steps,
                    SolveStats* stats = nullptr);

// g(Z) = g(X) + g(Y) - g(XY) for every AK step; throws std::logic_error.
void assert_ak_law(const LPModel& model, const SetFunction& witness);

// The two Ahlswede-Korner steps of the dual tic-tac-toe refutation:
// z_j for the pair (L^{-1}_j L^{1}_j, L^{0}_j), j = -1 then 1, where L^{i}_j
// is column i of the affine plane minus its row-j point.
std::vector<ExtensionStep> dual_ttt_ak_steps();

// Runs the two-step chain above on a 9-element matroid (intended: duals of
// matroids carrying the tic-tac-toe configuration).
Verdict dual_t3_ak_refutation(const Matroid& m, SolveStats* stats = nullptr);

struct RefutationSearch {
  std::optional<std::vector<std::pair<Mask, Mask>>> sequence;
  bool truncated = false;
  long lp_solves = 0;
};

// Depth-first search over pair sequences from the pool (pool order, then
// lexicographic by position), solving one chain LP per node; stops at the
// first Infeasible sequence or after budget_lps solves.
RefutationSearch search_refutation(const Polymatroid& base, ExtensionStep::Kind kind, int depth,
                                   const std::vector<std::pair<Mask, Mask>>& pool,
                                   long budget_lps);

// For a witness g of a single CI or AK step on the pair (X u U, Y u U) with
// added element set Z: checks that the contraction by U satisfies the step
// rows for (X, Y). Throws std::invalid_argument if g is not a witness for
// the original pair.
bool verify_minor_closure(const SetFunction& g, ExtensionStep::Kind kind, Mask x, Mask y, Mask u,
                          Mask z);

}  // namespace matex::lp
