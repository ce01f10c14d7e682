#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "matex/lp_model.hpp"

namespace matex::lp {

struct Feasible {
  SetFunction witness;  // over the augmented ground set, satisfies every row exactly
};

struct Infeasible {
  // Multipliers over model rows: nonnegative on inequality rows, free on
  // equality rows; the combination has zero coefficients and positive rhs.
  std::vector<std::pair<std::size_t, Rat>> multipliers;
};

using Verdict = std::variant<Feasible, Infeasible>;

inline bool feasible(const Verdict& v) { return std::holds_alternative<Feasible>(v); }

struct SolveStats {
  long pivots = 0;
  int outer_rounds = 0;
  std::size_t active_rows = 0;
  bool collapse_witness = false;
};

// Exact feasibility: either a witness satisfying every row under exact
// substitution, or an exactly re-verified Farkas certificate. Lazy row
// activation with an exact dual simplex on the active set; least-index
// pivoting takes over on stalls, which guarantees termination. Throws
// std::logic_error if a produced certificate or witness fails verification.
Verdict solve_feasibility(const LPModel& model, SolveStats* stats = nullptr);

// Index of the first row g violates, or nullopt.
std::optional<std::size_t> first_violated_row(const LPModel& model, const SetFunction& g);

// Independent exact check of a Farkas certificate; throws std::logic_error.
void verify_certificate(const LPModel& model, const Infeasible& cert);

}  // namespace matex::lp
