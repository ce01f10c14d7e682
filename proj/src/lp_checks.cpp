#include "matex/lp_checks.hpp"

#include <stdexcept>

#include "matex/catalog.hpp"

namespace matex::lp {

void assert_ak_law(const LPModel& model, const SetFunction& g) {
  for (std::size_t i = 0; i < model.steps.size(); ++i) {
    const ExtensionStep& st = model.steps[i];
    if (st.kind != ExtensionStep::Kind::AK) continue;
    const Mask z = bit(model.step_elements[i].at(0));
    if (g.at(z) != g.mutual(st.x, st.y))
      throw std::logic_error("AK witness violates g(Z) = g(X:Y) at step " + std::to_string(i + 1));
  }
}

Verdict check_chain(const Polymatroid& base, const std::vector<ExtensionStep>& steps,
                    SolveStats* stats) {
  LPModel model = build_chain_model(base, steps);
  Verdict v = solve_feasibility(model, stats);
  if (const Feasible* f = std::get_if<Feasible>(&v)) assert_ak_law(model, f->witness);
  return v;
}

std::vector<ExtensionStep> dual_ttt_ak_steps() {
  using cat::AffinePlaneF3;
  const AffinePlaneF3& pl = cat::affine_plane_f3();
  auto column_minus = [&](int i, int j) {
    return pl.B(i) & ~bit(AffinePlaneF3::point(i, j));
  };
  std::vector<ExtensionStep> steps;
  for (int j : {-1, 1}) {
    Mask x = column_minus(-1, j) | column_minus(1, j);
    Mask y = column_minus(0, j);
    steps.push_back(ExtensionStep::ak(x, y));
  }
  return steps;
}

Verdict dual_t3_ak_refutation(const Matroid& m, SolveStats* stats) {
  if (m.n() != 9)
    throw std::invalid_argument("dual_t3_ak_refutation expects a matroid on 9 elements");
  return check_chain(m.to_polymatroid(), dual_ttt_ak_steps(), stats);
}

namespace {

bool search_rec(const Polymatroid& base, ExtensionStep::Kind kind, int depth,
                const std::vector<std::pair<Mask, Mask>>& pool,
                std::vector<ExtensionStep>& prefix, std::vector<std::pair<Mask, Mask>>& pairs,
                RefutationSearch& out, long budget) {
  if (out.lp_solves >= budget) {
    out.truncated = true;
    return false;
  }
  ++out.lp_solves;
  Verdict v = check_chain(base, prefix);
  if (!feasible(v)) {
    out.sequence = pairs;
    return true;
  }
  if (static_cast<int>(prefix.size()) == depth) return false;
  for (const auto& [x, y] : pool) {
    prefix.push_back(kind == ExtensionStep::Kind::AK ? ExtensionStep::ak(x, y)
                                                     : ExtensionStep::ci(x, y));
    pairs.push_back({x, y});
    if (search_rec(base, kind, depth, pool, prefix, pairs, out, budget)) return true;
    prefix.pop_back();
    pairs.pop_back();
    if (out.truncated) return false;
  }
  return false;
}

}  // namespace

RefutationSearch search_refutation(const Polymatroid& base, ExtensionStep::Kind kind, int depth,
                                   const std::vector<std::pair<Mask, Mask>>& pool,
                                   long budget_lps) {
  if (pool.empty()) throw std::invalid_argument("search_refutation: empty pair pool");
  RefutationSearch out;
  std::vector<ExtensionStep> prefix;
  std::vector<std::pair<Mask, Mask>> pairs;
  search_rec(base, kind, depth, pool, prefix, pairs, out, budget_lps);
  return out;
}

namespace {

bool step_rows_hold(const SetFunction& g, ExtensionStep::Kind kind, Mask x, Mask y, Mask z,
                    Mask u) {
  // Evaluate the step conditions on h(S) = g(S u U) - g(U).
  auto cond = [&](Mask a, Mask b) { return g.cond(a | u, b | u); };  // h(A|B)
  switch (kind) {
    case ExtensionStep::Kind::CI: {
      if (cond(z, x) != 0 || cond(z, y) != 0) return false;
      // h(X:Y|Z) = h(XZ) + h(YZ) - h(XYZ) - h(Z)
      Rat m = g.at(x | z | u) + g.at(y | z | u) - g.at(x | y | z | u) - g.at(z | u);
      return m == 0;
    }
    case ExtensionStep::Kind::AK: {
      if (cond(z, x) != 0) return false;
      bool ok = true;
      for_each_submask(x, [&](Mask xp) {
        if (!ok || xp == 0) return;
        if (cond(xp, z) != cond(xp, y)) ok = false;
      });
      return ok;
    }
    case ExtensionStep::Kind::CL:
      throw std::invalid_argument("verify_minor_closure covers CI and AK steps");
  }
  return false;
}

}  // namespace

bool verify_minor_closure(const SetFunction& g, ExtensionStep::Kind kind, Mask x, Mask y, Mask u,
                          Mask z) {
  if (!step_rows_hold(g, kind, x | u, y | u, z, 0))
    throw std::invalid_argument("verify_minor_closure: g is not a witness for the pair (XU, YU)");
  return step_rows_hold(g, kind, x, y, z, u);
}

}  // namespace matex::lp
