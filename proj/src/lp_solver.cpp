#include "matex/lp_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace matex::lp {

namespace {

// ---------------------------------------------------------------------------
// Collapse witnesses: mapping every added element to a subset of the base
// ground set yields a valid polymatroid extension (g = f o mu preserves the
// Shannon rows), so a chain whose steps can all be realized that way is
// feasible without touching the simplex. Unmapped elements behave as free
// rank-1 points, which still satisfies the Shannon rows and provides the
// solver's reference point.
// ---------------------------------------------------------------------------

struct Collapse {
  // For each augmented element: its base image, or nullopt for a free point.
  std::vector<std::optional<Mask>> image;
  int base_n;

  // Base part of S's image plus the count of free points in S.
  std::pair<Mask, int> project(Mask s) const {
    Mask m = 0;
    int free_points = 0;
    for (int e : elements(s)) {
      if (image[e])
        m |= *image[e];
      else
        ++free_points;
    }
    return {m, free_points};
  }

  SetFunction materialize(const SetFunction& base, int total_n) const {
    SetFunction g(total_n);
    for (Mask s = 1; s <= full_mask(total_n); ++s) {
      auto [m, free_points] = project(s);
      g.at(s) = base.at(m) + free_points;
    }
    return g;
  }
};

// Greedy per-step collapse; steps that cannot be collapsed leave their new
// elements free and mark the collapse partial.
Collapse build_collapse(const LPModel& model, bool* complete) {
  const SetFunction& f = model.base;
  Collapse col;
  col.base_n = model.base_n;
  col.image.resize(model.total_n);
  for (int e = 0; e < model.base_n; ++e) col.image[e] = bit(e);
  *complete = true;

  auto mapped = [&](Mask s) -> std::optional<Mask> {
    Mask m = 0;
    for (int e : elements(s)) {
      if (!col.image[e]) return std::nullopt;
      m |= *col.image[e];
    }
    return m;
  };

  for (std::size_t i = 0; i < model.steps.size(); ++i) {
    const ExtensionStep& st = model.steps[i];
    const auto& zs = model.step_elements[i];
    auto mx = mapped(st.x), my = mapped(st.y);
    bool done = false;
    if (mx && my) {
      switch (st.kind) {
        case ExtensionStep::Kind::CI: {
          for (Mask w = 0; w <= full_mask(model.base_n) && !done; ++w) {
            if (f.cond(w, *mx) == 0 && f.cond(w, *my) == 0 && f.mutual(*mx, *my, w) == 0) {
              col.image[zs[0]] = w;
              done = true;
            }
          }
          break;
        }
        case ExtensionStep::Kind::AK: {
          for (Mask w = 0; w <= full_mask(model.base_n) && !done; ++w) {
            if (f.cond(w, *mx) != 0) continue;
            bool ok = true;
            for_each_submask(*mx, [&](Mask xp) {
              if (!ok || xp == 0) return;
              if (f.cond(xp, w) != f.cond(xp, *my)) ok = false;
            });
            if (ok) {
              col.image[zs[0]] = w;
              done = true;
            }
          }
          break;
        }
        case ExtensionStep::Kind::CL: {
          auto mx2 = mapped(st.x2);
          if (!mx2) break;
          // Identity copy: z_t |-> image of t; the isomorphism rows hold by
          // construction, only the independence row needs a check.
          if (f.mutual(*my, *mx2 | *my, *mx) == 0) {
            const auto ys = elements(st.y);
            for (std::size_t t = 0; t < ys.size(); ++t) col.image[zs[t]] = *col.image[ys[t]];
            done = true;
          }
          break;
        }
      }
    }
    if (!done) *complete = false;  // leave the step's elements free
  }
  return col;
}

// ---------------------------------------------------------------------------
// Active-set exact dual simplex.
//
// System rows are model rows shifted to delta-space (g = g0 + delta) and
// oriented as  a . delta >= c,  with equality rows split into two opposite
// inequalities, both active from the start. Every system row owns a slack
// (a . delta - s = c, s >= 0); the basis starts as all slacks and grows by
// one slack column per activated row. Basic free (structural) variables
// never block feasibility; a pivot step drives some negative basic slack to
// its bound. When a violated row admits no eligible entering column, the
// corresponding row of the basis inverse is a Farkas certificate.
// ---------------------------------------------------------------------------

struct ColRef {
  enum class Kind { Var, Slack } kind;
  std::size_t id;  // var position (model.vars) or system row position
  bool operator==(const ColRef&) const = default;
};

struct Simplex {
  const LPModel& model;
  SetFunction g0;
  std::vector<Rat> g0_vals;  // per model var

  struct SysRow {
    std::size_t model_row;
    int sign;  // +1: row as-is, -1: negated (second half of an equality)
    Rat c;     // rhs in delta-space
  };
  std::vector<SysRow> sys;
  std::vector<char> ge_active;  // per model row, for Ge rows

  // Sparse structural columns over active system rows.
  std::vector<std::vector<std::pair<std::size_t, int>>> col;  // per var position
  std::vector<char> var_touched;
  std::vector<std::size_t> touched_list;

  std::vector<std::vector<Rat>> binv;
  std::vector<Rat> beta;
  std::vector<ColRef> basis;        // per slot
  std::vector<long> var_slot;       // var position -> slot or -1
  std::vector<long> slack_slot;     // system row -> slot or -1 (nonbasic slack)

  long pivots = 0;
  bool bland = false;
  long stall = 0;

  explicit Simplex(const LPModel& m, SetFunction ref) : model(m), g0(std::move(ref)) {
    g0_vals.reserve(model.vars.size());
    for (Mask s : model.vars) g0_vals.push_back(g0.at(s));
    ge_active.assign(model.rows.size(), 0);
    col.resize(model.vars.size());
    var_touched.assign(model.vars.size(), 0);
    var_slot.assign(model.vars.size(), -1);
  }

  Rat delta_of_var(std::size_t v) const { return var_slot[v] >= 0 ? beta[var_slot[v]] : Rat(0); }

  Rat row_value_delta(const Row& r, int sign) const {
    Rat acc(0);
    for (const RowTerm& t : r.terms) {
      std::size_t v = static_cast<std::size_t>(model.var_index[t.subset]);
      if (var_slot[v] < 0) continue;
      acc += t.coef * beta[var_slot[v]];
    }
    return sign > 0 ? acc : Rat(-acc);
  }

  void activate(std::size_t model_row, int sign) {
    const Row& r = model.rows[model_row];
    const std::size_t pos = sys.size();
    // Delta-space rhs: c = rhs - a . g0, then sign-flipped for the negated half.
    Rat c = r.rhs;
    for (const RowTerm& t : r.terms)
      c -= t.coef * g0.at(t.subset);
    if (sign < 0) c = -c;
    sys.push_back({model_row, sign, c});
    for (const RowTerm& t : r.terms) {
      std::size_t v = static_cast<std::size_t>(model.var_index[t.subset]);
      col[v].push_back({pos, sign * t.coef});
      if (!var_touched[v]) {
        var_touched[v] = 1;
        touched_list.push_back(v);
      }
    }
    // Extend the basis with the new row's slack.
    const std::size_t m = binv.size();
    std::vector<Rat> u(m + 1, Rat(0));
    Rat val(0);  // a . delta*
    for (const RowTerm& t : r.terms) {
      std::size_t v = static_cast<std::size_t>(model.var_index[t.subset]);
      if (var_slot[v] < 0) continue;
      const Rat coef = Rat(sign * t.coef);
      val += coef * beta[var_slot[v]];
      for (std::size_t j = 0; j < m; ++j) u[j] += coef * binv[var_slot[v]][j];
    }
    u[m] = -1;
    for (std::size_t i = 0; i < m; ++i) binv[i].push_back(Rat(0));
    binv.push_back(std::move(u));
    beta.push_back(val - sys[pos].c);
    basis.push_back({ColRef::Kind::Slack, pos});
    slack_slot.push_back(static_cast<long>(binv.size() - 1));
    stall = 0;
  }

  // Returns slot of a violated basic slack, or -1 when primal feasible.
  long pick_leaving() const {
    long best = -1;
    const Rat* best_val = nullptr;
    for (std::size_t s = 0; s < basis.size(); ++s) {
      if (basis[s].kind != ColRef::Kind::Slack) continue;
      if (beta[s] >= 0) continue;
      if (bland) {
        if (best < 0 || basis[s].id < basis[best].id) best = static_cast<long>(s);
      } else if (best < 0 || beta[s] < *best_val) {
        best = static_cast<long>(s);
        best_val = &beta[s];
      }
    }
    return best;
  }

  // One dual step from slot r; returns false with certificate row if stuck.
  bool step(long r, std::vector<Rat>* cert_row) {
    const std::vector<Rat>& trow = binv[r];
    // Entering search, least index: structural vars first, then slacks.
    std::optional<ColRef> enter;
    Rat enter_t;
    for (std::size_t v : touched_list_sorted()) {
      if (var_slot[v] >= 0) continue;
      Rat t(0);
      for (auto [pos, c] : col[v]) t += c * trow[pos];
      if (t != 0) {
        enter = ColRef{ColRef::Kind::Var, v};
        enter_t = t;
        break;
      }
    }
    if (!enter) {
      for (std::size_t pos = 0; pos < sys.size(); ++pos) {
        if (slack_slot[pos] >= 0) continue;
        Rat t = -trow[pos];
        if (t < 0) {
          enter = ColRef{ColRef::Kind::Slack, pos};
          enter_t = t;
          break;
        }
      }
    }
    if (!enter) {
      *cert_row = trow;
      return false;
    }
    pivot(r, *enter, enter_t);
    return true;
  }

  std::vector<std::size_t> touched_sorted_cache;
  const std::vector<std::size_t>& touched_list_sorted() {
    if (touched_sorted_cache.size() != touched_list.size()) {
      touched_sorted_cache = touched_list;
      std::sort(touched_sorted_cache.begin(), touched_sorted_cache.end());
    }
    return touched_sorted_cache;
  }

  void pivot(long r, ColRef enter, const Rat& pivot_val) {
    const std::size_t m = binv.size();
    // w = B^-1 . entering column
    std::vector<Rat> w(m, Rat(0));
    if (enter.kind == ColRef::Kind::Var) {
      for (auto [pos, c] : col[enter.id])
        for (std::size_t i = 0; i < m; ++i) w[i] += c * binv[i][pos];
    } else {
      for (std::size_t i = 0; i < m; ++i) w[i] = -binv[i][enter.id];
    }
    if (w[r] != pivot_val) throw std::logic_error("simplex: inconsistent pivot value");
    if (w[r] == 0) throw std::logic_error("simplex: zero pivot");
    const Rat inv = 1 / w[r];
    for (Rat& x : binv[r]) x *= inv;
    Rat theta = beta[r] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<long>(i) == r || w[i] == 0) continue;
      const Rat factor = w[i];
      for (std::size_t j = 0; j < binv[i].size(); ++j) binv[i][j] -= factor * binv[r][j];
      beta[i] -= factor * theta;
    }
    beta[r] = theta;
    // Bookkeeping.
    ColRef leave = basis[r];
    if (leave.kind == ColRef::Kind::Var)
      var_slot[leave.id] = -1;
    else
      slack_slot[leave.id] = -1;
    basis[r] = enter;
    if (enter.kind == ColRef::Kind::Var)
      var_slot[enter.id] = r;
    else
      slack_slot[enter.id] = r;
    ++pivots;
  }

  // Runs until primal feasible (true) or infeasible (false, with system-row
  // multipliers y >= 0 combining to 0 >= positive).
  bool run(std::vector<std::pair<std::size_t, Rat>>* sys_cert) {
    while (true) {
      long r = pick_leaving();
      if (r < 0) return true;
      if (!bland && ++stall > 4 * static_cast<long>(binv.size()) + 200) bland = true;
      std::vector<Rat> cert_row;
      if (!step(r, &cert_row)) {
        sys_cert->clear();
        for (std::size_t pos = 0; pos < sys.size(); ++pos) {
          Rat y = -cert_row[pos];
          if (y != 0) sys_cert->push_back({pos, y});
        }
        return false;
      }
    }
  }

  SetFunction current_witness() const {
    SetFunction g(model.total_n);
    for (Mask s = 1; s <= model.full(); ++s) {
      if (model.is_pinned(s)) {
        g.at(s) = model.base.at(s);
      } else {
        std::size_t v = static_cast<std::size_t>(model.var_index[s]);
        g.at(s) = g0.at(s) + delta_of_var(v);
      }
    }
    return g;
  }
};

}  // namespace

std::optional<std::size_t> first_violated_row(const LPModel& model, const SetFunction& g) {
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const Row& r = model.rows[i];
    Rat s = model.row_slack(r, g);
    if (r.rel == Row::Rel::Eq ? s != 0 : s < 0) return i;
  }
  return std::nullopt;
}

void verify_certificate(const LPModel& model, const Infeasible& cert) {
  std::map<Mask, Rat> acc;
  Rat rhs_acc(0);
  for (const auto& [idx, mult] : cert.multipliers) {
    if (idx >= model.rows.size()) throw std::logic_error("certificate: row index out of range");
    const Row& r = model.rows[idx];
    if (r.rel == Row::Rel::Ge && mult < 0)
      throw std::logic_error("certificate: negative multiplier on an inequality row");
    for (const RowTerm& t : r.terms) {
      acc[t.subset] += mult * t.coef;
      if (acc[t.subset] == 0) acc.erase(t.subset);
    }
    rhs_acc += mult * r.rhs;
  }
  if (!acc.empty()) throw std::logic_error("certificate: combination does not cancel");
  if (!(rhs_acc > 0)) throw std::logic_error("certificate: combined rhs is not positive");
}

Verdict solve_feasibility(const LPModel& model, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;

  bool complete = false;
  Collapse col = build_collapse(model, &complete);
  SetFunction g0 = col.materialize(model.base, model.total_n);
  if (complete && !first_violated_row(model, g0)) {
    st.collapse_witness = true;
    return Feasible{std::move(g0)};
  }

  Simplex sx(model, std::move(g0));
  // Equality rows are always active, both orientations.
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    if (model.rows[i].rel == Row::Rel::Eq) {
      sx.activate(i, +1);
      sx.activate(i, -1);
    }
  }

  constexpr std::size_t kAddPerRound = 48;
  while (true) {
    ++st.outer_rounds;
    std::vector<std::pair<std::size_t, Rat>> sys_cert;
    if (!sx.run(&sys_cert)) {
      // Merge split equality halves back onto model rows.
      std::map<std::size_t, Rat> merged;
      for (const auto& [pos, y] : sys_cert) {
        const auto& srow = sx.sys[pos];
        merged[srow.model_row] += srow.sign > 0 ? y : Rat(-y);
      }
      Infeasible inf;
      for (auto& [row, mult] : merged)
        if (mult != 0) inf.multipliers.push_back({row, mult});
      verify_certificate(model, inf);
      st.pivots = sx.pivots;
      st.active_rows = sx.sys.size();
      return inf;
    }
    // Exact scan of nonactive rows at the current point.
    SetFunction g = sx.current_witness();
    std::vector<std::pair<Rat, std::size_t>> violated;
    for (std::size_t i = 0; i < model.rows.size(); ++i) {
      if (model.rows[i].rel == Row::Rel::Eq || sx.ge_active[i]) continue;
      Rat s = model.row_slack(model.rows[i], g);
      if (s < 0) violated.push_back({std::move(s), i});
    }
    if (violated.empty()) {
      if (auto bad = first_violated_row(model, g))
        throw std::logic_error("witness failed exact verification at row " +
                               model.rows[*bad].label);
      st.pivots = sx.pivots;
      st.active_rows = sx.sys.size();
      return Feasible{std::move(g)};
    }
    std::sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;  // most negative first
      return a.second < b.second;
    });
    const std::size_t take = std::min(kAddPerRound, violated.size());
    for (std::size_t t = 0; t < take; ++t) {
      sx.ge_active[violated[t].second] = 1;
      sx.activate(violated[t].second, +1);
    }
  }
}

}  // namespace matex::lp
