#include "matex/ext_props.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace matex {

std::vector<std::pair<Mask, Mask>> nonmodular_flat_pairs(const Matroid& m) {
  const std::vector<Mask> fl = flats(m);
  std::vector<std::pair<Mask, Mask>> out;
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t j = i + 1; j < fl.size(); ++j)
      if (m.rank(fl[i]) + m.rank(fl[j]) != m.rank(fl[i] | fl[j]) + m.rank(fl[i] & fl[j]))
        out.emplace_back(fl[i], fl[j]);
  return out;
}

std::optional<ModularCut> ge_extension_exists(const Matroid& m, Mask f1, Mask f2) {
  if (is_modular_pair(m, f1, f2))
    throw std::invalid_argument("ge_extension_exists: pair is modular");
  ModularCut cut = minimal_modular_cut(m, {f1, f2});
  if (cut.member(f1 & f2)) return std::nullopt;
  return cut;
}

namespace {

struct KGESearch {
  KGEStrategy strategy;
  long budget;
  long nodes = 0;
  bool exhausted = false;

  bool spend() {
    if (nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    return true;
  }

  KGEVerdict rec(const Matroid& m, int depth) {
    KGEVerdict v;
    v.status = KGEStatus::Passed;
    if (depth == 0) return v;
    for (const auto& [f1, f2] : nonmodular_flat_pairs(m)) {
      if (strategy == KGEStrategy::MinimalCut) {
        auto cut = ge_extension_exists(m, f1, f2);
        if (!cut) {
          v.status = KGEStatus::Refuted;
          v.dead_end = {f1, f2};
          return v;
        }
        if (depth >= 2) {
          if (!spend()) {
            v.status = KGEStatus::Truncated;
            v.note = "budget exhausted";
            return v;
          }
          Matroid ext = extend_by_modular_cut(m, *cut);
          KGEVerdict sub = rec(ext, depth - 1);
          if (sub.status != KGEStatus::Passed) {
            sub.chain.insert(sub.chain.begin(),
                             ExtensionStepRecord{ExtensionStepRecord::Kind::GE,
                                                 {f1, f2},
                                                 *cut,
                                                 m.n()});
            return sub;
          }
        }
      } else {
        bool truncated_cuts = false;
        auto cuts = enumerate_admissible_cuts(m, {f1, f2}, {f1 & f2}, 4096, &truncated_cuts);
        if (cuts.empty() && !truncated_cuts) {
          v.status = KGEStatus::Refuted;
          v.dead_end = {f1, f2};
          return v;
        }
        if (depth >= 2) {
          bool some_passes = false;
          KGEVerdict first_refutation;
          bool saw_truncated = truncated_cuts;
          for (const ModularCut& cut : cuts) {
            if (!spend()) {
              v.status = KGEStatus::Truncated;
              v.note = "budget exhausted";
              return v;
            }
            Matroid ext = extend_by_modular_cut(m, cut);
            KGEVerdict sub = rec(ext, depth - 1);
            if (sub.status == KGEStatus::Passed) {
              some_passes = true;
              break;
            }
            if (sub.status == KGEStatus::Truncated) {
              saw_truncated = true;
              continue;
            }
            if (first_refutation.chain.empty() && !first_refutation.dead_end) {
              sub.chain.insert(sub.chain.begin(),
                               ExtensionStepRecord{ExtensionStepRecord::Kind::GE,
                                                   {f1, f2},
                                                   cut,
                                                   m.n()});
              first_refutation = sub;
            }
          }
          if (!some_passes) {
            if (saw_truncated) {
              v.status = KGEStatus::Truncated;
              v.note = "cut enumeration truncated; refutation not confirmed";
              return v;
            }
            first_refutation.status = KGEStatus::Refuted;
            return first_refutation;
          }
        }
      }
    }
    return v;  // Passed
  }
};

}  // namespace

KGEVerdict kge_check(const Matroid& m, int depth, KGEStrategy strategy, long budget_nodes) {
  if (depth < 0) throw std::invalid_argument("kge_check: depth must be >= 0");
  KGESearch s{strategy, budget_nodes};
  KGEVerdict v = s.rec(m, depth);
  v.nodes = s.nodes;
  if (strategy == KGEStrategy::MinimalCut && depth >= 2) {
    // Only the minimal cut per pair was explored, so deep verdicts are
    // heuristic: a top-level dead end is still an exact refutation.
    if (v.status == KGEStatus::Refuted && !v.chain.empty()) {
      v.status = KGEStatus::Truncated;
      v.note = "minimal-cut heuristic refutation at depth " +
               std::to_string(v.chain.size()) + "; confirm with Exhaustive";
    } else if (v.status == KGEStatus::Passed) {
      v.status = KGEStatus::Truncated;
      v.note = "minimal-cut heuristic pass; confirm with Exhaustive";
    }
  }
  return v;
}

CEResult ce_extension(const Matroid& m, Mask f1, Mask f2) {
  if (closure(m, f1) != f1 || closure(m, f2) != f2)
    throw std::invalid_argument("ce_extension: inputs must be flats");
  CEResult res{m, {}, std::nullopt, -1};
  Mask a = f1, b = f2;
  int step = 0;
  while (!is_modular_pair(res.m, a, b)) {
    auto cut = ge_extension_exists(res.m, a, b);
    if (!cut) {
      res.dead_end = {a, b};
      res.dead_end_step = step;
      return res;
    }
    const int z = res.m.n();
    Matroid ext = extend_by_modular_cut(res.m, *cut);
    res.chain.push_back(
        ExtensionStepRecord{ExtensionStepRecord::Kind::CE, {a, b}, *cut, z});
    a = closure(ext, a | bit(z));
    b = closure(ext, b | bit(z));
    res.m = std::move(ext);
    ++step;
  }
  return res;
}

std::optional<ModularCut> im_extension_exists(const Matroid& m, Mask l1, Mask l2, Mask l3) {
  const std::array<Mask, 3> ls{l1, l2, l3};
  for (Mask l : ls) {
    if (closure(m, l) != l || m.rank(l) != 2)
      throw std::invalid_argument("im_extension_exists: " + format_mask(l) +
                                  " is not a rank-2 flat");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m.rank(ls[i] | ls[j]) != 3)
        throw std::invalid_argument("im_extension_exists: f(" + format_mask(ls[i]) +
                                    format_mask(ls[j]) + ") != 3");
  if (m.rank(l1 | l2 | l3) != 4)
    throw std::invalid_argument("im_extension_exists: f(l1 l2 l3) != 4");
  ModularCut cut = minimal_modular_cut(m, {l1, l2, l3});
  const Mask zero_flat = closure(m, 0);
  if (cut.member(zero_flat)) return std::nullopt;
  return cut;
}

std::optional<std::array<Mask, 3>> im_refutation(const Matroid& m) {
  const std::vector<Mask> ls = lines(m);
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (m.rank(ls[i] | ls[j]) != 3) continue;
      for (std::size_t k = j + 1; k < ls.size(); ++k) {
        if (m.rank(ls[i] | ls[k]) != 3 || m.rank(ls[j] | ls[k]) != 3) continue;
        if (m.rank(ls[i] | ls[j] | ls[k]) != 4) continue;
        if (!im_extension_exists(m, ls[i], ls[j], ls[k]))
          return std::array<Mask, 3>{ls[i], ls[j], ls[k]};
      }
    }
  return std::nullopt;
}

ChainResult scripted_chain(const Matroid& m, const std::vector<ScriptStep>& steps) {
  ChainResult res{m, {}, std::nullopt, ""};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ScriptStep& st = steps[i];
    std::vector<Mask> fl;
    for (Mask s : st.sets) fl.push_back(closure(res.m, s));
    try {
      switch (st.kind) {
        case ExtensionStepRecord::Kind::GE: {
          if (fl.size() != 2) throw std::invalid_argument("GE step needs two sets");
          auto cut = ge_extension_exists(res.m, fl[0], fl[1]);
          if (!cut) {
            res.failed_step = static_cast<int>(i);
            res.failure = "no GE cut for (" + format_mask(fl[0]) + "," + format_mask(fl[1]) + ")";
            return res;
          }
          const int z = res.m.n();
          res.records.push_back({ExtensionStepRecord::Kind::GE, fl, *cut, z});
          res.m = extend_by_modular_cut(res.m, *cut);
          break;
        }
        case ExtensionStepRecord::Kind::IM: {
          if (fl.size() != 3) throw std::invalid_argument("IM step needs three sets");
          auto cut = im_extension_exists(res.m, fl[0], fl[1], fl[2]);
          if (!cut) {
            res.failed_step = static_cast<int>(i);
            res.failure = "no IM cut";
            return res;
          }
          const int z = res.m.n();
          res.records.push_back({ExtensionStepRecord::Kind::IM, fl, *cut, z});
          res.m = extend_by_modular_cut(res.m, *cut);
          break;
        }
        case ExtensionStepRecord::Kind::CE: {
          if (fl.size() != 2) throw std::invalid_argument("CE step needs two sets");
          CEResult ce = ce_extension(res.m, fl[0], fl[1]);
          if (!ce.ok()) {
            res.failed_step = static_cast<int>(i);
            res.failure = "CE dead end";
            return res;
          }
          for (auto& r : ce.chain) res.records.push_back(std::move(r));
          res.m = std::move(ce.m);
          break;
        }
      }
    } catch (const std::invalid_argument& e) {
      res.failed_step = static_cast<int>(i);
      res.failure = e.what();
      return res;
    }
  }
  return res;
}

}  // namespace matex
