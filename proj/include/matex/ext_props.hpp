#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matex/modular_cut.hpp"

namespace matex {

// One applied single-element extension in a chain.
struct ExtensionStepRecord {
  enum class Kind { GE, CE, IM };
  Kind kind;
  std::vector<Mask> flats;  // pair (GE/CE) or triple (IM), in the matroid extended
  ModularCut cut;
  int new_element;
};

// All non-modular pairs of flats (f1 < f2), ascending.
std::vector<std::pair<Mask, Mask>> nonmodular_flat_pairs(const Matroid& m);

// Minimal modular cut generated by {F1,F2} if it avoids F1 n F2 (which is a
// flat), else nullopt: no single-element extension can place a point on both
// flats while raising the rank of their intersection, because every
// admissible cut contains the minimal one. Throws on a modular input pair.
std::optional<ModularCut> ge_extension_exists(const Matroid& m, Mask f1, Mask f2);

enum class KGEStatus { Passed, Refuted, Truncated };
enum class KGEStrategy { MinimalCut, Exhaustive };

struct KGEVerdict {
  KGEStatus status = KGEStatus::Truncated;
  // For Refuted (and heuristic dead ends): the extension chain that leads to
  // the matroid in which dead_end admits no GE cut; replayable.
  std::vector<ExtensionStepRecord> chain;
  std::optional<std::pair<Mask, Mask>> dead_end;
  std::string note;
  long nodes = 0;  // extensions built
};

// Depth-k generalized Euclidean check. Passed at k=0 always. MinimalCut
// tries only the minimal cut per pair: exact at k=1, heuristic beyond
// (deep results come back Truncated with a note). Exhaustive enumerates all
// admissible cuts per pair and is complete within the node budget.
KGEVerdict kge_check(const Matroid& m, int depth, KGEStrategy strategy, long budget_nodes = 100000);

struct CEResult {
  Matroid m;  // final extension (or the last one reached before a dead end)
  std::vector<ExtensionStepRecord> chain;
  // Set when some intermediate pair admits no GE cut.
  std::optional<std::pair<Mask, Mask>> dead_end;
  int dead_end_step = -1;
  bool ok() const { return !dead_end.has_value(); }
};

// Repeated GE extensions on the images of (F1,F2) until the pair is modular.
CEResult ce_extension(const Matroid& m, Mask f1, Mask f2);

// Minimal modular cut generated by three lines (f(li)=2, f(li lj)=3,
// f(l1 l2 l3)=4) if it avoids the rank-0 flat, else nullopt. Throws with
// the failed rank condition if the precondition does not hold.
std::optional<ModularCut> im_extension_exists(const Matroid& m, Mask l1, Mask l2, Mask l3);

// First line triple satisfying the IM precondition that admits no cut, or
// nullopt when every such triple has one.
std::optional<std::array<Mask, 3>> im_refutation(const Matroid& m);

struct ScriptStep {
  ExtensionStepRecord::Kind kind;
  std::vector<Mask> sets;  // closures are taken in the current extension
};

struct ChainResult {
  Matroid m;
  std::vector<ExtensionStepRecord> records;
  std::optional<int> failed_step;
  std::string failure;
  bool ok() const { return !failed_step.has_value(); }
};

// Applies minimal-cut extensions for each step in order.
ChainResult scripted_chain(const Matroid& m, const std::vector<ScriptStep>& steps);

}  // namespace matex
