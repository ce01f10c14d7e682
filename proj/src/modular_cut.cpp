#include "matex/modular_cut.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace matex {

bool ModularCut::member(Mask f) const {
  return std::binary_search(flats.begin(), flats.end(), f);
}

namespace {

bool modular_pair_ranks(const Matroid& m, Mask f1, Mask f2) {
  return m.rank(f1) + m.rank(f2) == m.rank(f1 | f2) + m.rank(f1 & f2);
}

}  // namespace

std::optional<std::string> check_modular_cut(const Matroid& m, const ModularCut& cut) {
  for (Mask f : cut.flats)
    if (closure(m, f) != f) return "member " + format_mask(f) + " is not a flat";
  const std::vector<Mask> all = flats(m);
  for (Mask f : cut.flats)
    for (Mask g : all)
      if (contains(g, f) && !cut.member(g))
        return "not upward closed: " + format_mask(g) + " contains member " + format_mask(f);
  for (std::size_t i = 0; i < cut.flats.size(); ++i)
    for (std::size_t j = i + 1; j < cut.flats.size(); ++j) {
      Mask f1 = cut.flats[i], f2 = cut.flats[j];
      if (modular_pair_ranks(m, f1, f2) && !cut.member(f1 & f2))
        return "modular pair (" + format_mask(f1) + "," + format_mask(f2) +
               ") without its intersection";
    }
  return std::nullopt;
}

ModularCut minimal_modular_cut(const Matroid& m, const std::vector<Mask>& generators) {
  const std::vector<Mask> all = flats(m);
  for (Mask g : generators)
    if (closure(m, g) != g)
      throw std::invalid_argument("minimal_modular_cut: generator " + format_mask(g) +
                                  " is not a flat");
  std::set<Mask> cut;
  // Upward closure of one new member.
  auto add_up = [&](Mask f, auto&& self) -> void {
    if (cut.count(f)) return;
    cut.insert(f);
    for (Mask g : all)
      if (contains(g, f) && !cut.count(g)) self(g, self);
  };
  for (Mask g : generators) add_up(g, add_up);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> members(cut.begin(), cut.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Mask inter = members[i] & members[j];
        if (!cut.count(inter) && modular_pair_ranks(m, members[i], members[j])) {
          add_up(inter, add_up);
          changed = true;
        }
      }
  }
  return ModularCut{std::vector<Mask>(cut.begin(), cut.end())};
}

Matroid extend_by_modular_cut(const Matroid& m, const ModularCut& cut) {
  if (auto bad = check_modular_cut(m, cut))
    throw std::invalid_argument("invalid modular cut: " + *bad);
  const int n = m.n();
  if (n + 1 > kMaxGround) throw std::invalid_argument("extension exceeds ground-set cap");
  const Mask z = bit(n);
  std::vector<std::int8_t> g(std::size_t{1} << (n + 1));
  for (Mask x = 0; x <= m.full(); ++x) {
    g[x] = static_cast<std::int8_t>(m.rank(x));
    const bool in_cut = cut.member(closure(m, x));
    g[x | z] = static_cast<std::int8_t>(m.rank(x) + (in_cut ? 0 : 1));
  }
  return Matroid::from_ranks(n + 1, std::move(g));
}

namespace {

struct CutEnum {
  const Matroid& m;
  std::vector<Mask> order;                   // flats, rank desc then mask asc
  std::unordered_map<Mask, std::size_t> pos;
  std::vector<std::vector<std::size_t>> supersets;  // positions of strict supersets
  std::size_t cap;
  bool truncated = false;
  std::vector<ModularCut> out;

  explicit CutEnum(const Matroid& mat, std::size_t cap_) : m(mat), cap(cap_) {
    order = flats(mat);
    std::stable_sort(order.begin(), order.end(), [&](Mask a, Mask b) {
      if (mat.rank(a) != mat.rank(b)) return mat.rank(a) > mat.rank(b);
      return a < b;
    });
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    supersets.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j)
        if (i != j && contains(order[j], order[i])) supersets[i].push_back(j);
  }

  // status: 0 undecided, 1 in, -1 out
  // Forces position p in; returns false on contradiction.
  bool force_in(std::vector<signed char>& st, std::size_t p) {
    if (st[p] == 1) return true;
    if (st[p] == -1) return false;
    st[p] = 1;
    for (std::size_t s : supersets[p]) {
      if (st[s] == -1) return false;
      if (st[s] == 0 && !force_in(st, s)) return false;
    }
    // Modular intersections with existing members.
    for (std::size_t q = 0; q < order.size(); ++q) {
      if (st[q] != 1 || q == p) continue;
      Mask inter = order[p] & order[q];
      if (modular_pair_ranks(m, order[p], order[q])) {
        auto it = pos.find(inter);
        if (it == pos.end()) return false;  // cannot happen: flats close under intersection
        if (!force_in(st, it->second)) return false;
      }
    }
    return true;
  }

  void rec(std::vector<signed char> st, std::size_t next) {
    if (out.size() >= cap) {
      truncated = true;
      return;
    }
    while (next < order.size() && st[next] != 0) ++next;
    if (next == order.size()) {
      std::vector<Mask> members;
      for (std::size_t i = 0; i < order.size(); ++i)
        if (st[i] == 1) members.push_back(order[i]);
      std::sort(members.begin(), members.end());
      out.push_back(ModularCut{std::move(members)});
      return;
    }
    // Membership first.
    {
      std::vector<signed char> st_in = st;
      if (force_in(st_in, next)) rec(std::move(st_in), next + 1);
    }
    if (out.size() >= cap) {
      truncated = true;
      return;
    }
    st[next] = -1;
    rec(std::move(st), next + 1);
  }
};

}  // namespace

std::vector<ModularCut> enumerate_admissible_cuts(const Matroid& m,
                                                  const std::vector<Mask>& must_contain,
                                                  const std::vector<Mask>& must_exclude,
                                                  std::size_t cap, bool* truncated) {
  if (cap < 1) throw std::invalid_argument("enumerate_admissible_cuts: cap must be >= 1");
  CutEnum e(m, cap);
  std::vector<signed char> st(e.order.size(), 0);
  bool consistent = true;
  for (Mask f : must_exclude) {
    auto it = e.pos.find(f);
    if (it == e.pos.end()) throw std::invalid_argument("must_exclude contains a non-flat");
    if (st[it->second] == 1) consistent = false;
    st[it->second] = -1;
  }
  for (Mask f : must_contain) {
    auto it = e.pos.find(f);
    if (it == e.pos.end()) throw std::invalid_argument("must_contain contains a non-flat");
    if (consistent && !e.force_in(st, it->second)) consistent = false;
  }
  if (consistent) e.rec(std::move(st), 0);
  if (truncated) *truncated = e.truncated;
  // Every emitted family went through forced propagation only when reached;
  // re-check the axioms to guard the pruning logic.
  for (const ModularCut& c : e.out)
    if (check_modular_cut(m, c))
      throw std::logic_error("enumerate_admissible_cuts produced an invalid cut");
  return e.out;
}

}  // namespace matex
