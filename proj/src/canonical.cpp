#include "matex/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matex::cat {

namespace {

struct CanonSearch {
  int n, k;
  std::set<Mask> fam;
  // blocks[t]: the (k-1)-subsets of {0..t-1}, giving with t the k-subsets
  // whose colex position is decided once new label t is assigned.
  std::vector<std::vector<Mask>> blocks;
  std::vector<int> new2old;
  std::vector<char> cur;          // indicator bits in colex order, grown per depth
  std::vector<char> best;
  std::vector<int> best_new2old;
  bool has_best = false;
  std::vector<int> degree;        // membership count per original element

  CanonSearch(int n_, int k_, const std::vector<Mask>& f) : n(n_), k(k_), fam(f.begin(), f.end()) {
    blocks.resize(n);
    for (int t = 0; t < n; ++t) blocks[t] = k_subsets(t, k - 1);
    new2old.assign(n, -1);
    degree.assign(n, 0);
    for (Mask c : fam)
      for (int e : elements(c)) ++degree[e];
  }

  Mask to_old(Mask new_mask) const {
    Mask m = 0;
    while (new_mask) {
      int t = std::countr_zero(new_mask);
      m |= bit(new2old[t]);
      new_mask &= new_mask - 1;
    }
    return m;
  }

  // cmp: 0 = tied with best so far, 1 = strictly better than best.
  void run(int t, int cmp, Mask used) {
    if (t == n) {
      if (cmp == 1 || !has_best) {
        best = cur;
        best_new2old = new2old;
        has_best = true;
      }
      return;
    }
    // Candidate order: higher family degree first, then index; pure heuristic.
    std::vector<int> cands;
    for (int e = 0; e < n; ++e)
      if (!(used & bit(e))) cands.push_back(e);
    std::stable_sort(cands.begin(), cands.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });

    const std::size_t base = cur.size();
    for (int orig : cands) {
      new2old[t] = orig;
      int c = cmp;
      bool pruned = false;
      cur.resize(base);
      for (Mask tsub : blocks[t]) {
        char bit_val = fam.count(to_old(tsub) | bit(orig)) ? 1 : 0;
        if (c == 0 && has_best) {
          char b = best[cur.size()];
          if (bit_val > b)
            c = 1;
          else if (bit_val < b) {
            pruned = true;
            break;
          }
        }
        cur.push_back(bit_val);
      }
      if (!pruned) run(t + 1, c, used | bit(orig));
    }
    cur.resize(base);
    new2old[t] = -1;
  }
};

}  // namespace

std::vector<Mask> canonical_family(int n, int k, const std::vector<Mask>& fam) {
  if (fam.empty()) return {};
  if (fam.size() == 1) return {full_mask(k)};
  CanonSearch s(n, k, fam);
  s.run(0, 0, 0);
  // best_new2old maps new label -> original element; apply the inverse.
  std::vector<int> old2new(n);
  for (int t = 0; t < n; ++t) old2new[s.best_new2old[t]] = t;
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (Mask c : fam) out.push_back(apply_perm(c, old2new));
  std::sort(out.begin(), out.end());
  return out;
}

std::string canonical_family_key(int n, int k, const std::vector<Mask>& fam) {
  std::string key = std::to_string(n) + "." + std::to_string(k) + ":";
  for (Mask c : canonical_family(n, k, fam)) key += format_mask(c) + ",";
  return key;
}

std::vector<Mask> canonical_form(const SparsePavingMatroid& sp) {
  return canonical_family(sp.n, sp.k, sp.chs);
}

std::string canonical_key(const SparsePavingMatroid& sp) {
  return canonical_family_key(sp.n, sp.k, sp.chs);
}

std::vector<Mask> nonbasis_family(const Matroid& m) {
  std::vector<Mask> out;
  const int k = m.rank();
  for (Mask s : k_subsets(m.n(), k))
    if (m.rank(s) < k) out.push_back(s);
  return out;
}

std::string canonical_key(const Matroid& m) {
  return canonical_family_key(m.n(), m.rank(), nonbasis_family(m));
}

bool are_isomorphic(const SparsePavingMatroid& a, const SparsePavingMatroid& b) {
  if (a.n != b.n || a.k != b.k || a.chs.size() != b.chs.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n() || a.rank() != b.rank()) return false;
  return canonical_key(a) == canonical_key(b);
}

namespace {

bool embed_rec(int n, const std::vector<Mask>& sub, const std::set<Mask>& sup,
               std::vector<int>& old2new, Mask used, int next) {
  if (next == n) {
    for (Mask c : sub)
      if (!sup.count(apply_perm(c, old2new))) return false;
    return true;
  }
  for (int img = 0; img < n; ++img) {
    if (used & bit(img)) continue;
    old2new[next] = img;
    // Partial check: any fully-assigned sub member must land in sup.
    bool ok = true;
    const Mask assigned = full_mask(next + 1);
    for (Mask c : sub) {
      if (!contains(assigned, c)) continue;
      if (!sup.count(apply_perm(c, old2new))) {
        ok = false;
        break;
      }
    }
    if (ok && embed_rec(n, sub, sup, old2new, used | bit(img), next + 1)) return true;
  }
  old2new[next] = -1;
  return false;
}

}  // namespace

bool embeds_as_subfamily(int n, const std::vector<Mask>& sub, const std::vector<Mask>& sup) {
  if (sub.size() > sup.size()) return false;
  std::set<Mask> sup_set(sup.begin(), sup.end());
  std::vector<int> old2new(n, -1);
  return embed_rec(n, sub, sup_set, old2new, 0, 0);
}

}  // namespace matex::cat
