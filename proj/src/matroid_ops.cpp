#include "matex/matroid_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace matex {

Mask closure(const Matroid& m, Mask x) {
  Mask cl = x;
  const int rx = m.rank(x);
  for (int i = 0; i < m.n(); ++i)
    if (!(x & bit(i)) && m.rank(x | bit(i)) == rx) cl |= bit(i);
  return cl;
}

bool is_flat(const Matroid& m, Mask x) { return closure(m, x) == x; }

std::vector<Mask> flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= m.full(); ++x)
    if (closure(m, x) == x) out.push_back(x);
  return out;
}

std::vector<Mask> flats_of_rank(const Matroid& m, int r) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= m.full(); ++x)
    if (m.rank(x) == r && closure(m, x) == x) out.push_back(x);
  return out;
}

bool is_modular_pair(const Matroid& m, Mask f1, Mask f2) {
  if (!is_flat(m, f1) || !is_flat(m, f2))
    throw std::invalid_argument("is_modular_pair: inputs must be flats");
  return m.rank(f1) + m.rank(f2) == m.rank(f1 | f2) + m.rank(f1 & f2);
}

Matroid dual(const Matroid& m) {
  const Mask full = m.full();
  const int rq = m.rank();
  std::vector<std::int8_t> r(std::size_t{1} << m.n());
  for (Mask x = 0; x <= full; ++x)
    r[x] = static_cast<std::int8_t>(popcount(x) - rq + m.rank(full & ~x));
  return Matroid::from_ranks(m.n(), std::move(r));
}

SetFunction minor(const SetFunction& f, Mask delete_z1, Mask contract_z2) {
  if (delete_z1 & contract_z2) throw std::invalid_argument("minor: Z1 and Z2 overlap");
  const Mask gone = delete_z1 | contract_z2;
  // Remaining elements are relabeled in increasing order.
  std::vector<int> keep;
  for (int i = 0; i < f.n; ++i)
    if (!(gone & bit(i))) keep.push_back(i);
  SetFunction out(static_cast<int>(keep.size()));
  for (Mask s = 0; s < (Mask{1} << keep.size()); ++s) {
    Mask orig = 0;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (s & bit(static_cast<int>(j))) orig |= bit(keep[j]);
    out.v[s] = f.v[orig | contract_z2] - f.v[contract_z2];
  }
  return out;
}

Polymatroid minor(const Polymatroid& p, Mask delete_z1, Mask contract_z2) {
  return Polymatroid::from_checked(minor(p.f(), delete_z1, contract_z2));
}

Matroid minor(const Matroid& m, Mask delete_z1, Mask contract_z2) {
  return Matroid::from_checked(minor(m.to_set_function(), delete_z1, contract_z2));
}

BlockPartition BlockPartition::make(std::vector<Mask> blocks) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw std::invalid_argument("block partition: empty block");
    if (b & seen) throw std::invalid_argument("block partition: overlapping blocks");
    seen |= b;
  }
  return BlockPartition{std::move(blocks)};
}

SetFunction induced_set_function(const SetFunction& f, const BlockPartition& blocks) {
  const int m = static_cast<int>(blocks.blocks.size());
  SetFunction h(m);
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    Mask u = 0;
    for (int j = 0; j < m; ++j)
      if (s & bit(j)) u |= blocks.blocks[j];
    h.v[s] = f.v[u];
  }
  return h;
}

Polymatroid induced_polymatroid(const Polymatroid& p, const BlockPartition& blocks) {
  return Polymatroid::from_checked(induced_set_function(p.f(), blocks));
}

Polymatroid induced_polymatroid(const Matroid& m, const BlockPartition& blocks) {
  return Polymatroid::from_checked(induced_set_function(m.to_set_function(), blocks));
}

Rat ingleton_slack(const SetFunction& f, Mask a, Mask b, Mask c, Mask d) {
  return f.v[a | b] + f.v[a | c] + f.v[a | d] + f.v[b | c] + f.v[b | d] -
         (f.v[a] + f.v[b] + f.v[c | d] + f.v[a | b | c] + f.v[a | b | d]);
}

namespace {

// Scans disjoint nonempty quadruples in ascending nested order; the slack
// evaluator lets the matroid path stay in plain ints.
template <typename Eval>
std::optional<IngletonWitness> ingleton_scan(int n, Eval&& slack_of) {
  const Mask full = full_mask(n);
  std::optional<IngletonWitness> found;
  for (Mask a = 1; a <= full && !found; ++a) {
    const Mask ra = full & ~a;
    for_each_submask(ra, [&](Mask b) {
      if (!b || found) return;
      const Mask rb = ra & ~b;
      for_each_submask(rb, [&](Mask c) {
        if (!c || found) return;
        const Mask rc = rb & ~c;
        for_each_submask(rc, [&](Mask d) {
          if (!d || found) return;
          auto s = slack_of(a, b, c, d);
          if (s < 0) found = IngletonWitness{a, b, c, d, Rat(s)};
        });
      });
    });
  }
  return found;
}

}  // namespace

std::optional<IngletonWitness> ingleton_check(const Polymatroid& p) {
  const SetFunction& f = p.f();
  return ingleton_scan(f.n,
                       [&](Mask a, Mask b, Mask c, Mask d) { return ingleton_slack(f, a, b, c, d); });
}

std::optional<IngletonWitness> ingleton_check(const Matroid& m) {
  const auto& r = m.ranks();
  return ingleton_scan(m.n(), [&](Mask a, Mask b, Mask c, Mask d) {
    return static_cast<int>(r[a | b]) + r[a | c] + r[a | d] + r[b | c] + r[b | d] - r[a] - r[b] -
           r[c | d] - r[a | b | c] - r[a | b | d];
  });
}

Polymatroid vamos_like_polymatroid() {
  SetFunction h(4);
  for (Mask s = 1; s < 16; ++s) {
    switch (popcount(s)) {
      case 1: h.v[s] = 2; break;
      case 2: h.v[s] = (s == (bit(0) | bit(3))) ? 4 : 3; break;
      default: h.v[s] = 4; break;
    }
  }
  return Polymatroid::from_checked(std::move(h));
}

bool matches_vamos_pattern(const SetFunction& h) {
  if (h.n != 4 || h.v[0] != 0) return false;
  int fours = 0;
  for (Mask s = 1; s < 16; ++s) {
    switch (popcount(s)) {
      case 1:
        if (h.v[s] != 2) return false;
        break;
      case 2:
        if (h.v[s] == 4)
          ++fours;
        else if (h.v[s] != 3)
          return false;
        break;
      default:
        if (h.v[s] != 4) return false;
        break;
    }
  }
  return fours == 1;
}

std::optional<std::array<Mask, 4>> contains_vamos_configuration(const Matroid& m,
                                                                bool require_disjoint) {
  const std::vector<Mask> ls = lines(m);
  const auto& r = m.ranks();
  const std::size_t nl = ls.size();
  // Ordered tuples, ascending; the pattern fixes h(L0 L3) = 4 and the rest.
  for (std::size_t i0 = 0; i0 < nl; ++i0) {
    for (std::size_t i1 = 0; i1 < nl; ++i1) {
      if (i1 == i0) continue;
      const Mask l0 = ls[i0], l1 = ls[i1];
      if (require_disjoint && (l0 & l1)) continue;
      if (r[l0 | l1] != 3) continue;
      for (std::size_t i2 = 0; i2 < nl; ++i2) {
        if (i2 == i0 || i2 == i1) continue;
        const Mask l2 = ls[i2];
        if (require_disjoint && ((l0 | l1) & l2)) continue;
        if (r[l0 | l2] != 3 || r[l1 | l2] != 3) continue;
        if (r[l0 | l1 | l2] != 4) continue;
        for (std::size_t i3 = 0; i3 < nl; ++i3) {
          if (i3 == i0 || i3 == i1 || i3 == i2) continue;
          const Mask l3 = ls[i3];
          if (require_disjoint && ((l0 | l1 | l2) & l3)) continue;
          if (r[l0 | l3] != 4) continue;
          if (r[l1 | l3] != 3 || r[l2 | l3] != 3) continue;
          if (r[l0 | l1 | l3] != 4 || r[l0 | l2 | l3] != 4 || r[l1 | l2 | l3] != 4) continue;
          if (r[l0 | l1 | l2 | l3] != 4) continue;
          return std::array<Mask, 4>{l0, l1, l2, l3};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace matex
