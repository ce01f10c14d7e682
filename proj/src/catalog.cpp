#include "matex/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace matex::cat {

namespace {

int f3(int v) { return ((v + 4) % 3) - 1; }  // representative in {-1,0,1}

AffinePlaneF3 build_plane() {
  AffinePlaneF3 pl{};
  for (int i = -1; i <= 1; ++i) {
    Mask ma = 0, mb = 0, mc = 0, md = 0;
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y) {
        if (y == i) ma |= bit(AffinePlaneF3::point(x, y));
        if (x == i) mb |= bit(AffinePlaneF3::point(x, y));
        if (f3(x - y) == i) mc |= bit(AffinePlaneF3::point(x, y));
        if (f3(x + y) == i) md |= bit(AffinePlaneF3::point(x, y));
      }
    pl.a[i + 1] = ma;
    pl.b[i + 1] = mb;
    pl.c[i + 1] = mc;
    pl.d[i + 1] = md;
  }
  return pl;
}

}  // namespace

const AffinePlaneF3& affine_plane_f3() {
  static const AffinePlaneF3 plane = build_plane();
  return plane;
}

std::vector<Mask> AffinePlaneF3::all_lines() const {
  std::vector<Mask> out;
  for (int i = 0; i < 3; ++i) out.push_back(a[i]);
  for (int i = 0; i < 3; ++i) out.push_back(b[i]);
  for (int i = 0; i < 3; ++i) out.push_back(c[i]);
  for (int i = 0; i < 3; ++i) out.push_back(d[i]);
  return out;
}

Mask displaced_cross(int px, int py) {
  const auto& pl = affine_plane_f3();
  Mask m = (pl.A(0) | pl.B(0)) & ~bit(AffinePlaneF3::point(0, 0));
  return m | bit(AffinePlaneF3::point(px, py));
}

SparsePavingMatroid uniform(int k, int n) { return SparsePavingMatroid::make(n, k, {}); }

namespace {

// The 14 planes of AG(3,2): 4-subsets of F2^3 with zero coordinate sum.
std::vector<Mask> ag32_planes() {
  std::vector<Mask> out;
  for (Mask s : k_subsets(8, 4)) {
    int x = 0;
    for (int e : elements(s)) x ^= e;
    if (x == 0) out.push_back(s);
  }
  return out;
}

std::vector<Mask> parse_sets(std::initializer_list<const char*> names) {
  std::vector<Mask> out;
  for (const char* s : names) out.push_back(parse_mask(s));
  return out;
}

SparsePavingMatroid sp_vamos() {
  return SparsePavingMatroid::make(8, 4, parse_sets({"0123", "0145", "2367", "4567", "2345"}));
}

SparsePavingMatroid sp_ag32() { return SparsePavingMatroid::make(8, 4, ag32_planes()); }

SparsePavingMatroid sp_l8() {
  // Six cube faces plus the twisted planes 0356 and 1247; e = (x,y,z) by bits.
  return SparsePavingMatroid::make(
      8, 4, parse_sets({"0123", "4567", "0145", "2367", "0246", "1357", "0356", "1247"}));
}

SparsePavingMatroid sp_p8() {
  return SparsePavingMatroid::make(8, 4,
                                   parse_sets({"0246", "1357", "0127", "1467", "2356", "0345",
                                               "0367", "0156", "1234", "2457"}));
}

SparsePavingMatroid sp_t3o() {
  const auto& pl = affine_plane_f3();
  std::vector<Mask> chs;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) chs.push_back(pl.A(i) | pl.B(j));
  return SparsePavingMatroid::make(9, 5, std::move(chs));
}

SparsePavingMatroid sp_t9c() {
  const auto& pl = affine_plane_f3();
  std::vector<Mask> chs;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      chs.push_back(pl.A(i) | pl.B(j));
      chs.push_back(pl.C(i) | pl.D(j));
    }
  return SparsePavingMatroid::make(9, 5, std::move(chs));
}

SparsePavingMatroid sp_t3() {
  const auto& pl = affine_plane_f3();
  return sp_t3o().relax(pl.A(0) | pl.B(0));
}

SparsePavingMatroid sp_t3w() {
  auto t3 = sp_t3();
  auto chs = t3.chs;
  chs.push_back(displaced_cross(1, 1));
  return SparsePavingMatroid::make(9, 5, std::move(chs));
}

SparsePavingMatroid sp_t7c() {
  const auto& pl = affine_plane_f3();
  std::vector<Mask> chs;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      if (!(i == 0 && j == 0)) chs.push_back(pl.A(i) | pl.B(j));
      if (!(j == -1 && (i == -1 || i == 1))) chs.push_back(pl.C(i) | pl.D(j));
    }
  chs.push_back(displaced_cross(1, 1));
  return SparsePavingMatroid::make(9, 5, std::move(chs));
}

CatalogEntry entry_of_sp(std::string name, SparsePavingMatroid sp) {
  Matroid m = sp.materialize();
  return CatalogEntry{std::move(name), m.to_polymatroid(), m, std::move(sp)};
}

CatalogEntry entry_of_matroid(std::string name, Matroid m) {
  return CatalogEntry{std::move(name), m.to_polymatroid(), m, std::nullopt};
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> c;
  auto put = [&](CatalogEntry e) { c.emplace(e.name, std::move(e)); };

  auto p8 = sp_p8();
  const Mask m2635 = parse_mask("2356"), m1357 = parse_mask("1357"), m0246 = parse_mask("0246");
  put(entry_of_sp("vamos", sp_vamos()));
  put(entry_of_sp("ag32", sp_ag32()));
  put(entry_of_sp("l8", sp_l8()));
  put(entry_of_sp("l8p", sp_l8().relax(parse_mask("1247"))));
  put(entry_of_sp("p8", p8));
  put(entry_of_sp("p8_1", p8.relax(m2635)));
  put(entry_of_sp("p8_2p", p8.relax(m2635).relax(m1357)));
  put(entry_of_sp("p8_2pp", p8.relax(m2635).relax(m0246)));
  put(entry_of_sp("p8_3", p8.relax(m2635).relax(m1357).relax(m0246)));
  put(entry_of_sp("t3o", sp_t3o()));
  put(entry_of_sp("t3", sp_t3()));
  put(entry_of_sp("t3w", sp_t3w()));
  put(entry_of_sp("t9c", sp_t9c()));
  put(entry_of_sp("t7c", sp_t7c()));
  put(entry_of_matroid("201827", matroid_201827()));
  put(CatalogEntry{"vhat", vamos_like_polymatroid(), std::nullopt, std::nullopt});
  return c;
}

std::map<std::string, CatalogEntry>& catalog() {
  static std::map<std::string, CatalogEntry> c = build_catalog();
  return c;
}

std::mutex catalog_mutex;

}  // namespace

const CatalogEntry& named(const std::string& name) {
  std::lock_guard<std::mutex> lock(catalog_mutex);
  auto& c = catalog();
  auto it = c.find(name);
  if (it != c.end()) return it->second;
  // u<k>_<n>
  if (name.size() >= 4 && name[0] == 'u') {
    auto us = name.find('_');
    if (us != std::string::npos) {
      try {
        int k = std::stoi(name.substr(1, us - 1));
        int n = std::stoi(name.substr(us + 1));
        auto e = entry_of_sp(name, uniform(k, n));
        return c.emplace(name, std::move(e)).first->second;
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown matroid name: " + name);
}

std::vector<std::string> catalog_names() {
  std::lock_guard<std::mutex> lock(catalog_mutex);
  std::vector<std::string> out;
  for (const auto& [k, v] : catalog()) out.push_back(k);
  return out;
}

Matroid matroid_from_rank_bounds(int n, int k, std::vector<std::pair<Mask, int>> bounds) {
  auto estimate = [&](Mask x) {
    int r = std::min(popcount(x), k);
    for (const auto& [f, rf] : bounds)
      if (contains(f, x)) r = std::min(r, rf);
    return r;
  };
  // Add union bounds forced by submodularity until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = bounds;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        const Mask u = snapshot[i].first | snapshot[j].first;
        const int ru = snapshot[i].second + snapshot[j].second -
                       estimate(snapshot[i].first & snapshot[j].first);
        if (ru < estimate(u)) {
          bounds.emplace_back(u, ru);
          changed = true;
        }
      }
  }
  std::vector<std::int8_t> r(std::size_t{1} << n);
  for (Mask x = 0; x <= full_mask(n); ++x) r[x] = static_cast<std::int8_t>(estimate(x));
  Matroid m = Matroid::from_ranks(n, std::move(r));
  for (const auto& [f, rf] : bounds) {
    if (m.rank(f) != rf || closure(m, f) != f)
      throw std::invalid_argument("rank bounds not reproduced as flats: " + format_mask(f));
  }
  return m;
}

Matroid matroid_201827() {
  std::vector<std::pair<Mask, int>> bounds;
  for (const char* s : {"0125", "0268", "1568"}) bounds.emplace_back(parse_mask(s), 3);
  for (const char* s : {"12378", "03458", "24578", "01467", "12346", "34678"})
    bounds.emplace_back(parse_mask(s), 4);
  return matroid_from_rank_bounds(9, 5, std::move(bounds));
}

std::vector<std::vector<int>> t9c_representation_matrix() {
  return {{1, 0, 0, 0, 0, 1, 1, 1, 1},
          {0, 1, 0, 0, 0, 1, -1, -1, 1},
          {0, 0, 1, 0, 0, 1, -1, 1, 0},
          {0, 0, 0, 1, 0, 1, 1, 0, -1},
          {0, 0, 0, 0, 1, 1, 0, -1, -1}};
}

}  // namespace matex::cat
