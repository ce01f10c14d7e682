#include "matex/sparse_paving.hpp"

#include <algorithm>
#include <stdexcept>

namespace matex {

bool is_stable_family(const std::vector<Mask>& fam, int k) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!johnson_compatible(fam[i], fam[j], k)) return false;
  return true;
}

SparsePavingMatroid SparsePavingMatroid::make(int n, int k, std::vector<Mask> chs) {
  if (n < 2 || n > kMaxGround || k < 1 || k > n)
    throw std::invalid_argument("sparse paving matroid: bad (n,k)");
  std::sort(chs.begin(), chs.end());
  if (std::adjacent_find(chs.begin(), chs.end()) != chs.end())
    throw std::invalid_argument("sparse paving matroid: duplicate circuit-hyperplane");
  for (Mask c : chs) {
    if (!contains(full_mask(n), c) || popcount(c) != k)
      throw std::invalid_argument("sparse paving matroid: circuit-hyperplane " + format_mask(c) +
                                  " is not a " + std::to_string(k) + "-subset");
  }
  if (!is_stable_family(chs, k))
    throw std::invalid_argument("sparse paving matroid: two circuit-hyperplanes share k-1 elements");
  SparsePavingMatroid sp;
  sp.n = n;
  sp.k = k;
  sp.chs = std::move(chs);
  return sp;
}

int SparsePavingMatroid::rank(Mask x) const {
  int c = popcount(x);
  if (c < k) return c;
  if (c == k && is_ch(x)) return k - 1;
  return k;
}

bool SparsePavingMatroid::is_ch(Mask c) const {
  return std::binary_search(chs.begin(), chs.end(), c);
}

Matroid SparsePavingMatroid::materialize() const {
  std::vector<std::int8_t> r(std::size_t{1} << n);
  for (Mask x = 0; x <= full_mask(n); ++x) r[x] = static_cast<std::int8_t>(rank(x));
  return Matroid::from_ranks(n, std::move(r));
}

SparsePavingMatroid SparsePavingMatroid::relax(Mask c) const {
  if (!is_ch(c))
    throw std::invalid_argument("relax: " + format_mask(c) + " is not a circuit-hyperplane");
  SparsePavingMatroid out = *this;
  out.chs.erase(std::find(out.chs.begin(), out.chs.end(), c));
  return out;
}

SparsePavingMatroid SparsePavingMatroid::dual() const {
  std::vector<Mask> comp;
  comp.reserve(chs.size());
  for (Mask c : chs) comp.push_back(full_mask(n) & ~c);
  return make(n, n - k, std::move(comp));
}

}  // namespace matex
