#include "matex/set_function.hpp"

#include <stdexcept>

namespace matex {

std::string AxiomViolation::describe() const {
  switch (kind) {
    case Kind::Normalization:
      return "f({}) != 0";
    case Kind::Monotonicity:
      return "f(" + format_mask(a) + ") > f(" + format_mask(b) + ")";
    case Kind::Submodularity:
      return "f(" + format_mask(a) + ") + f(" + format_mask(b) + ") < f(union) + f(intersection)";
  }
  return "?";
}

ValidationReport validate_polymatroid(const SetFunction& f) {
  ValidationReport rep;
  if (f.n < 1 || f.n > kMaxGround || f.v.size() != (std::size_t{1} << f.n))
    throw std::invalid_argument("SetFunction has inconsistent ground size");
  const Mask full = f.full();
  if (f.v[0] != 0)
    rep.violations.push_back({AxiomViolation::Kind::Normalization, 0, 0});
  // Monotonicity on covers X < X+i generates the full monotone axiom.
  for (Mask x = 0; x <= full; ++x) {
    for (int i = 0; i < f.n; ++i) {
      if (x & bit(i)) continue;
      if (f.v[x] > f.v[x | bit(i)])
        rep.violations.push_back({AxiomViolation::Kind::Monotonicity, x, x | bit(i)});
    }
  }
  // Elemental submodularity: f(K+i) + f(K+j) >= f(K+i+j) + f(K).
  for (int i = 0; i < f.n; ++i) {
    for (int j = i + 1; j < f.n; ++j) {
      const Mask ij = bit(i) | bit(j);
      for (Mask k = 0; k <= full; ++k) {
        if (k & ij) continue;
        if (f.v[k | bit(i)] + f.v[k | bit(j)] < f.v[k | ij] + f.v[k])
          rep.violations.push_back({AxiomViolation::Kind::Submodularity, k | bit(i), k | bit(j)});
      }
    }
  }
  if (rep.ok()) {
    rep.matroid = true;
    for (Mask x = 0; x <= full && rep.matroid; ++x)
      if (!is_integer(f.v[x])) rep.matroid = false;
    for (int i = 0; i < f.n && rep.matroid; ++i)
      if (f.v[bit(i)] > 1) rep.matroid = false;
  }
  return rep;
}

Polymatroid Polymatroid::from_checked(SetFunction f) {
  auto rep = validate_polymatroid(f);
  if (!rep.ok())
    throw std::invalid_argument("not a polymatroid: " + rep.violations.front().describe());
  Polymatroid p;
  p.f_ = std::move(f);
  return p;
}

Matroid Matroid::from_checked(const SetFunction& f) {
  auto rep = validate_polymatroid(f);
  if (!rep.ok())
    throw std::invalid_argument("not a polymatroid: " + rep.violations.front().describe());
  if (!rep.matroid) throw std::invalid_argument("polymatroid is not a matroid rank function");
  Matroid m;
  m.n_ = f.n;
  m.r_.resize(f.v.size());
  for (std::size_t x = 0; x < f.v.size(); ++x)
    m.r_[x] = static_cast<std::int8_t>(f.v[x].get_num().get_si());
  return m;
}

Matroid Matroid::from_ranks(int n, std::vector<std::int8_t> ranks) {
  if (n < 1 || n > kMaxGround || ranks.size() != (std::size_t{1} << n))
    throw std::invalid_argument("rank table has inconsistent ground size");
  const Mask full = full_mask(n);
  if (ranks[0] != 0) throw std::invalid_argument("rank table: f({}) != 0");
  for (int i = 0; i < n; ++i) {
    if (ranks[bit(i)] < 0 || ranks[bit(i)] > 1)
      throw std::invalid_argument("rank table: singleton rank outside {0,1}");
    for (Mask x = 0; x <= full; ++x) {
      if (x & bit(i)) continue;
      if (ranks[x] > ranks[x | bit(i)])
        throw std::invalid_argument("rank table: not monotone at " + format_mask(x));
    }
    for (int j = i + 1; j < n; ++j) {
      const Mask ij = bit(i) | bit(j);
      for (Mask k = 0; k <= full; ++k) {
        if (k & ij) continue;
        if (ranks[k | bit(i)] + ranks[k | bit(j)] < ranks[k | ij] + ranks[k])
          throw std::invalid_argument("rank table: not submodular at " + format_mask(k));
      }
    }
  }
  Matroid m;
  m.n_ = n;
  m.r_ = std::move(ranks);
  return m;
}

SetFunction Matroid::to_set_function() const {
  SetFunction f(n_);
  for (std::size_t x = 0; x < r_.size(); ++x) f.v[x] = static_cast<long>(r_[x]);
  return f;
}

Polymatroid Matroid::to_polymatroid() const {
  return Polymatroid::from_checked(to_set_function());
}

}  // namespace matex
