#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matex/rational.hpp"
#include "matex/subset.hpp"

namespace matex {

// Exact-rational function on all subsets of {0..n-1}, dense, indexed by mask.
struct SetFunction {
  int n = 0;
  std::vector<Rat> v;  // size 1 << n, v[0] must be 0

  SetFunction() = default;
  explicit SetFunction(int ground) : n(ground), v(std::size_t{1} << ground, Rat(0)) {}

  Mask full() const { return full_mask(n); }
  const Rat& at(Mask x) const { return v[x]; }
  Rat& at(Mask x) { return v[x]; }

  // f(X|Z) = f(XZ) - f(Z)
  Rat cond(Mask x, Mask z) const { return v[x | z] - v[z]; }
  // f(X:Y|Z) = f(XZ) + f(YZ) - f(XYZ) - f(Z)
  Rat mutual(Mask x, Mask y, Mask z = 0) const {
    return v[x | z] + v[y | z] - v[x | y | z] - v[z];
  }

  bool operator==(const SetFunction&) const = default;
};

struct AxiomViolation {
  enum class Kind { Normalization, Monotonicity, Submodularity };
  Kind kind;
  // Witness subsets: Monotonicity (X, Xx); Submodularity (K+i, K+j); Normalization (0,0).
  Mask a = 0;
  Mask b = 0;
  std::string describe() const;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;  // empty <=> polymatroid rank function
  bool matroid = false;  // additionally integer-valued with f({x}) <= 1
  bool ok() const { return violations.empty(); }
};

// Total; reports every violated elemental axiom instance. The elemental
// monotonicity/submodularity instances generate the full axioms, so the
// report is empty iff f is a polymatroid rank function.
ValidationReport validate_polymatroid(const SetFunction& f);

// Polymatroid: a SetFunction checked monotone, submodular, normalized.
class Polymatroid {
 public:
  static Polymatroid from_checked(SetFunction f);  // throws std::invalid_argument
  const SetFunction& f() const { return f_; }
  int n() const { return f_.n; }
  Mask full() const { return f_.full(); }
  const Rat& rank(Mask x) const { return f_.at(x); }
  const Rat& rank() const { return f_.at(f_.full()); }
  bool operator==(const Polymatroid&) const = default;

 private:
  SetFunction f_;
};

// Matroid: integer polymatroid with singleton ranks <= 1. Ranks kept in a
// dense int table; convert to SetFunction on demand.
class Matroid {
 public:
  Matroid() = default;
  static Matroid from_checked(const SetFunction& f);  // throws std::invalid_argument
  static Matroid from_ranks(int n, std::vector<std::int8_t> ranks);  // validates

  int n() const { return n_; }
  Mask full() const { return full_mask(n_); }
  int rank(Mask x) const { return r_[x]; }
  int rank() const { return r_[full()]; }
  const std::vector<std::int8_t>& ranks() const { return r_; }

  SetFunction to_set_function() const;
  Polymatroid to_polymatroid() const;

  bool operator==(const Matroid&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> r_;
};

}  // namespace matex
