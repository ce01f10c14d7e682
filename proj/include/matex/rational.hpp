#pragma once

#include <gmpxx.h>

#include <string>

namespace matex {

// Exact rational arithmetic everywhere; no floating point in any verdict path.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace matex
