#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matex {

// A subset of a ground set {0,...,n-1}, n <= 16, as a bitmask.
using Mask = std::uint32_t;

constexpr int kMaxGround = 16;

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline int popcount(Mask x) { return std::popcount(x); }

constexpr Mask bit(int i) { return Mask{1} << i; }

inline bool contains(Mask sup, Mask sub) { return (sub & ~sup) == 0; }

inline std::vector<int> elements(Mask x) {
  std::vector<int> out;
  while (x) {
    int i = std::countr_zero(x);
    out.push_back(i);
    x &= x - 1;
  }
  return out;
}

inline Mask mask_of(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

// Compact set notation: one character per element, 0-9 then a-f.
inline char element_char(int e) {
  return e < 10 ? static_cast<char>('0' + e) : static_cast<char>('a' + e - 10);
}

inline std::string format_mask(Mask x) {
  if (x == 0) return "{}";
  std::string s;
  for (int e : elements(x)) s += element_char(e);
  return s;
}

inline Mask parse_mask(const std::string& s) {
  if (s == "{}" || s.empty()) return 0;
  Mask m = 0;
  for (char c : s) {
    int e;
    if (c >= '0' && c <= '9')
      e = c - '0';
    else if (c >= 'a' && c <= 'f')
      e = c - 'a' + 10;
    else
      throw std::invalid_argument("bad element character in set: " + s);
    if (e >= kMaxGround) throw std::invalid_argument("element out of range: " + s);
    m |= bit(e);
  }
  return m;
}

// Visits all submasks of m, ascending as integers (starts at 0, ends at m).
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;  // next submask
  }
}

// All k-element subsets of {0..n-1}, ascending as integers (colex order).
inline std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  Mask x = full_mask(k);
  Mask top = full_mask(n);
  while (x <= top) {
    out.push_back(x);
    // Gosper's hack
    Mask c = x & (~x + 1);
    Mask r = x + c;
    Mask next = (((r ^ x) >> 2) / c) | r;
    if (next <= x) break;
    x = next;
  }
  return out;
}

// Applies a ground-set permutation (perm[old] = new) to a mask.
inline Mask apply_perm(Mask x, const std::vector<int>& perm) {
  Mask out = 0;
  while (x) {
    int i = std::countr_zero(x);
    out |= bit(perm[i]);
    x &= x - 1;
  }
  return out;
}

}  // namespace matex
