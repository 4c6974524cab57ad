#pragma once

// Subsets of a ground set [n] = {1,...,n} as bitmasks. Everything in this library
// works at desk scale (n <= 25), so a 32-bit mask is enough; element e occupies
// bit e-1.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omega {

using Mask = std::uint32_t;

inline constexpr int kMaxGround = 25;

inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }
inline Mask element_bit(int e) { return Mask(1) << (e - 1); }
inline bool contains(Mask m, int e) { return (m & element_bit(e)) != 0; }
inline int set_size(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline void check_ground(int n) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground set size out of range");
}

inline std::vector<int> mask_to_elements(Mask m) {
  std::vector<int> out;
  for (int e = 1; m != 0; ++e, m >>= 1)
    if (m & 1) out.push_back(e);
  return out;
}

inline Mask elements_to_mask(const std::vector<int>& elems, int n) {
  Mask m = 0;
  for (int e : elems) {
    if (e < 1 || e > n) throw std::invalid_argument("element outside the ground set");
    m |= element_bit(e);
  }
  return m;
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_to_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace omega
