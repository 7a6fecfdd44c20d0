#pragma once
#include <algorithm>
#include <limits>
#include <string>

namespace cma {

// Integers extended by -inf and +inf, stored as sentinels.
constexpr int kNegInf = std::numeric_limits<int>::min() / 4;
constexpr int kPosInf = std::numeric_limits<int>::max() / 4;

inline bool is_neg_inf(int v) { return v <= kNegInf / 2; }
inline bool is_pos_inf(int v) { return v >= kPosInf / 2; }
inline bool is_finite(int v) { return !is_neg_inf(v) && !is_pos_inf(v); }

// Sum where -inf absorbs everything (the "no constraint" convention in max formulas).
inline int ext_add(int a, int b) {
  if (is_neg_inf(a) || is_neg_inf(b)) return kNegInf;
  if (is_pos_inf(a) || is_pos_inf(b)) return kPosInf;
  return a + b;
}
inline int ext_neg(int a) {
  if (is_neg_inf(a)) return kPosInf;
  if (is_pos_inf(a)) return kNegInf;
  return -a;
}
inline int ext_max(int a, int b) { return std::max(a, b); }
inline std::string ext_str(int v) {
  if (is_neg_inf(v)) return "-inf";
  if (is_pos_inf(v)) return "inf";
  return std::to_string(v);
}

}  // namespace cma
