#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>

#include "lensfiber/int.hpp"

namespace lensfiber::detail {

using i128 = __int128;

template <class Z>
inline Z fdivz(const Z& a, const Z& b) {
  if constexpr (std::is_same_v<Z, Int>) {
    return fdiv(a, b);
  } else {
    Z q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
}

template <class Z>
inline Z fmodz(const Z& a, const Z& b) {
  return a - fdivz(a, b) * b;
}

// sum_{i=0}^{n-1} floor((a*i + b) / m) for n >= 0, m > 0, a and b arbitrary.
// Euclidean-style descent, O(log) arithmetic steps.
template <class Z>
Z floor_sum(Z n, Z m, Z a, Z b) {
  Z ans = 0;
  if (a < 0) {
    Z a2 = fmodz(a, m);
    ans -= n * (n - 1) / 2 * ((a2 - a) / m);
    a = a2;
  }
  if (b < 0) {
    Z b2 = fmodz(b, m);
    ans -= n * ((b2 - b) / m);
    b = b2;
  }
  while (true) {
    if (a >= m) {
      ans += n * (n - 1) / 2 * (a / m);
      a = fmodz(a, m);
    }
    if (b >= m) {
      ans += n * (b / m);
      b = fmodz(b, m);
    }
    Z y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = fmodz(y_max, m);
    std::swap(m, a);
  }
  return ans;
}

// |{ 1 <= i <= len : (i*step mod w) in [1, x] }| with 0 < step < w, gcd(w,step)=1,
// 0 <= len < w, x arbitrary (clamped to [0, w-1]).
// Residues i*step mod w are never 0 in this range.
template <class Z>
Z count_orbit_leq(const Z& w, const Z& step, const Z& len, Z x) {
  if (len == 0 || x <= 0) return 0;
  if (x >= w - 1) return len;
  // [i*step mod w <= x] = floor(i*step/w) - floor((i*step - x - 1)/w); shift i -> i+1.
  return floor_sum<Z>(len, w, step, step) - floor_sum<Z>(len, w, step, step - x - 1);
}

// |{ 1 <= i <= len : [i*sign*step]_w in [lo, hi] }| for 1 <= lo, hi <= w-1.
// Empty when lo > hi (no wrap-around semantics here).
template <class Z>
Z count_orbit_in(const Z& w, const Z& step, int sign, const Z& len, Z lo, Z hi) {
  if (lo < 1) lo = 1;
  if (hi > w - 1) hi = w - 1;
  if (lo > hi) return 0;
  if (sign < 0) {
    // [-i*step]_w = w - (i*step mod w)
    Z nlo = w - hi, nhi = w - lo;
    return count_orbit_leq<Z>(w, step, len, nhi) - count_orbit_leq<Z>(w, step, len, nlo - 1);
  }
  return count_orbit_leq<Z>(w, step, len, hi) - count_orbit_leq<Z>(w, step, len, lo - 1);
}

}  // namespace lensfiber::detail
