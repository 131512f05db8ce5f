#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lensfiber/floor_sum.hpp"
#include "lensfiber/int.hpp"

namespace lensfiber {

namespace detail {

template <class Z>
Z lnr_z(const Z& a, const Z& m) {
  if constexpr (std::is_same_v<Z, Int>) {
    return lnr(a, m);
  } else {
    Z r = a % m;
    if (r < 0) r += m;
    return r;
  }
}

// Inverse of a mod m (gcd(a,m)=1, m >= 1), in [0, m).
template <class Z>
Z inv_mod(Z a, Z m) {
  if (m == 1) return Z(0);
  Z r0 = m, r1 = lnr_z(a, m);
  Z s0 = 0, s1 = 1;
  while (r1 != 0) {
    Z q = r0 / r1;
    Z r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Z s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return lnr_z(s0, m);
}

}  // namespace detail

// An interval-bounded modular progression: the subset of [start, start+width)
// equal to { start + [i*sign*step]_width : i = 1..length }, together with the
// anchor `start` itself when contains_start is set. Width-1 progressions are
// degenerate (step 0, length 0).
template <class Z>
struct BasicProgression {
  Z start{};
  Z width{};
  Z step{};    // 0 < step < width and gcd(width, step) = 1, unless width == 1
  Z length{};  // 0 <= length < width
  int sign = 1;
  bool contains_start = false;

  Z end() const { return start + width; }

  // b = start + [length * sign * step]_width; equals start when length = 0.
  Z break_point() const {
    if (length == 0) return start;
    return start + detail::lnr_z<Z>(Z(sign) * length * step, width);
  }

  // Membership for x in [start, start+width); false outside.
  bool contains(const Z& x) const {
    Z off = x - start;
    if (off < 0 || off >= width) return false;
    if (off == 0) return contains_start;
    if (length == 0) return false;
    Z inv = detail::inv_mod<Z>(step, width);
    Z i = detail::lnr_z<Z>(Z(sign) * off * inv, width);
    return i >= 1 && i <= length;
  }

  // |represented set ∩ [lo, hi)| in absolute coordinates, O(log) arithmetic.
  Z count_in(Z lo, Z hi) const {
    if (lo < start) lo = start;
    if (hi > end()) hi = end();
    if (lo >= hi) return Z(0);
    Z c = 0;
    if (contains_start && lo == start) c += 1;
    if (length == 0 || width == 1) return c;
    c += detail::count_orbit_in<Z>(width, step, sign, length, lo - start, hi - 1 - start);
    return c;
  }

  // The represented set, ascending. O(length log length); tests and debug only.
  std::vector<Z> materialize() const {
    std::vector<Z> out;
    if (contains_start) out.push_back(start);
    Z acc = 0;
    for (Z i = 1; i <= length; ++i) {
      acc = detail::lnr_z<Z>(acc + Z(sign) * step, width);
      out.push_back(start + acc);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Jump-function context for one interval of the minima recursion: the
// restricted progression, the jump parameters, the endpoint flags, and the
// radius within which the interval is known to be isolated.
template <class Z>
struct BasicIntervalContext {
  BasicProgression<Z> prog;
  Z theta{};
  Z t{};
  bool left_like = false;
  bool right_like = false;
  Z isolated_radius{};
};

using AffineProgression = BasicProgression<Int>;
using IntervalContext = BasicIntervalContext<Int>;

// f(x) = ((x - start + shift) mod width) + start, defined on the closed
// interval [start, start+width].
Int cycle_map(const Int& start, const Int& width, const Int& shift, const Int& x);

// First return of x in the closure of J = [y, y+qhat) to J under repeated
// cycling of I = [start, start+width) by `shift` = +-qhat. Equals
// cycle_map(J, -r, x) for shift +qhat and cycle_map(J, +r, x) for shift
// -qhat, where r = width mod qhat.
Int first_return(const Int& start, const Int& width, const Int& shift, const Int& y, const Int& x);

// Restriction of S to J = [y, y+step); y must be one of the three admissible
// anchors {start, break_point, start+width-step}. The result has width
// `step`, difference sign*r at y = break_point and -sign*r otherwise.
AffineProgression restrict_progression(const AffineProgression& S, const Int& y);

// |S ∩ (x, x+step]|; the window must fit inside the interval.
Int window_count(const AffineProgression& S, const Int& x);

// q*t - c*theta for the c of the sub-break-point regime.
Int sigma(const IntervalContext& ctx);

enum class ReductionCase {
  left_interval = 1,   // [s, s+q), left-like
  break_interval = 2,  // [b, b+q)
  right_interval = 3,  // [s+w-q, s+w), right-like
  singleton = 4,       // length 0: m(g) ∩ I = {s}
};

struct Reduction {
  ReductionCase kind;
  IntervalContext child;
};

// One step of minima confinement for a positive-difference context
// (requires theta not dividing step). The child interval contains every
// minimizer of g in the parent and inherits isolation at radius r.
Reduction classify_positive(const IntervalContext& ctx);

// The negative-difference analogue; requires the context to be flagged
// left-like or right-like. Outcomes are the left or right subinterval,
// both with restricted difference +r.
Reduction classify_negative(const IntervalContext& ctx);

// The harmonic step (theta | step): splits into ceil(width/step) disjoint
// subintervals of width r = width mod step, each r'-isolated and holding at
// least one minimizer, jointly covering m(g) in the parent. Requires
// theta not dividing r, a (width,step)-symmetry of g on its minima, and
// flags when the difference is negative.
std::vector<IntervalContext> classify_harmonic(const IntervalContext& ctx);

}  // namespace lensfiber
