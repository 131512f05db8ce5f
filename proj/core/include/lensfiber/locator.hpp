#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lensfiber/knot.hpp"
#include "lensfiber/progression.hpp"

namespace lensfiber {

struct LocatorOptions {
  // Widths at or below this finish with a direct scan of the interval.
  std::int64_t scan_threshold = 4096;
  // Force the arbitrary-precision engine even for small p (tests).
  bool force_wide = false;
  // Re-verify every branch decision against set enumeration (slow).
  bool debug_verify = false;
  // Invoked once per classification step with the parent context and its
  // children; installing it forces the arbitrary-precision engine.
  std::function<void(const IntervalContext&, const std::vector<IntervalContext>&)> trace;
};

// The set m(g) ∩ [0,p) of minimizers of the jump function of (p,q,k),
// located by recursive interval confinement in
// O((#minima + 1) * n * polylog p) arithmetic; never materializes g.
std::vector<Int> locate_minima(const KnotParams& params, const LocatorOptions& opts = {});

// The set of maximizers of g in [0,p), via the same recursion applied to
// the complementary progression with parameters (theta, theta - t).
std::vector<Int> locate_maxima(const KnotParams& params, const LocatorOptions& opts = {});

// True iff the set is a union of arithmetic progressions of length
// ceil(a/b) and common difference b (a > b > 0 coprime).
bool symmetry_check(const std::vector<Int>& points, const Int& a, const Int& b);

// Same, with membership taken modulo `period` (progressions may wrap).
bool symmetry_check_mod(const std::vector<Int>& points, const Int& a, const Int& b,
                        const Int& period);

}  // namespace lensfiber
