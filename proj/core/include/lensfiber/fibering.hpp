#pragma once

#include <optional>
#include <vector>

#include "lensfiber/euclid.hpp"
#include "lensfiber/knot.hpp"
#include "lensfiber/locator.hpp"

namespace lensfiber {

// Number of minimizers of S(p,q,k) by the closed formula: the product over
// 0 < j < n with theta | r_j of ceil(r_{j-1}/r_j), equivalently of
// (d_{j+1} + 1). Both product forms are computed and must agree; the empty
// product is 1. Requires theta >= 2 and theta | p.
Int minima_count_formula(const EuclidTrace& trace, const Int& theta);

// Production predicate: K(p,q,k) fibers iff its order theta = p/gcd(p,k)
// is not a harmonic of (p,q). O(log^2 p)-ish, no materialization.
bool fibers(const Int& p, const Int& q, const Int& k);

// Verification route 2: the sequence attains its minimum exactly once.
bool fibers_via_minima(const Int& p, const Int& q, const Int& k);

// Verification route 3: the Alexander polynomial is monic. Needs p within
// the materialization limit.
bool fibers_via_alexander(const Int& p, const Int& q, const Int& k);

// (theta+1)^2 > p+1. When true, every simple knot of order theta in a lens
// space of order p fibers. Requires theta >= 2, theta | p.
bool order_bound_guarantee(const Int& p, const Int& theta);

// Checks (a) that fibering depends only on gcd(p,k) across all k, and
// (b) that for orders theta1 | theta2 (both dividing p, >= 2), fibering of
// the order-theta1 knot implies fibering of the order-theta2 knot.
// Intended for desk-scale p.
bool order_invariance_check(const Int& p, const Int& q);

// Consolidated invariants of one knot.
struct FiberReport {
  KnotParams params;
  EuclidTrace trace;
  std::vector<Int> harmonics;
  bool fibers = false;
  Int minima_count;
  // Present when minima_count is at most the configured cap.
  std::optional<std::vector<Int>> minima;
  // Present when p is within the materialization limit.
  std::optional<LaurentPoly> alexander;
  Int max_coeff;    // M = max_i g(i)
  Int euler_char;   // theta - M
  Int breadth;      // 1 - euler_char
};

struct ReportOptions {
  // Cross-check the three fibering routes, the minima-count identities, and
  // the Alexander identities; throws internal_check_error on any mismatch.
  bool verify_routes = false;
};

FiberReport build_fiber_report(const Int& p, const Int& q, const Int& k,
                               const ReportOptions& opts = {});

}  // namespace lensfiber
