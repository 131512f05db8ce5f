#include "lensfiber/fibering.hpp"

#include <algorithm>
#include <map>

namespace lensfiber {

Int minima_count_formula(const EuclidTrace& trace, const Int& theta) {
  if (theta < 2)
    throw precondition_error(errc::theta_too_small, "theta must be >= 2, got " + to_string(theta));
  if (trace.p() % theta != 0)
    throw precondition_error(errc::theta_not_divisor,
                             "theta=" + to_string(theta) + " does not divide p=" + to_string(trace.p()));
  Int by_remainders = 1, by_coefficients = 1;
  for (long j = 1; j < trace.n(); ++j) {
    if (trace.r(j) % theta != 0) continue;
    by_remainders *= fdiv(trace.r(j - 1) + trace.r(j) - 1, trace.r(j));  // ceil
    by_coefficients *= trace.d(j + 1) + 1;
  }
  if (by_remainders != by_coefficients)
    throw internal_check_error("the two product forms of the minima-count formula disagree");
  return by_remainders;
}

bool fibers(const Int& p, const Int& q, const Int& k) {
  KnotParams kp = knot_params(p, q, k);
  return !is_harmonic(euclid_trace(p, q), kp.theta);
}

bool fibers_via_minima(const Int& p, const Int& q, const Int& k) {
  auto mins = locate_minima(knot_params(p, q, k));
  return mins.size() == 1;
}

bool fibers_via_alexander(const Int& p, const Int& q, const Int& k) {
  LaurentPoly delta = alexander(jump_sequence(p, q, k));
  return delta.leading_coefficient() == 1;
}

bool order_bound_guarantee(const Int& p, const Int& theta) {
  if (theta < 2)
    throw precondition_error(errc::theta_too_small, "theta must be >= 2, got " + to_string(theta));
  if (p % theta != 0)
    throw precondition_error(errc::theta_not_divisor,
                             "theta=" + to_string(theta) + " does not divide p=" + to_string(p));
  return (theta + 1) * (theta + 1) > p + 1;
}

bool order_invariance_check(const Int& p, const Int& q) {
  EuclidTrace trace = euclid_trace(p, q);
  // (a) fibering is a function of gcd(p,k) alone.
  std::map<Int, bool> by_order;
  for (Int k = 1; k < p; ++k) {
    Int theta = p / gcd(p, k);
    bool f = fibers(p, q, k);
    auto [it, inserted] = by_order.emplace(theta, f);
    if (!inserted && it->second != f) return false;
    if (f != !is_harmonic(trace, theta)) return false;
  }
  // (b) theta1 | theta2 and the order-theta1 knot fibers => so does theta2's.
  for (const auto& [t1, f1] : by_order) {
    for (const auto& [t2, f2] : by_order) {
      if (t2 % t1 == 0 && f1 && !f2) return false;
    }
  }
  return true;
}

FiberReport build_fiber_report(const Int& p, const Int& q, const Int& k,
                               const ReportOptions& opts) {
  FiberReport rep{knot_params(p, q, k), euclid_trace(p, q), {}, false, 0, std::nullopt,
                  std::nullopt,          0,                 0,  0};
  rep.harmonics = harmonics(rep.trace);
  rep.fibers = !is_harmonic(rep.trace, rep.params.theta);
  rep.minima_count = minima_count_formula(rep.trace, rep.params.theta);

  JumpSequence seq(rep.params);
  rep.max_coeff = seq.max_raw() - seq.min_raw();
  rep.euler_char = rep.params.theta - rep.max_coeff;
  rep.breadth = 1 - rep.euler_char;

  if (rep.minima_count <= global_config().minima_cap) {
    auto mins = locate_minima(rep.params);
    if (Int(mins.size()) != rep.minima_count)
      throw internal_check_error("locator minima count disagrees with the closed formula");
    rep.minima = std::move(mins);
  }

  const std::int64_t lim = std::min(global_config().materialize_limit, kMaterializeHardCap);
  if (rep.params.p <= lim) {
    rep.alexander = alexander(seq);
    if (opts.verify_routes) {
      const LaurentPoly& delta = *rep.alexander;
      if (delta.leading_coefficient() != rep.minima_count)
        throw internal_check_error("Alexander leading coefficient disagrees with the minima count");
      if (delta != delta.reversed().canonical())
        throw internal_check_error("Alexander polynomial is not palindromic");
      if (Int(delta.breadth()) != rep.breadth)
        throw internal_check_error("Alexander breadth disagrees with 1 - euler_char");
    }
  }
  if (opts.verify_routes) {
    if (rep.fibers != (rep.minima_count == 1))
      throw internal_check_error("harmonic route disagrees with the minima-count route");
    if (rep.minima && rep.fibers != (rep.minima->size() == 1))
      throw internal_check_error("harmonic route disagrees with the located minima");
    if (rep.params.p <= lim) {
      auto brute = minima_bruteforce(seq);
      if (Int(brute.size()) != rep.minima_count)
        throw internal_check_error("brute-force minima count disagrees with the closed formula");
      if (rep.minima && brute != *rep.minima)
        throw internal_check_error("brute-force minima disagree with the located minima");
    }
  }
  return rep;
}

}  // namespace lensfiber
