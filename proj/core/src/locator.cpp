#include "lensfiber/locator.hpp"

#include <algorithm>

#include "lensfiber/engine.hpp"

namespace lensfiber {

namespace {

constexpr std::int64_t kNarrowLimit = 1'000'000'000;  // i64 engine bound; products stay < 2^63

BasicIntervalContext<std::int64_t> to_narrow(const KnotParams& kp, bool maxima) {
  BasicIntervalContext<std::int64_t> top;
  std::int64_t p = to_i64(kp.p), q = to_i64(kp.q), l = to_i64(kp.l);
  if (!maxima) {
    top.prog = {0, p, q, l, +1, false};
    top.t = to_i64(kp.t);
  } else {
    std::int64_t s0 = static_cast<std::int64_t>(((l + 1) * static_cast<detail::i128>(q)) % p);
    top.prog = {s0, p, q, p - 1 - l, +1, true};
    top.t = to_i64(kp.theta) - to_i64(kp.t);
  }
  top.theta = to_i64(kp.theta);
  top.isolated_radius = q;
  return top;
}

IntervalContext to_wide(const KnotParams& kp, bool maxima) {
  IntervalContext top;
  if (!maxima) {
    top.prog = {Int(0), kp.p, kp.q, kp.l, +1, false};
    top.t = kp.t;
  } else {
    Int s0 = lnr((kp.l + 1) * kp.q, kp.p);
    top.prog = {s0, kp.p, kp.q, kp.p - 1 - kp.l, +1, true};
    top.t = kp.theta - kp.t;
  }
  top.theta = kp.theta;
  top.isolated_radius = kp.q;
  return top;
}

std::vector<Int> locate(const KnotParams& kp, bool maxima, const LocatorOptions& opts) {
  detail::LocateParams lp{opts.scan_threshold, opts.debug_verify};
  const bool narrow = !opts.force_wide && !opts.trace && kp.p <= kNarrowLimit;
  std::vector<Int> out;
  if (narrow) {
    detail::KnotWalker<std::int64_t> walker{to_i64(kp.p), to_i64(kp.q_inv), to_i64(kp.l), maxima};
    auto res = detail::locate_impl<std::int64_t>(to_narrow(kp, maxima), walker, lp, nullptr);
    out.reserve(res.size());
    std::int64_t p = to_i64(kp.p);
    for (std::int64_t x : res) out.emplace_back(maxima ? x % p : x);
  } else {
    detail::KnotWalker<Int> walker{kp.p, kp.q_inv, kp.l, maxima};
    detail::TraceHook<Int> hook = opts.trace;
    auto res =
        detail::locate_impl<Int>(to_wide(kp, maxima), walker, lp, opts.trace ? &hook : nullptr);
    out.reserve(res.size());
    for (Int& x : res) out.push_back(maxima ? lnr(x, kp.p) : std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Int> locate_minima(const KnotParams& params, const LocatorOptions& opts) {
  return locate(params, false, opts);
}

std::vector<Int> locate_maxima(const KnotParams& params, const LocatorOptions& opts) {
  return locate(params, true, opts);
}

namespace {

bool check_progressions(const std::vector<Int>& points, const Int& a, const Int& b,
                        const Int* period) {
  if (!(a > b && b > 0))
    throw precondition_error(errc::argument_out_of_range, "need a > b > 0");
  if (gcd(a, b) != 1)
    throw precondition_error(errc::argument_out_of_range, "a and b must be coprime");
  Int len = fdiv(a + b - 1, b);  // ceil(a/b)
  if (!len.fits_slong_p()) throw precondition_error(errc::argument_out_of_range, "progression too long");
  long L = static_cast<long>(len.get_si());
  auto member = [&](Int x) {
    if (period) x = lnr(x, *period);
    return std::binary_search(points.begin(), points.end(), x);
  };
  for (const Int& m : points) {
    bool covered = false;
    for (long h = 0; h < L && !covered; ++h) {
      bool full = true;
      for (long i = 0; i < L; ++i) {
        if (!member(m + Int(i - h) * b)) {
          full = false;
          break;
        }
      }
      covered = full;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

bool symmetry_check(const std::vector<Int>& points, const Int& a, const Int& b) {
  return check_progressions(points, a, b, nullptr);
}

bool symmetry_check_mod(const std::vector<Int>& points, const Int& a, const Int& b,
                        const Int& period) {
  return check_progressions(points, a, b, &period);
}

}  // namespace lensfiber
