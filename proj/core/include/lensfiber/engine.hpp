#pragma once

// Templated implementation of the minima-location recursion, shared by the
// arbitrary-precision engine and the 64-bit fast path. The public wrappers
// live in progression.hpp / locator.hpp.

#include <functional>
#include <utility>
#include <vector>

#include "lensfiber/progression.hpp"

namespace lensfiber::detail {

template <class Z>
Z window_count_z(const BasicProgression<Z>& P, const Z& x) {
  if (x < P.start || x + P.step > P.end() - 1)
    throw precondition_error(errc::interval_violation, "window does not fit in the interval");
  return P.count_in(x + 1, x + P.step + 1);
}

template <class Z>
Z sigma_z(const BasicIntervalContext<Z>& ctx) {
  const auto& P = ctx.prog;
  Z c = 0;
  if (P.length != 0) {
    Z base = window_count_z<Z>(P, P.start);
    if (P.sign > 0) {
      c = base;  // x = start lies below the break point when length > 0
    } else {
      c = (P.break_point() > P.start + P.step) ? base : base - 1;
    }
  }
  return P.step * ctx.t - c * ctx.theta;
}

// Restriction to [y, y+step) for y among the admissible anchors.
template <class Z>
BasicProgression<Z> restrict_z(const BasicProgression<Z>& P, const Z& y) {
  const Z q = P.step;
  if (y != P.start && y != P.break_point() && y != P.end() - q)
    throw precondition_error(errc::interval_violation, "anchor must be start, break point, or end-step");
  if (y < P.start || y + q > P.end())
    throw precondition_error(errc::interval_violation, "restriction window leaves the interval");
  BasicProgression<Z> c;
  c.start = y;
  c.width = q;
  c.sign = (y == P.break_point()) ? P.sign : -P.sign;
  c.contains_start = P.contains(y);
  c.length = P.count_in(y, y + q) - (c.contains_start ? 1 : 0);
  if (q == 1) {
    c.step = 0;
    c.sign = 1;
  } else {
    c.step = lnr_z<Z>(P.width, q);
  }
  return c;
}

enum class ReductionKind { left = 1, brk = 2, right = 3, singleton = 4 };

template <class Z>
struct ReductionZ {
  ReductionKind kind;
  BasicIntervalContext<Z> child;
};

template <class Z>
BasicProgression<Z> subwindow_prog(const BasicProgression<Z>& P, const Z& y, const Z& width,
                                   const Z& step, int sign) {
  BasicProgression<Z> c;
  c.start = y;
  c.width = width;
  c.contains_start = P.contains(y);
  c.length = P.count_in(y, y + width) - (c.contains_start ? 1 : 0);
  c.step = (width == 1) ? Z(0) : step;
  c.sign = (width == 1) ? 1 : sign;
  return c;
}

template <class Z>
ReductionZ<Z> classify_positive_z(const BasicIntervalContext<Z>& ctx) {
  const auto& P = ctx.prog;
  const Z s = P.start, w = P.width, q = P.step;
  if (P.sign <= 0)
    throw precondition_error(errc::interval_violation, "classify_positive needs a positive difference");
  if (w < 2) throw precondition_error(errc::interval_violation, "interval too narrow to classify");
  if (lnr_z<Z>(q, ctx.theta) == 0)
    throw precondition_error(errc::harmonic_preconditions,
                             "theta divides the difference; use the harmonic branch");
  const Z r = (q == 1) ? Z(0) : lnr_z<Z>(w, q);
  auto make = [&](const Z& y, int sign, bool ll, bool rl) {
    BasicIntervalContext<Z> child{subwindow_prog<Z>(P, y, q, r, sign), ctx.theta, ctx.t, ll, rl, r};
    return child;
  };
  if (P.length == 0) return {ReductionKind::singleton, make(s, +1, false, false)};
  if (P.length == w - 1) return {ReductionKind::brk, make(s + w - q, +1, false, false)};
  const Z sg = sigma_z<Z>(ctx);
  const Z b = P.break_point();
  if (sg == 0 || sg + ctx.theta == 0)
    throw internal_check_error("sigma hit zero although theta does not divide the difference");
  if (b > s + w - q) {  // break point in the last window: jumps are uniform
    if (sg > 0) return {ReductionKind::left, make(s, -1, true, false)};
    return {ReductionKind::right, make(s + w - q, -1, false, true)};
  }
  if (sg > 0) return {ReductionKind::left, make(s, -1, true, false)};
  if (sg + ctx.theta < 0) return {ReductionKind::right, make(s + w - q, -1, false, true)};
  return {ReductionKind::brk, make(b, +1, false, false)};
}

template <class Z>
ReductionZ<Z> classify_negative_z(const BasicIntervalContext<Z>& ctx) {
  const auto& P = ctx.prog;
  const Z s = P.start, w = P.width, q = P.step;
  if (P.sign >= 0)
    throw precondition_error(errc::interval_violation, "classify_negative needs a negative difference");
  if (!ctx.left_like && !ctx.right_like)
    throw precondition_error(errc::flag_missing, "classify_negative needs a left-like or right-like flag");
  if (w < 2) throw precondition_error(errc::interval_violation, "interval too narrow to classify");
  if (lnr_z<Z>(q, ctx.theta) == 0)
    throw precondition_error(errc::harmonic_preconditions,
                             "theta divides the difference; use the harmonic branch");
  const Z r = (q == 1) ? Z(0) : lnr_z<Z>(w, q);
  auto make = [&](const Z& y) {
    BasicIntervalContext<Z> child{subwindow_prog<Z>(P, y, q, r, +1), ctx.theta, ctx.t, false, false, r};
    return child;
  };
  if (P.length == 0) return {ReductionKind::left, make(s)};
  if (P.length == w - 1) return {ReductionKind::right, make(s + w - q)};
  const Z sg = sigma_z<Z>(ctx);
  const Z b = P.break_point();
  if (sg == 0 || sg - ctx.theta == 0)
    throw internal_check_error("sigma hit zero although theta does not divide the difference");
  if (b <= s + q) {  // only the sigma - theta regime occurs
    if (sg - ctx.theta > 0) return {ReductionKind::left, make(s)};
    return {ReductionKind::right, make(s + w - q)};
  }
  if (sg < 0) return {ReductionKind::right, make(s + w - q)};
  if (sg - ctx.theta > 0) return {ReductionKind::left, make(s)};
  // sigma - theta < 0 < sigma: compare across the period gap
  const Z h = (w - q) * ctx.t - ctx.theta * P.count_in(s + 1, s + w - q + 1);
  if (h > 0) return {ReductionKind::left, make(s)};
  if (h < 0) return {ReductionKind::right, make(s + w - q)};
  throw internal_check_error("flat period gap contradicts the left/right-like flags");
}

template <class Z>
std::vector<BasicIntervalContext<Z>> classify_harmonic_z(const BasicIntervalContext<Z>& ctx) {
  const auto& P = ctx.prog;
  const Z s = P.start, w = P.width, q = P.step;
  if (w < 2 || q < 2)
    throw precondition_error(errc::interval_violation, "harmonic step needs width and step >= 2");
  if (lnr_z<Z>(q, ctx.theta) != 0)
    throw precondition_error(errc::harmonic_preconditions, "theta must divide the difference");
  const Z r = lnr_z<Z>(w, q);
  if (lnr_z<Z>(r, ctx.theta) == 0)
    throw precondition_error(errc::harmonic_preconditions, "theta must not divide r = [w]_q");
  if (P.sign < 0 && !ctx.left_like && !ctx.right_like)
    throw precondition_error(errc::flag_missing, "negative harmonic step needs a flag");
  const Z rp = (r == 1) ? Z(0) : lnr_z<Z>(q, r);
  const Z nfull = (w - r) / q;
  auto make = [&](const Z& y, int sign, bool ll, bool rl) {
    BasicIntervalContext<Z> child{subwindow_prog<Z>(P, y, r, rp, sign), ctx.theta, ctx.t, ll, rl, rp};
    return child;
  };
  std::vector<BasicIntervalContext<Z>> out;
  if (P.sign > 0) {
    for (Z i = 0; i <= nfull; ++i) out.push_back(make(s + i * q, +1, false, false));
    return out;
  }
  const Z b = P.break_point();
  if (b <= s + q) {
    for (Z i = 0; i <= nfull; ++i) out.push_back(make(s + i * q, -1, ctx.left_like, ctx.right_like));
    return out;
  }
  if (b > s + w - r) {
    // first-window probe: jumps across r are uniform on [s, s+q)
    const Z sh = r * ctx.t - ctx.theta * P.count_in(s + 1, s + r + 1);
    if (sh == 0) throw internal_check_error("flat probe in the break-at-right harmonic case");
    if (sh > 0) {
      for (Z i = 0; i < nfull; ++i) out.push_back(make(s + i * q, -1, true, false));
      out.push_back(make(s + nfull * q, -1, ctx.left_like, ctx.right_like));
    } else {
      for (Z i = 1; i <= nfull; ++i) out.push_back(make(s + i * q - r, -1, false, true));
      out.push_back(make(s + nfull * q, -1, ctx.left_like, ctx.right_like));
    }
    return out;
  }
  if (b < s + q + r) {
    const Z sl = r * ctx.t - ctx.theta * P.count_in(s + r + 1, s + 2 * r + 1);
    if (sl == 0) throw internal_check_error("flat probe in the break-at-left harmonic case");
    out.push_back(make(s, -1, ctx.left_like, ctx.right_like));
    if (sl < 0) {
      for (Z i = 1; i <= nfull; ++i) out.push_back(make(s + i * q, -1, false, true));
    } else {
      for (Z i = 1; i <= nfull; ++i) out.push_back(make(s + (i - 1) * q + r, -1, true, false));
    }
    return out;
  }
  throw internal_check_error("break point escaped both zones of the break-point-location lemma");
}

// Ambient membership walker for the knot jump function (or its complement,
// for maxima location): x belongs to S iff 1 <= [q_inv * x]_p <= l.
template <class Z>
struct KnotWalker {
  Z p, q_inv, l;
  bool complement = false;
  Z rho = 0;  // residue q_inv * x mod p for the current x

  void seek(const Z& x) { rho = lnr_z<Z>(q_inv * lnr_z<Z>(x, p), p); }

  // Advance to x+1; returns membership of the new point.
  bool step() {
    rho += q_inv;
    if (rho >= p) rho -= p;
    bool in_s = rho >= 1 && rho <= l;
    return complement ? !in_s : in_s;
  }
};

template <class Z>
using TraceHook =
    std::function<void(const BasicIntervalContext<Z>&, const std::vector<BasicIntervalContext<Z>>&)>;

template <class Z>
void debug_verify_restriction(const BasicIntervalContext<Z>& parent,
                              const std::vector<BasicIntervalContext<Z>>& children) {
  // Set-level re-verification of each branch decision (debug mode only).
  auto all = parent.prog.materialize();
  for (const auto& ch : children) {
    std::vector<Z> expect;
    for (const auto& x : all)
      if (x >= ch.prog.start && x < ch.prog.end()) expect.push_back(x);
    if (expect != ch.prog.materialize())
      throw internal_check_error("restricted progression does not match set restriction");
  }
}

template <class Z, class Walker>
void scan_interval(const BasicIntervalContext<Z>& ctx, Walker walker, std::vector<Z>& out) {
  const auto& P = ctx.prog;
  walker.seek(P.start);
  Z v = 0, best = 0;
  std::vector<Z> arg{P.start};
  for (Z x = P.start + 1; x < P.end(); ++x) {
    v += walker.step() ? ctx.t - ctx.theta : ctx.t;
    if (v < best) {
      best = v;
      arg.assign(1, x);
    } else if (v == best) {
      arg.push_back(x);
    }
  }
  out.insert(out.end(), arg.begin(), arg.end());
}

struct LocateParams {
  std::int64_t scan_threshold = 4096;
  bool debug_verify = false;
};

// The recursion: confines minimizers level by level, resolving singleton
// certificates directly and finishing narrow intervals with a direct scan.
// Every interval on the stack holds at least one global minimizer.
template <class Z, class Walker>
std::vector<Z> locate_impl(BasicIntervalContext<Z> top, Walker walker, const LocateParams& lp,
                           const TraceHook<Z>* hook) {
  std::vector<Z> out;
  std::vector<BasicIntervalContext<Z>> stack;
  stack.push_back(std::move(top));
  while (!stack.empty()) {
    BasicIntervalContext<Z> ctx = std::move(stack.back());
    stack.pop_back();
    const auto& P = ctx.prog;
    if (P.width == 1) {
      out.push_back(P.start);
      continue;
    }
    if (P.length == 0) {  // g increases across the interval
      out.push_back(P.start);
      continue;
    }
    if (P.length == P.width - 1) {  // g decreases across the interval
      out.push_back(P.start + P.width - 1);
      continue;
    }
    if (P.width <= Z(lp.scan_threshold)) {
      scan_interval<Z, Walker>(ctx, walker, out);
      continue;
    }
    if (lnr_z<Z>(P.step, ctx.theta) == 0) {
      auto kids = classify_harmonic_z<Z>(ctx);
      if (hook && *hook) (*hook)(ctx, kids);
      if (lp.debug_verify) debug_verify_restriction<Z>(ctx, kids);
      for (auto& k : kids) stack.push_back(std::move(k));
    } else if (P.sign > 0) {
      auto red = classify_positive_z<Z>(ctx);
      if (hook && *hook) (*hook)(ctx, {red.child});
      if (lp.debug_verify) debug_verify_restriction<Z>(ctx, {red.child});
      stack.push_back(std::move(red.child));
    } else {
      auto red = classify_negative_z<Z>(ctx);
      if (hook && *hook) (*hook)(ctx, {red.child});
      if (lp.debug_verify) debug_verify_restriction<Z>(ctx, {red.child});
      stack.push_back(std::move(red.child));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lensfiber::detail
