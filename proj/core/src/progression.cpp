#include "lensfiber/progression.hpp"

#include "lensfiber/engine.hpp"

namespace lensfiber {

Int cycle_map(const Int& start, const Int& width, const Int& shift, const Int& x) {
  if (x < start || x > start + width)
    throw precondition_error(errc::argument_out_of_range,
                             "cycle_map point outside the closed interval");
  return lnr(x - start + shift, width) + start;
}

Int first_return(const Int& start, const Int& width, const Int& shift, const Int& y,
                 const Int& x) {
  Int qhat = abs(shift);
  if (qhat < 2 || qhat >= width)
    throw precondition_error(errc::argument_out_of_range, "shift magnitude must be in [2, width)");
  if (gcd(width, qhat) != 1)
    throw precondition_error(errc::argument_out_of_range, "shift must be coprime to the width");
  if (y < start || y + qhat > start + width)
    throw precondition_error(errc::interval_violation, "J must sit inside I");
  if (x < y || x > y + qhat)
    throw precondition_error(errc::argument_out_of_range, "x outside the closure of J");
  Int r = lnr(width, qhat);
  return cycle_map(y, qhat, shift > 0 ? Int(-r) : r, x);
}

AffineProgression restrict_progression(const AffineProgression& S, const Int& y) {
  return detail::restrict_z<Int>(S, y);
}

Int window_count(const AffineProgression& S, const Int& x) {
  return detail::window_count_z<Int>(S, x);
}

Int sigma(const IntervalContext& ctx) { return detail::sigma_z<Int>(ctx); }

Reduction classify_positive(const IntervalContext& ctx) {
  auto red = detail::classify_positive_z<Int>(ctx);
  return Reduction{static_cast<ReductionCase>(static_cast<int>(red.kind)), std::move(red.child)};
}

Reduction classify_negative(const IntervalContext& ctx) {
  auto red = detail::classify_negative_z<Int>(ctx);
  return Reduction{static_cast<ReductionCase>(static_cast<int>(red.kind)), std::move(red.child)};
}

std::vector<IntervalContext> classify_harmonic(const IntervalContext& ctx) {
  return detail::classify_harmonic_z<Int>(ctx);
}

}  // namespace lensfiber
