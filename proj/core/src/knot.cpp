#include "lensfiber/knot.hpp"

#include <algorithm>
#include <limits>

#include "lensfiber/floor_sum.hpp"
#include "lensfiber/locator.hpp"

namespace lensfiber {

KnotParams knot_params(const Int& p, const Int& q, const Int& k) {
  if (q <= 0 || q >= p)
    throw precondition_error(errc::q_out_of_range,
                             "require 0 < q < p, got q=" + to_string(q) + ", p=" + to_string(p));
  if (gcd(p, q) != 1)
    throw precondition_error(errc::q_not_coprime,
                             "gcd(p,q) != 1 for p=" + to_string(p) + ", q=" + to_string(q));
  if (k <= 0 || k >= p)
    throw precondition_error(errc::k_out_of_range,
                             "require 0 < k < p, got k=" + to_string(k) + ", p=" + to_string(p));
  KnotParams kp;
  kp.p = p;
  kp.q = q;
  kp.k = k;
  kp.q_inv = mod_inverse(q, p);
  kp.l = lnr(kp.q_inv * k, p);
  Int g = gcd(p, k);
  kp.theta = p / g;
  kp.t = kp.l / g;
  kp.t_prime = k / g;
  if (kp.t * g != kp.l || lnr(kp.l * q, p) != k)
    throw internal_check_error("derived knot parameters failed their defining identities");
  return kp;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::vector<Int> coeffs, std::int64_t min_exp)
    : coeffs_(std::move(coeffs)), min_exp_(min_exp) {
  std::size_t lead = coeffs_.size();
  while (lead > 0 && coeffs_[lead - 1] == 0) --lead;
  coeffs_.resize(lead);
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    min_exp_ += static_cast<std::int64_t>(skip);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

LaurentPoly LaurentPoly::constant(Int c) {
  std::vector<Int> v;
  if (c != 0) v.push_back(std::move(c));
  return LaurentPoly(std::move(v), 0);
}

const Int& LaurentPoly::leading_coefficient() const {
  static const Int zero = 0;
  return coeffs_.empty() ? zero : coeffs_.back();
}

Int LaurentPoly::coefficient(std::int64_t exp) const {
  if (coeffs_.empty() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return LaurentPoly();
  std::vector<Int> c = coeffs_;
  if (c.back() < 0)
    for (Int& x : c) x = -x;
  return LaurentPoly(std::move(c), 0);
}

LaurentPoly LaurentPoly::reversed() const {
  std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(std::move(c), -max_exp());
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return a.canonical() == b.canonical();
}

// ---------------------------------------------------------------------------
// JumpSequence

JumpSequence::JumpSequence(KnotParams params)
    : params_(std::move(params)), cache_(std::make_shared<Cache>()) {}

bool JumpSequence::member(const Int& x) const {
  Int rho = lnr(params_.q_inv * lnr(x, params_.p), params_.p);
  return rho >= 1 && rho <= params_.l;
}

Int JumpSequence::g_raw(const Int& x) const {
  Int xr = lnr(x, params_.p);
  Int f = detail::count_orbit_leq<Int>(params_.p, params_.q, params_.l, xr);
  return params_.t * xr - params_.theta * f;
}

const Int& JumpSequence::min_raw() const {
  std::call_once(cache_->min_once, [&] {
    auto mins = locate_minima(params_);
    cache_->min_raw = g_raw(mins.front());
  });
  return cache_->min_raw;
}

const Int& JumpSequence::max_raw() const {
  std::call_once(cache_->max_once, [&] {
    auto maxs = locate_maxima(params_);
    cache_->max_raw = g_raw(maxs.front());
  });
  return cache_->max_raw;
}

Int JumpSequence::eval(const Int& x) const { return g_raw(x) - min_raw(); }

bool s_member(const JumpSequence& seq, const Int& x) {
  if (x < 0 || x >= seq.p())
    throw precondition_error(errc::argument_out_of_range,
                             "x must lie in [0,p), got " + to_string(x));
  return seq.member(x);
}

Int eval_g(const JumpSequence& seq, const Int& x) { return seq.eval(x); }

namespace {

struct NarrowParams {
  std::int64_t p, q_inv, l, t, theta;
};

NarrowParams narrow(const KnotParams& kp) {
  return {to_i64(kp.p), to_i64(kp.q_inv), to_i64(kp.l), to_i64(kp.t), to_i64(kp.theta)};
}

// Walks g over [0,p) in int64 (safe under the materialization hard cap)
// and feeds each value to `sink(x, value)`.
template <class Sink>
void walk_raw(const NarrowParams& np, Sink&& sink) {
  std::int64_t rho = 0;
  std::int64_t v = 0;
  sink(0, v);
  for (std::int64_t x = 1; x < np.p; ++x) {
    rho += np.q_inv;
    if (rho >= np.p) rho -= np.p;
    v += (rho >= 1 && rho <= np.l) ? np.t - np.theta : np.t;
    sink(x, v);
  }
}

}  // namespace

std::vector<std::int64_t> full_sequence(const JumpSequence& seq) {
  check_materializable(seq.p(), "full_sequence");
  NarrowParams np = narrow(seq.params());
  std::vector<std::int64_t> out(static_cast<std::size_t>(np.p));
  std::int64_t mn = 0;
  walk_raw(np, [&](std::int64_t x, std::int64_t v) {
    out[static_cast<std::size_t>(x)] = v;
    if (v < mn) mn = v;
  });
  for (auto& v : out) v -= mn;
  return out;
}

std::vector<Int> minima_bruteforce(const JumpSequence& seq) {
  check_materializable(seq.p(), "minima_bruteforce");
  NarrowParams np = narrow(seq.params());
  std::int64_t mn = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> arg;
  walk_raw(np, [&](std::int64_t x, std::int64_t v) {
    if (v < mn) {
      mn = v;
      arg.assign(1, x);
    } else if (v == mn) {
      arg.push_back(x);
    }
  });
  return std::vector<Int>(arg.begin(), arg.end());
}

DomainCoefficients domain_coefficients(const JumpSequence& seq) {
  check_materializable(seq.p(), "domain_coefficients");
  const KnotParams& kp = seq.params();
  return DomainCoefficients{full_sequence(seq),
                            {kp.t_prime, kp.theta - kp.t_prime, kp.theta - kp.t, kp.t}};
}

LaurentPoly generating_function(const JumpSequence& seq) {
  check_materializable(seq.p(), "generating_function");
  auto values = full_sequence(seq);
  std::int64_t m = 0;
  for (auto v : values) m = std::max(m, v);
  const std::int64_t lim = std::min(global_config().materialize_limit, kMaterializeHardCap);
  if (m + 1 > 4 * lim)
    throw size_limit_error("generating_function: the degree span " + std::to_string(m) +
                           " exceeds four times the materialization limit");
  std::vector<std::int64_t> hist(static_cast<std::size_t>(m + 1), 0);
  for (auto v : values) ++hist[static_cast<std::size_t>(v)];
  std::vector<Int> coeffs(hist.begin(), hist.end());
  return LaurentPoly(std::move(coeffs), 0);
}

LaurentPoly alexander(const JumpSequence& seq) {
  LaurentPoly gen = generating_function(seq);
  const std::int64_t theta = to_i64(seq.params().theta);
  const auto& a = gen.coefficients();
  const std::int64_t deg_h = static_cast<std::int64_t>(a.size());  // deg(gen) + 1
  // h = gen * (T - 1), then exact division by T^theta - 1.
  std::vector<Int> h(static_cast<std::size_t>(deg_h) + 1);
  for (std::int64_t i = 0; i <= deg_h; ++i) {
    Int v = 0;
    if (i >= 1 && i <= deg_h) v += a[static_cast<std::size_t>(i - 1)];
    if (i < deg_h) v -= a[static_cast<std::size_t>(i)];
    h[static_cast<std::size_t>(i)] = v;
  }
  std::vector<Int> quot(h.size(), Int(0));
  for (std::int64_t i = deg_h; i >= theta; --i) {
    Int& hi = h[static_cast<std::size_t>(i)];
    if (hi == 0) continue;
    quot[static_cast<std::size_t>(i - theta)] = hi;
    h[static_cast<std::size_t>(i - theta)] += hi;
    hi = 0;
  }
  for (std::int64_t i = 0; i < theta; ++i)
    if (h[static_cast<std::size_t>(i)] != 0)
      throw internal_check_error(
          "alexander: the generating function is not divisible by 1 + T + ... + T^(theta-1)");
  return LaurentPoly(std::move(quot), 0).canonical();
}

Int euler_characteristic(const JumpSequence& seq) {
  Int m = seq.max_raw() - seq.min_raw();
  return seq.params().theta - m;
}

bool euler_corner_check(const JumpSequence& seq) {
  check_materializable(seq.p(), "euler_corner_check");
  const KnotParams& kp = seq.params();
  // Regions cornering the puncture x_j have indices {j, j-1, j+q, j+q-1} mod p.
  Int sum = 0;
  for (const Int& j : {Int(0), kp.k}) {
    const std::array<Int, 4> corners{j, Int(j - 1), Int(j + kp.q), Int(j + kp.q - 1)};
    for (const Int& idx : corners) sum += seq.eval(idx);
  }
  if (sum % 4 != 0) return false;
  Int chi_corner = kp.theta - sum / 4;
  return chi_corner == euler_characteristic(seq);
}

std::vector<Int> race_track(const JumpSequence& seq) {
  check_materializable(seq.p(), "race_track");
  const KnotParams& kp = seq.params();
  const std::int64_t p = to_i64(kp.p), q = to_i64(kp.q), k = to_i64(kp.k);
  std::vector<std::int64_t> stations(static_cast<std::size_t>(k));
  std::int64_t pos = 0;
  for (auto& s : stations) {
    pos += q;
    if (pos >= p) pos -= p;
    s = pos;
  }
  std::sort(stations.begin(), stations.end());
  mpq_class fuel(static_cast<long>(p), static_cast<long>(k));  // p/k units of fuel per station
  fuel.canonicalize();
  auto gap = [&](std::size_t j) {
    std::int64_t next = (j + 1 < stations.size()) ? stations[j + 1] : stations[0] + p;
    return next - stations[j];
  };
  // B_j = sum_{i<j} (fuel - gap_i); a start is valid iff B_j attains min(B).
  mpq_class b = 0, mn = 0;
  for (std::size_t j = 0; j + 1 < stations.size(); ++j) {
    b += fuel - gap(j);
    if (b < mn) mn = b;
  }
  std::vector<Int> out;
  b = 0;
  for (std::size_t j = 0; j < stations.size(); ++j) {
    if (b == mn) out.emplace_back(stations[j]);
    b += fuel - gap(j);
  }
  return out;
}

}  // namespace lensfiber
