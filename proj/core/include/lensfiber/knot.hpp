#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "lensfiber/config.hpp"
#include "lensfiber/euclid.hpp"
#include "lensfiber/int.hpp"

namespace lensfiber {

// Parameters of the simple knot K(p,q,k) and the derived quantities
// q' (inverse of q mod p), l = [q'k]_p, theta = p/gcd(p,k), t = l*theta/p,
// t' = k*theta/p.
struct KnotParams {
  Int p, q, k;
  Int q_inv;
  Int l;
  Int theta;
  Int t;
  Int t_prime;
};

// Validates the triple and derives all parameters.
KnotParams knot_params(const Int& p, const Int& q, const Int& k);

// Laurent polynomial with integer coefficients. Stored dense and trimmed:
// the lowest and highest stored coefficients are nonzero (empty == zero).
class LaurentPoly {
 public:
  LaurentPoly() = default;

  // coeffs[i] is the coefficient of T^(min_exp + i).
  LaurentPoly(std::vector<Int> coeffs, std::int64_t min_exp);

  static LaurentPoly constant(Int c);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  // Degree span; 0 for constants and for the zero polynomial.
  std::int64_t breadth() const { return is_zero() ? 0 : max_exp() - min_exp(); }
  const Int& leading_coefficient() const;
  Int coefficient(std::int64_t exp) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }

  // Unit-normalized form: min exponent 0, positive leading coefficient.
  LaurentPoly canonical() const;
  // Exponent reversal T^e -> T^(-e).
  LaurentPoly reversed() const;

  bool operator==(const LaurentPoly& other) const = default;

 private:
  std::vector<Int> coeffs_;
  std::int64_t min_exp_ = 0;
};

// Equality up to multiplication by a unit +-T^j.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

// The sequence S(p,q,k): the set S = {[q]_p,...,[lq]_p} and the p-periodic
// jump function g with increments t off S and t - theta on S, min 0.
// Values are immutable and freely shareable; the min/max of the raw
// representative are memoized behind a once-flag.
class JumpSequence {
 public:
  explicit JumpSequence(KnotParams params);

  const KnotParams& params() const { return params_; }
  const Int& p() const { return params_.p; }

  // Membership of [x]_p in S via 1 <= [q'x]_p <= l; defined for any integer.
  bool member(const Int& x) const;

  // Raw affine representative g_raw(x) = t*x - theta*|{i <= l : [iq]_p <= x}|
  // for x in [0,p), extended p-periodically. Internal normalization detail.
  Int g_raw(const Int& x) const;

  // Min-normalized value g(x) >= 0; O(log p) after the first call.
  Int eval(const Int& x) const;

  const Int& min_raw() const;
  const Int& max_raw() const;

 private:
  KnotParams params_;
  struct Cache {
    std::once_flag min_once;
    std::once_flag max_once;
    Int min_raw;
    Int max_raw;
  };
  std::shared_ptr<Cache> cache_;
};

inline JumpSequence jump_sequence(const Int& p, const Int& q, const Int& k) {
  return JumpSequence(knot_params(p, q, k));
}

// Constant-arithmetic membership test; rejects x outside [0,p).
bool s_member(const JumpSequence& seq, const Int& x);

// g(x) for any integer x (reduced mod p).
Int eval_g(const JumpSequence& seq, const Int& x);

// The full list g(0),...,g(p-1). Values provably fit int64 under the
// materialization cap. Throws size_limit_error beyond the limit.
std::vector<std::int64_t> full_sequence(const JumpSequence& seq);

// All x in [0,p) with g(x) = 0; the O(p) reference oracle.
std::vector<Int> minima_bruteforce(const JumpSequence& seq);

// Region coefficients c_i = g(i) plus the four boundary multiplicities
// (t', theta - t', theta - t, t) attached to (alpha_1, alpha_2, beta_1, beta_2).
struct DomainCoefficients {
  std::vector<std::int64_t> c;
  std::array<Int, 4> boundary;
};
DomainCoefficients domain_coefficients(const JumpSequence& seq);

// sum_{i=0}^{p-1} T^{g(i)}; coefficient sum p, min exponent 0.
LaurentPoly generating_function(const JumpSequence& seq);

// Exact quotient of the generating function by 1 + T + ... + T^(theta-1),
// canonicalized. A nonzero remainder raises internal_check_error.
LaurentPoly alexander(const JumpSequence& seq);

// Euler characteristic of the taut Seifert surface: theta - max_i g(i).
// Computed from the extrema locator, so it works at any p.
Int euler_characteristic(const JumpSequence& seq);

// Checks theta - (1/4) * sum over corner incidences of c_i against
// euler_characteristic. The eight incidences sit at the two knot punctures
// x_0 and x_k: regions {j, j-1, j+q, j+q-1} mod p corner the point x_j.
bool euler_corner_check(const JumpSequence& seq);

// Circular track of length p with k stations at {[iq]_p : i = 1..k}, each
// holding fuel for p/k units; the car drives in increasing position and
// refuels on arrival. Returns the stations from which a full circuit
// completes with the tank never negative, sorted ascending.
std::vector<Int> race_track(const JumpSequence& seq);

}  // namespace lensfiber
