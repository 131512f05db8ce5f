#pragma once

#include <utility>
#include <vector>

#include "lensfiber/int.hpp"

namespace lensfiber {

// Full trace of the Euclidean algorithm on a coprime pair p > q > 0:
// remainders r_1 > ... > r_{n-1} = 1, coefficients d_1..d_n, and the
// continued-fraction convergents p_i/q_i = [d_1,...,d_i].
//
// Indexing mirrors the recurrences exactly: r(-1) = p, r(0) = q, r(n) = 0,
// and convergents run from i = -1 (p_{-1}=0, q_{-1}=1) to i = n (p_n = p).
class EuclidTrace {
 public:
  EuclidTrace(Int p, Int q, std::vector<Int> remainders, std::vector<Int> coefficients,
              std::vector<std::pair<Int, Int>> convergents)
      : p_(std::move(p)),
        q_(std::move(q)),
        remainders_(std::move(remainders)),
        coefficients_(std::move(coefficients)),
        convergents_(std::move(convergents)) {}

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  // Number of division steps; coefficients are d_1..d_n.
  long n() const { return static_cast<long>(coefficients_.size()); }

  // r(i) for -1 <= i <= n.
  const Int& r(long i) const {
    static const Int zero = 0;
    if (i == -1) return p_;
    if (i == 0) return q_;
    if (i == n()) return zero;
    return remainders_.at(static_cast<std::size_t>(i - 1));
  }

  // d(j) for 1 <= j <= n.
  const Int& d(long j) const { return coefficients_.at(static_cast<std::size_t>(j - 1)); }

  // Convergent (p_i, q_i) for -1 <= i <= n.
  const std::pair<Int, Int>& convergent(long i) const {
    return convergents_.at(static_cast<std::size_t>(i + 1));
  }

  const std::vector<Int>& remainders() const { return remainders_; }
  const std::vector<Int>& coefficients() const { return coefficients_; }

 private:
  Int p_, q_;
  std::vector<Int> remainders_;    // r_1..r_{n-1}, empty when n = 1
  std::vector<Int> coefficients_;  // d_1..d_n
  std::vector<std::pair<Int, Int>> convergents_;  // (p_i, q_i), i = -1..n
};

// Runs the Euclidean algorithm on (p, q). Rejects q <= 0, q >= p, gcd != 1.
EuclidTrace euclid_trace(const Int& p, const Int& q);

// { m > 1 : m | p and m | r_j for some 1 <= j <= n-1 }, sorted ascending.
// 1 is never a harmonic by convention (knot orders satisfy theta >= 2).
std::vector<Int> harmonics(const EuclidTrace& trace);

// True iff theta divides some remainder r_j, 1 <= j <= n-1.
// Requires theta >= 2 and theta | p.
bool is_harmonic(const EuclidTrace& trace, const Int& theta);

// Least positive x with a*x == 1 (mod m); requires m >= 2, gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

// |{ 1 <= i <= l : [i*q]_p <= x }| in O(log p) arithmetic steps via the
// floor-sum descent. Requires 0 < q < p coprime, 0 <= l < p, 0 <= x < p.
Int count_residues_leq(const Int& p, const Int& q, const Int& l, const Int& x);

}  // namespace lensfiber
