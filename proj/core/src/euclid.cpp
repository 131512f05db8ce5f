#include "lensfiber/euclid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lensfiber/floor_sum.hpp"

namespace lensfiber {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64(d, primes);
  factor_u64(n / d, primes);
}

// All divisors > 1 of n, unsorted.
std::vector<u64> proper_divisors_u64(u64 n) {
  std::vector<u64> primes;
  factor_u64(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<u64> divs{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    std::size_t e = j - i;
    std::size_t base = divs.size();
    u64 pw = 1;
    for (std::size_t k = 0; k < e; ++k) {
      pw *= primes[i];
      for (std::size_t d = 0; d < base; ++d) divs.push_back(divs[d] * pw);
    }
    i = j;
  }
  divs.erase(std::remove(divs.begin(), divs.end(), 1ull), divs.end());
  return divs;
}

}  // namespace

EuclidTrace euclid_trace(const Int& p, const Int& q) {
  if (q <= 0 || q >= p)
    throw precondition_error(errc::q_out_of_range, "require 0 < q < p, got q=" + to_string(q) +
                                                       ", p=" + to_string(p));
  if (gcd(p, q) != 1)
    throw precondition_error(errc::q_not_coprime,
                             "gcd(p,q) != 1 for p=" + to_string(p) + ", q=" + to_string(q));

  std::vector<Int> remainders;
  std::vector<Int> coefficients;
  std::vector<std::pair<Int, Int>> convergents;
  convergents.emplace_back(0, 1);  // (p_{-1}, q_{-1})
  convergents.emplace_back(1, 0);  // (p_0, q_0)

  Int a = p, b = q;
  while (b > 0) {
    Int d = a / b;
    Int r = a - d * b;
    coefficients.push_back(d);
    const auto& [pi, qi] = convergents[convergents.size() - 1];
    const auto& [pim1, qim1] = convergents[convergents.size() - 2];
    convergents.emplace_back(d * pi + pim1, d * qi + qim1);
    if (r > 0) remainders.push_back(r);
    a = b;
    b = r;
  }
  return EuclidTrace(p, q, std::move(remainders), std::move(coefficients),
                     std::move(convergents));
}

std::vector<Int> harmonics(const EuclidTrace& trace) {
  // Union of the divisors > 1 of gcd(p, r_j) over all internal remainders.
  std::vector<Int> out;
  for (const Int& rj : trace.remainders()) {
    Int g = gcd(trace.p(), rj);
    if (g == 1) continue;
    if (!g.fits_ulong_p())
      throw size_limit_error("harmonic divisor enumeration needs gcd(p, r_j) to fit 64 bits; got " +
                             to_string(g));
    for (u64 d : proper_divisors_u64(g.get_ui())) out.emplace_back(static_cast<unsigned long>(d));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_harmonic(const EuclidTrace& trace, const Int& theta) {
  if (theta < 2)
    throw precondition_error(errc::theta_too_small, "theta must be >= 2, got " + to_string(theta));
  if (trace.p() % theta != 0)
    throw precondition_error(errc::theta_not_divisor,
                             "theta=" + to_string(theta) + " does not divide p=" + to_string(trace.p()));
  for (const Int& rj : trace.remainders())
    if (rj % theta == 0) return true;
  return false;
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 2)
    throw precondition_error(errc::argument_out_of_range, "modulus must be >= 2, got " + to_string(m));
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw precondition_error(errc::not_invertible,
                             to_string(a) + " has no inverse mod " + to_string(m));
  if (inv <= 0) inv += m;
  return inv;
}

Int count_residues_leq(const Int& p, const Int& q, const Int& l, const Int& x) {
  if (q <= 0 || q >= p || gcd(p, q) != 1)
    throw precondition_error(errc::q_out_of_range, "require 0 < q < p coprime");
  if (l < 0 || l >= p)
    throw precondition_error(errc::argument_out_of_range, "require 0 <= l < p, got l=" + to_string(l));
  if (x < 0 || x >= p)
    throw precondition_error(errc::argument_out_of_range, "require 0 <= x < p, got x=" + to_string(x));
  return detail::count_orbit_leq<Int>(p, q, l, x);
}

}  // namespace lensfiber
