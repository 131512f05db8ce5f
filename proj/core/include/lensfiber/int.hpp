#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lensfiber {

// Arbitrary-precision integer used throughout the public API.
using Int = mpz_class;

// Violated-precondition codes, one per rejectable input condition.
enum class errc {
  q_out_of_range,
  q_not_coprime,
  k_out_of_range,
  theta_not_divisor,
  theta_too_small,
  argument_out_of_range,
  not_invertible,
  interval_violation,
  flag_missing,
  harmonic_preconditions,
};

inline const char* to_string(errc e) {
  switch (e) {
    case errc::q_out_of_range: return "q_out_of_range";
    case errc::q_not_coprime: return "q_not_coprime";
    case errc::k_out_of_range: return "k_out_of_range";
    case errc::theta_not_divisor: return "theta_not_divisor";
    case errc::theta_too_small: return "theta_too_small";
    case errc::argument_out_of_range: return "argument_out_of_range";
    case errc::not_invertible: return "not_invertible";
    case errc::interval_violation: return "interval_violation";
    case errc::flag_missing: return "flag_missing";
    case errc::harmonic_preconditions: return "harmonic_preconditions";
  }
  return "unknown";
}

// Rejected input; carries the code naming the violated precondition.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(errc code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// A materialization request exceeded the configured limit.
class size_limit_error : public std::runtime_error {
 public:
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed; signals an implementation bug, never valid input.
class internal_check_error : public std::logic_error {
 public:
  explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Floor division, denominator must be positive.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Least non-negative residue of a mod m, m > 0.
inline Int lnr(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Least positive residue [a]_m: in {1,...,m}, so [0]_m = m.
inline Int lpr(const Int& a, const Int& m) {
  Int r = lnr(a, m);
  if (r == 0) r = m;
  return r;
}

inline bool fits_i64(const Int& a) { return a.fits_slong_p(); }

inline std::int64_t to_i64(const Int& a) { return static_cast<std::int64_t>(a.get_si()); }

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace lensfiber
