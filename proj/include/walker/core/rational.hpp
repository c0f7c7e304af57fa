#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walker {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_long(const Rational& q) {
  return is_integer(q) && q.get_num().fits_slong_p();
}

inline long to_long(const Rational& q) {
  if (!fits_long(q)) throw std::overflow_error("rational is not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// floor(q) as an integer-valued rational
inline Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

inline Rational rational_pow(const Rational& base, long n) {
  if (n == 0) return 1;
  if (n < 0) {
    if (base == 0) throw std::domain_error("division by zero in rational power");
    Rational inv = 1 / base;
    return rational_pow(inv, -n);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(n));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exact m-th root of a non-negative integer when it exists.
inline bool exact_root(const mpz_class& value, unsigned long m, mpz_class& root) {
  if (value < 0) return false;
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), m) != 0;
}

inline std::size_t hash_rational(const Rational& q) {
  auto limb = [](const mpz_class& z) -> std::size_t {
    if (mpz_size(z.get_mpz_t()) == 0) return 0;
    std::size_t h = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    return h ^ (static_cast<std::size_t>(mpz_size(z.get_mpz_t())) << 7) ^
           static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  };
  return limb(q.get_num()) * 1000003u ^ limb(q.get_den());
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace walker
