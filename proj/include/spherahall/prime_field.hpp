#pragma once

#include <cstdint>
#include <string>

#include "spherahall/errors.hpp"
#include "spherahall/rational.hpp"

namespace spherahall {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

/// Arithmetic in F_p for a prime p below 2^31.
struct PrimeField {
  using value_type = std::uint32_t;

  explicit PrimeField(long p) : p(static_cast<std::uint32_t>(p)) {
    if (!is_prime(p) || p >= (1L << 31))
      throw InvalidArgument("field order " + std::to_string(p) + " is not a supported prime");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long x) const {
    long r = x % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw InvalidArgument("inverse of zero in F_p");
    // Fermat: a^(p-2).
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  bool is_zero(value_type a) const { return a == 0; }

  std::uint32_t p;
};

/// Element of F_q for prime q, carrying its modulus.
struct PrimeFieldScalar {
  PrimeFieldScalar(long v, long modulus) : modulus(static_cast<std::uint32_t>(modulus)) {
    value = PrimeField(modulus).from_int(v);
  }

  friend PrimeFieldScalar operator+(PrimeFieldScalar a, PrimeFieldScalar b) {
    check(a, b);
    return {static_cast<long>(PrimeField(a.modulus).add(a.value, b.value)), a.modulus};
  }
  friend PrimeFieldScalar operator-(PrimeFieldScalar a, PrimeFieldScalar b) {
    check(a, b);
    return {static_cast<long>(PrimeField(a.modulus).sub(a.value, b.value)), a.modulus};
  }
  friend PrimeFieldScalar operator*(PrimeFieldScalar a, PrimeFieldScalar b) {
    check(a, b);
    return {static_cast<long>(PrimeField(a.modulus).mul(a.value, b.value)), a.modulus};
  }
  PrimeFieldScalar inverse() const {
    return {static_cast<long>(PrimeField(modulus).inv(value)), modulus};
  }
  friend bool operator==(const PrimeFieldScalar&, const PrimeFieldScalar&) = default;

  std::uint32_t value;
  std::uint32_t modulus;

 private:
  static void check(const PrimeFieldScalar& a, const PrimeFieldScalar& b) {
    if (a.modulus != b.modulus) throw InvalidArgument("mixed moduli in F_q arithmetic");
  }
};

/// Exact field Q with the same interface as PrimeField.
struct RationalField {
  using value_type = Rational;
  value_type zero() const { return {}; }
  value_type one() const { return Rational(1); }
  value_type from_int(long x) const { return Rational(x); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return Rational(1) / a; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
};

}  // namespace spherahall
