#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "spherahall/prime_field.hpp"

namespace spherahall {

/// Polynomial in t over F_p, coefficients low degree first, trimmed.
using FpPoly = std::vector<std::uint32_t>;

namespace fppoly {

inline void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_zero(const FpPoly& a) { return a.empty(); }

inline FpPoly monomial(const PrimeField& f, long c, int m) {
  FpPoly r;
  auto v = f.from_int(c);
  if (v == 0) return r;
  r.assign(static_cast<std::size_t>(m) + 1, 0);
  r.back() = v;
  return r;
}

inline int valuation(const FpPoly& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

inline bool is_monomial(const FpPoly& a) {
  return !a.empty() && valuation(a) == degree(a);
}

inline FpPoly add(const PrimeField& f, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

inline FpPoly sub(const PrimeField& f, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

inline FpPoly neg(const PrimeField& f, const FpPoly& a) {
  FpPoly r(a);
  for (auto& x : r) x = f.neg(x);
  return r;
}

inline FpPoly scale(const PrimeField& f, const FpPoly& a, std::uint32_t c) {
  if (c == 0) return {};
  FpPoly r(a);
  for (auto& x : r) x = f.mul(x, c);
  return r;
}

inline FpPoly mul(const PrimeField& f, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

/// Euclidean division (quotient, remainder).
inline std::pair<FpPoly, FpPoly> divmod(const PrimeField& f, const FpPoly& a, const FpPoly& b) {
  FpPoly rem(a);
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  if (rem.size() < b.size()) return {{}, rem};
  FpPoly quo(rem.size() - b.size() + 1, 0);
  std::uint32_t inv_lead = f.inv(b.back());
  for (std::size_t k = quo.size(); k-- > 0;) {
    std::uint32_t c = f.mul(rem[k + b.size() - 1], inv_lead);
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, b[j]));
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

}  // namespace fppoly

/// Dense matrix of F_p[t] entries.
struct PolyMatrix {
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows(rows), cols(cols), a(rows * cols) {}

  FpPoly& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const FpPoly& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool is_zero() const {
    for (const auto& e : a)
      if (!e.empty()) return false;
    return true;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FpPoly> a;
};

inline PolyMatrix mat_mul(const PrimeField& f, const PolyMatrix& x, const PolyMatrix& y) {
  if (x.cols != y.rows) throw InvalidArgument("polynomial matrix shape mismatch");
  PolyMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const FpPoly& u = x(i, k);
      if (u.empty()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        const FpPoly& w = y(k, j);
        if (w.empty()) continue;
        r(i, j) = fppoly::add(f, r(i, j), fppoly::mul(f, u, w));
      }
    }
  return r;
}

}  // namespace spherahall
