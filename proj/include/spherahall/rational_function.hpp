#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spherahall/errors.hpp"
#include "spherahall/rational.hpp"

namespace spherahall {

/// Dense univariate polynomial in v over Q, coefficients low degree first,
/// never carrying a zero leading coefficient.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Rational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly monomial(Rational c, std::size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = std::move(c);
    return QPoly(std::move(v));
  }
  static QPoly v() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a) {
    std::vector<Rational> r(a.c_);
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    std::vector<Rational> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
      Rational f = rem[k + b.c_.size() - 1] / b.lead();
      quo[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
  }

  QPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> r(c_);
    Rational l = lead();
    for (auto& x : r) x /= l;
    return QPoly(std::move(r));
  }

  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// p(-v).
  QPoly reflect() const {
    std::vector<Rational> r(c_);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return QPoly(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "v") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string c = c_[i].str();
      if (!out.empty()) out += (c[0] == '-') ? " - " : " + ";
      else if (c[0] == '-') out += "-";
      if (c[0] == '-') c.erase(0, 1);
      if (i == 0 || c != "1") out += c;
      if (i > 0) {
        if (c != "1") out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Element of Q(v), stored as num/den with gcd 1 and a monic denominator.
/// Equal values have identical representations.
class RationalFunctionV {
 public:
  RationalFunctionV() : num_(), den_(Rational(1)) {}
  RationalFunctionV(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunctionV(int c) : RationalFunctionV(Rational(c)) {}             // NOLINT
  explicit RationalFunctionV(QPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  RationalFunctionV(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    normalize();
  }

  static RationalFunctionV v() { return RationalFunctionV(QPoly::v()); }
  /// q = v^2.
  static RationalFunctionV q() { return RationalFunctionV(QPoly::monomial(1, 2)); }
  /// q^e for integer e.
  static RationalFunctionV q_pow(int e) {
    if (e >= 0) return RationalFunctionV(QPoly::monomial(1, 2 * static_cast<std::size_t>(e)));
    return RationalFunctionV(QPoly(Rational(1)), QPoly::monomial(1, 2 * static_cast<std::size_t>(-e)));
  }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunctionV operator+(const RationalFunctionV& a, const RationalFunctionV& b) {
    if (a.den_ == b.den_) return RationalFunctionV(a.num_ + b.num_, a.den_);
    return RationalFunctionV(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunctionV operator-(const RationalFunctionV& a) {
    RationalFunctionV r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunctionV operator-(const RationalFunctionV& a, const RationalFunctionV& b) {
    return a + (-b);
  }
  friend RationalFunctionV operator*(const RationalFunctionV& a, const RationalFunctionV& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunctionV(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunctionV operator/(const RationalFunctionV& a, const RationalFunctionV& b) {
    if (b.is_zero()) throw InvalidArgument("division by zero rational function");
    return RationalFunctionV(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunctionV& operator+=(const RationalFunctionV& o) { return *this = *this + o; }
  RationalFunctionV& operator-=(const RationalFunctionV& o) { return *this = *this - o; }
  RationalFunctionV& operator*=(const RationalFunctionV& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunctionV& a, const RationalFunctionV& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// f(-v).
  RationalFunctionV reflect() const { return RationalFunctionV(num_.reflect(), den_.reflect()); }
  bool is_function_of_q() const { return reflect() == *this; }

  std::string str() const {
    if (den_ == QPoly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = QPoly(Rational(1));
      return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPoly::divmod(num_, g).first;
      den_ = QPoly::divmod(den_, g).first;
    }
    Rational l = den_.lead();
    if (!l.is_one()) {
      num_ = num_ * QPoly(Rational(1) / l);
      den_ = den_.monic();
    }
  }

  QPoly num_;
  QPoly den_;
};

/// Exact value at v = sqrt(q). Requires f to be a function of v^2.
inline Rational rf_eval_at_q(const RationalFunctionV& f, long q) {
  if (!f.is_function_of_q())
    throw OddPowerResidue("rational function " + f.str() + " involves odd powers of v");
  // Both parts are even polynomials after reduction; substitute v^2 = q.
  auto eval_even = [q](const QPoly& p) {
    Rational acc;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (i % 2 == 1) {
        if (!c[i].is_zero()) throw InternalError("odd coefficient survived reduction");
        continue;
      }
      acc = acc * Rational(q) + c[i];
    }
    return acc;
  };
  Rational den = eval_even(f.denominator());
  if (den.is_zero()) throw InvalidArgument("rational function has a pole at q");
  return eval_even(f.numerator()) / den;
}

}  // namespace spherahall
