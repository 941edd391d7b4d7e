#pragma once

#include <map>
#include <string>

#include "spherahall/rational_function.hpp"

namespace spherahall {

/// Element of Q(v)[x, x^-1]; zero coefficients are never stored.
class LaurentElement {
 public:
  LaurentElement() = default;
  static LaurentElement constant(const RationalFunctionV& c) { return monomial(c, 0); }
  static LaurentElement monomial(const RationalFunctionV& c, int exponent) {
    LaurentElement e;
    if (!c.is_zero()) e.terms_.emplace(exponent, c);
    return e;
  }

  const std::map<int, RationalFunctionV>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunctionV coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? RationalFunctionV() : it->second;
  }

  LaurentElement& operator+=(const LaurentElement& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) {
    LaurentElement r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
    LaurentElement r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend LaurentElement operator*(const RationalFunctionV& s, const LaurentElement& a) {
    return constant(s) * a;
  }
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (e != 0) out += "*x^" + std::to_string(e);
    }
    return out;
  }

 private:
  void add_term(int e, const RationalFunctionV& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<int, RationalFunctionV> terms_;
};

}  // namespace spherahall
