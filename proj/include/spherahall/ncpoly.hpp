#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "spherahall/errors.hpp"
#include "spherahall/rational_function.hpp"

namespace spherahall {

enum class Family { x, y, z, zprime, zjordan };

/// A generator of the presented algebra: x_i, y_i (d = 3), z_i, z'_i (d = 0),
/// or z_{i,j} (d = 1, block j >= 1).
struct GeneratorSymbol {
  Family family = Family::x;
  int index = 0;
  int block = 0;

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;

  /// x0, y2, z'1, z[0,3]; negative indices are parenthesized, as in x(-1).
  std::string str() const {
    const std::string i = index < 0 ? "(" + std::to_string(index) + ")" : std::to_string(index);
    switch (family) {
      case Family::x: return "x" + i;
      case Family::y: return "y" + i;
      case Family::z: return "z" + i;
      case Family::zprime: return "z'" + i;
      case Family::zjordan: return "z[" + std::to_string(index) + "," + std::to_string(block) + "]";
    }
    return "?";
  }
};

inline GeneratorSymbol gx(int i) { return {Family::x, i, 0}; }
inline GeneratorSymbol gy(int i) { return {Family::y, i, 0}; }
inline GeneratorSymbol gz(int i) { return {Family::z, i, 0}; }
inline GeneratorSymbol gzp(int i) { return {Family::zprime, i, 0}; }
inline GeneratorSymbol gzj(int i, int j) {
  if (j < 1) throw InvalidLabel("Jordan block size must be positive");
  return {Family::zjordan, i, j};
}

using Word = std::vector<GeneratorSymbol>;

/// Noncommutative polynomial with coefficients in Q(v); zero terms are dropped.
class NCPolynomial {
 public:
  NCPolynomial() = default;
  static NCPolynomial constant(const RationalFunctionV& c) { return word({}, c); }
  static NCPolynomial word(Word w, const RationalFunctionV& c = RationalFunctionV(1)) {
    NCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
  }

  const std::map<Word, RationalFunctionV>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when every coefficient is invariant under v -> -v.
  bool coefficients_in_q() const {
    for (const auto& [_, c] : terms_)
      if (!c.is_function_of_q()) return false;
    return true;
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    return r;
  }
  friend NCPolynomial operator*(const RationalFunctionV& s, const NCPolynomial& a) {
    NCPolynomial r;
    for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
    return r;
  }
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (const auto& g : w) out += "*" + g.str();
    }
    return out;
  }

 private:
  void add_term(const Word& w, const RationalFunctionV& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Word, RationalFunctionV> terms_;
};

inline NCPolynomial gen(const GeneratorSymbol& g) { return NCPolynomial::word({g}); }

}  // namespace spherahall
