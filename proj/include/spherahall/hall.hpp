#pragma once

#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>

#include "spherahall/category.hpp"
#include "spherahall/dg.hpp"
#include "spherahall/ncpoly.hpp"
#include "spherahall/rational.hpp"

namespace spherahall {

/// Element of the derived Hall algebra at a fixed prime q: a finite Q-linear
/// combination of isoclasses.
class HallElement {
 public:
  HallElement(SphereDim dim, long q) : dim_(dim), q_(q) {}

  static HallElement basis(const ObjClass& x, long q, const Rational& c = Rational(1)) {
    HallElement e(x.dim(), q);
    e.add(x, c);
    return e;
  }

  SphereDim dim() const { return dim_; }
  long q() const { return q_; }
  const std::map<ObjClass, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const ObjClass& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add(const ObjClass& x, const Rational& c) {
    if (x.dim() != dim_) throw InvalidArgument("isoclass over a different d");
    if (c.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
      terms_.emplace(x, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  HallElement& operator+=(const HallElement& o) {
    check(o);
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  HallElement& operator-=(const HallElement& o) {
    check(o);
    for (const auto& [x, c] : o.terms_) add(x, -c);
    return *this;
  }
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend HallElement operator*(const Rational& s, const HallElement& a) {
    HallElement r(a.dim_, a.q_);
    for (const auto& [x, c] : a.terms_) r.add(x, s * c);
    return r;
  }
  friend bool operator==(const HallElement& a, const HallElement& b) {
    return a.dim_ == b.dim_ && a.q_ == b.q_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [x, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str() + "*[" + x.str() + "]";
    }
    return out;
  }

  void check(const HallElement& o) const {
    if (o.dim_ != dim_ || o.q_ != q_) throw InvalidArgument("Hall elements over different (d, q)");
  }

 private:
  SphereDim dim_;
  long q_;
  std::map<ObjClass, Rational> terms_;
};

inline HallElement unit(SphereDim dim, long q) {
  PrimeField check(q);
  return HallElement::basis(ObjClass::zero(dim), q);
}

namespace detail {

// Σ_{i=from}^{bound} (-1)^i dim Hom(X, Σ^{-i} Y)
inline long alternating_hom_sum(const ObjClass& x, const ObjClass& y, int from, int bound) {
  long s = 0;
  for (int i = from; i <= bound; ++i) s += (i % 2 == 0 ? 1 : -1) * hom_dim_T(x, y, -i);
  return s;
}

// |Aut W| · q^{Σ_{i>0} (-1)^i dim Hom(W, Σ^{-i} W)}
inline Rational corrected_aut(const ObjClass& w, long q) {
  return Rational(aut_count(w, q)) * Rational::power(q, alternating_hom_sum(w, w, 1, neg_hom_bound(w, w)));
}

}  // namespace detail

/// F_{XY}^Z = |[Y,Z]_X| / |Aut Y| · q^{Σ_{i>0} (-1)^i (dim Hom(Y, Σ^{-i}Z) - dim Hom(Y, Σ^{-i}Y))},
/// with [Y,Z]_X the maps Y -> Z whose cone is X, counted by the oracle.
inline Rational hall_number(const ObjClass& x, const ObjClass& y, const ObjClass& z, long q) {
  if (x.dim() != y.dim() || y.dim() != z.dim()) throw InvalidArgument("objects over different d");
  BigInt n = count_cone_class(y, z, x, q);
  if (n == 0) return {};
  const int bound = std::max(neg_hom_bound(y, z), neg_hom_bound(y, y));
  long e = detail::alternating_hom_sum(y, z, 1, bound) - detail::alternating_hom_sum(y, y, 1, bound);
  return Rational(n) / Rational(aut_count(y, q)) * Rational::power(q, e);
}

/// Cones of all maps Σ^{-1}X -> Y: every middle term of a triangle Y -> Z -> X -> ΣY.
inline std::set<ObjClass> candidate_extensions(const ObjClass& x, const ObjClass& y, long q) {
  if (x.dim() != y.dim()) throw InvalidArgument("objects over different d");
  std::set<ObjClass> out;
  for (const auto& [z, _] : cone_distribution(shift_obj(x, -1), y, q)) out.insert(z);
  return out;
}

/// [X][Y] expanded in isoclasses. Each Z is counted through the connecting
/// maps Σ^{-1}X -> Y with cone Z:
///   F^Z = n_Z · a(Z) / (a(X) a(Y)) · q^{-Σ_{i>=0} (-1)^i dim Hom(X, Σ^{-i} Y)},
/// a(W) = |Aut W| · q^{Σ_{i>0} (-1)^i dim Hom(W, Σ^{-i} W)}. Memoized.
inline std::map<ObjClass, Rational> basis_product(const ObjClass& x, const ObjClass& y, long q) {
  if (x.dim() != y.dim()) throw InvalidArgument("objects over different d");
  static std::mutex mu;
  static std::map<std::tuple<long, ObjClass, ObjClass>, std::map<ObjClass, Rational>> memo;
  auto key = std::make_tuple(q, x, y);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::map<ObjClass, Rational> out;
  if (x.is_zero()) {
    out.emplace(y, Rational(1));
  } else if (y.is_zero()) {
    out.emplace(x, Rational(1));
  } else {
    auto dist = cone_distribution(shift_obj(x, -1), y, q);
    Rational base = Rational::power(q, -detail::alternating_hom_sum(x, y, 0, neg_hom_bound(x, y))) /
                    (detail::corrected_aut(x, q) * detail::corrected_aut(y, q));
    for (const auto& [z, n] : dist) out.emplace(z, Rational(n) * detail::corrected_aut(z, q) * base);
  }
  std::lock_guard lock(mu);
  memo.emplace(key, out);
  return out;
}

inline HallElement hall_product(const HallElement& a, const HallElement& b) {
  a.check(b);
  HallElement r(a.dim(), a.q());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      Rational c = cx * cy;
      for (const auto& [z, f] : basis_product(x, y, a.q())) r.add(z, c * f);
    }
  return r;
}

inline HallElement operator*(const HallElement& a, const HallElement& b) { return hall_product(a, b); }

/// ([X][Y])[Z] == [X]([Y][Z]).
inline bool assoc_check(const ObjClass& x, const ObjClass& y, const ObjClass& z, long q) {
  auto bx = HallElement::basis(x, q), by = HallElement::basis(y, q), bz = HallElement::basis(z, q);
  return (bx * by) * bz == bx * (by * bz);
}

/// The d = 3 generator attached to the simple with homology in degree p.
inline GeneratorSymbol sphere_symbol(int p) {
  if (p % 2 == 0) return gx(p / 2);
  return gy((p - 1) / 2);
}

namespace detail {

using GradedDims = std::map<int, int>;

inline GradedDims graded_dims(const ObjClass& x) {
  GradedDims v;
  const int delta = x.dim().t_degree();
  for (const auto& l : x.summands())
    for (int k = 0; k < l.len; ++k) ++v[generator_degree(l) + k * delta];
  return v;
}

// Every d = 3 object whose homology has graded dimensions v. The highest
// occupied degree must start a string; try every admissible length.
inline void objects_with_dims(GradedDims v, std::vector<IndecLabel>& cur, std::set<ObjClass>& out) {
  while (!v.empty() && v.rbegin()->second == 0) v.erase(std::prev(v.end()));
  if (v.empty()) {
    out.insert(ObjClass(SphereDim{3}, cur));
    return;
  }
  const int g = v.rbegin()->first;
  for (int len = 1;; ++len) {
    auto it = v.find(g - 2 * (len - 1));
    if (it == v.end() || it->second == 0) break;
    GradedDims w = v;
    for (int k = 0; k < len; ++k) {
      auto jt = w.find(g - 2 * k);
      if (--jt->second == 0) w.erase(jt);
    }
    cur.push_back({-g, len, 1});
    objects_with_dims(w, cur, out);
    cur.pop_back();
  }
}

inline std::vector<ObjClass> objects_with_dims(const GradedDims& v) {
  std::set<ObjClass> out;
  std::vector<IndecLabel> cur;
  objects_with_dims(v, cur, out);
  return {out.begin(), out.end()};
}

inline int total(const GradedDims& v) {
  int n = 0;
  for (auto [_, k] : v) n += k;
  return n;
}

using ExpressMemo = std::map<std::pair<long, ObjClass>, NCPolynomial>;

inline NCPolynomial express_rec(const ObjClass& x, long q, int depth, ExpressMemo& memo);

// Solves for every class with graded dimensions v at once. Each product
// [Σ^{-p}S][B] or [B][Σ^{-p}S] with B one dimension smaller is a linear
// equation in those classes once its lower-dimensional terms are expressed.
inline void solve_dims(const GradedDims& v, long q, int depth, ExpressMemo& memo) {
  const SphereDim dim{3};
  const auto classes = objects_with_dims(v);
  std::map<ObjClass, std::size_t> col;
  for (std::size_t k = 0; k < classes.size(); ++k) col.emplace(classes[k], k);

  struct Row {
    std::vector<Rational> a;
    NCPolynomial rhs;
  };
  std::vector<Row> pivots;  // reduced rows, pivot column = index into pivot_col
  std::vector<std::size_t> pivot_col;

  auto add_equation = [&](std::vector<Rational> a, NCPolynomial rhs) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Rational f = a[pivot_col[r]];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < a.size(); ++k) a[k] -= f * pivots[r].a[k];
      rhs -= RationalFunctionV(f) * pivots[r].rhs;
    }
    std::size_t c = 0;
    while (c < a.size() && a[c].is_zero()) ++c;
    if (c == a.size()) return;
    Rational inv = Rational(1) / a[c];
    for (auto& e : a) e *= inv;
    rhs = RationalFunctionV(inv) * rhs;
    for (auto& row : pivots) {
      Rational f = row.a[c];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < a.size(); ++k) row.a[k] -= f * a[k];
      row.rhs -= RationalFunctionV(f) * rhs;
    }
    pivots.push_back({std::move(a), std::move(rhs)});
    pivot_col.push_back(c);
  };

  const int n = total(v);
  for (const auto& [p, k] : v) {
    if (pivots.size() == classes.size()) break;
    GradedDims w = v;
    if (--w[p] == 0) w.erase(p);
    const ObjClass sphere = simple(dim, -p);
    for (const auto& b : objects_with_dims(w)) {
      for (bool sphere_first : {true, false}) {
        if (pivots.size() == classes.size()) break;
        const ObjClass& left = sphere_first ? sphere : b;
        const ObjClass& right = sphere_first ? b : sphere;
        std::vector<Rational> a(classes.size());
        NCPolynomial rhs = express_rec(left, q, depth + 1, memo) * express_rec(right, q, depth + 1, memo);
        for (const auto& [z, c] : basis_product(left, right, q)) {
          auto it = col.find(z);
          if (it != col.end()) {
            a[it->second] += c;
          } else {
            if (z.total_dim() >= n) throw InternalError("product term " + z.str() + " is not of lower dimension");
            rhs -= RationalFunctionV(c) * express_rec(z, q, depth + 1, memo);
          }
        }
        add_equation(std::move(a), std::move(rhs));
      }
    }
  }
  if (pivots.size() != classes.size())
    throw InternalError("products of smaller classes do not determine every class of this dimension");
  for (std::size_t r = 0; r < pivots.size(); ++r) memo[{q, classes[pivot_col[r]]}] = pivots[r].rhs;
}

inline NCPolynomial express_rec(const ObjClass& x, long q, int depth, ExpressMemo& memo) {
  if (x.is_zero()) return NCPolynomial::constant(RationalFunctionV(1));
  auto it = memo.find({q, x});
  if (it != memo.end()) return it->second;
  // every recursive call lowers the total dimension
  if (depth > 2 * x.total_dim() + 2) throw NonTerminating("sphere expression recursion exceeded its depth bound");
  const GradedDims v = graded_dims(x);
  if (v.size() == 1) {
    // [S]^m = [m]_q! [S^m], [m]_q! = prod_{i=1}^m (q^i - 1)/(q - 1)
    const int p = v.begin()->first, m = v.begin()->second;
    NCPolynomial power = NCPolynomial::constant(RationalFunctionV(1));
    RationalFunctionV scale(1);
    for (int i = 1; i <= m; ++i) {
      power = power * gen(sphere_symbol(p));
      scale *= (RationalFunctionV::q() - RationalFunctionV(1)) / (RationalFunctionV::q_pow(i) - RationalFunctionV(1));
    }
    NCPolynomial result = scale * power;
    memo.emplace(std::make_pair(q, x), result);
    return result;
  }
  solve_dims(v, q, depth, memo);
  return memo.at({q, x});
}

}  // namespace detail

/// Polynomial in the sphere generators x_i, y_i whose image is [X] (d = 3).
/// Classes are solved for one graded dimension vector at a time from products
/// of a sphere with classes of one dimension less. Memoized.
inline NCPolynomial express_in_spheres(const ObjClass& x, long q) {
  if (x.dim().d != 3) throw Unsupported("sphere expressions are implemented for d = 3 only");
  PrimeField check(q);
  static std::mutex mu;
  static detail::ExpressMemo memo;
  std::lock_guard lock(mu);
  return detail::express_rec(x, q, 0, memo);
}

}  // namespace spherahall
