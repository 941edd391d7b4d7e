#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "spherahall/graded_module.hpp"
#include "spherahall/rational.hpp"

namespace spherahall {

namespace detail {

// dim Hom_T(A, Σ^k B) for indecomposables, keyed by (d, lenA, branchA, lenB,
// branchB, relative shift); invariant under a common suspension.
using IndecHomKey = std::tuple<int, int, int, int, int, int>;

inline int indec_hom_dim(SphereDim dim, const IndecLabel& a, const IndecLabel& b, int k) {
  static std::mutex mu;
  static std::map<IndecHomKey, int> memo;
  const int rel = b.shift + k - a.shift;
  IndecHomKey key{dim.d, a.len, a.branch, b.len, b.branch, rel};
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  ObjClass x(dim, {IndecLabel{0, a.len, a.branch}});
  ObjClass y(dim, {IndecLabel{rel, b.len, b.branch}});
  GradedTModule fx = f_image(x);
  GradedTModule fy = f_image(y);
  int value = hom_dim_graded(fx, fy) + ext1_dim_graded(f_image(shift_obj(x, 1)), fy);
  std::lock_guard lock(mu);
  memo.emplace(key, value);
  return value;
}

}  // namespace detail

/// dim_k Hom_T(X, Σ^k Y) = dim Hom_gr(FX, FY') + dim Ext^1(FX[1], FY'), Y' = Σ^k Y.
inline int hom_dim_T(const ObjClass& x, const ObjClass& y, int k) {
  if (x.dim() != y.dim()) throw InvalidArgument("hom between objects over different d");
  int total = 0;
  for (const auto& [a, ma] : x.multiplicities())
    for (const auto& [b, mb] : y.multiplicities())
      total += ma * mb * detail::indec_hom_dim(x.dim(), a, b, k);
  return total;
}

/// Same quantity computed on the whole graded modules, without the
/// indecomposable-pair decomposition.
inline int hom_dim_T_direct(const ObjClass& x, const ObjClass& y, int k) {
  ObjClass y_shift = shift_obj(y, k);
  GradedTModule fy = f_image(y_shift);
  return hom_dim_graded(f_image(x), fy) + ext1_dim_graded(f_image(shift_obj(x, 1)), fy);
}

/// |GL_m(F_q)|.
inline BigInt gl_order(int m, long q) {
  BigInt r = 1;
  BigInt qm = big_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(m));
  for (int k = 0; k < m; ++k) r *= qm - big_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  return r;
}

/// |Aut(X)| over F_q. End(X) modulo its radical is a product of matrix rings
/// M_{m_c}(k), one per distinct indecomposable c of multiplicity m_c.
inline BigInt aut_count(const ObjClass& x, long q) {
  int e = hom_dim_T(x, x, 0);
  BigInt r = 1;
  int semisimple_dim = 0;
  for (const auto& [_, m] : x.multiplicities()) {
    r *= gl_order(m, q);
    semisimple_dim += m * m;
  }
  return r * big_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(e - semisimple_dim));
}

/// i0 with Hom_T(X, Σ^{-i} Y) = 0 for every i >= i0.
inline int neg_hom_bound(const ObjClass& x, const ObjClass& y) {
  if (x.dim() != y.dim()) throw InvalidArgument("objects over different d");
  if (x.is_zero() || y.is_zero()) return 0;
  const SphereDim dim = x.dim();
  const int reach = std::abs(dim.t_degree());
  int hi_x = std::numeric_limits<int>::min();
  int lo_y = std::numeric_limits<int>::max();
  for (const auto& l : x.summands()) hi_x = std::max(hi_x, degree_span(dim, l).second);
  for (const auto& l : y.summands()) lo_y = std::min(lo_y, degree_span(dim, l).first);
  // Σ^{-i} Y lives in degrees >= lo_y + i; graded maps need a common degree
  // and extension classes reach at most one t-step plus one degree beyond FX.
  int bound = std::max(0, hi_x - lo_y + reach + 2);
  for (int i = bound; i <= bound + reach + 2; ++i)
    if (hom_dim_T(x, y, -i) != 0)
      throw InternalError("nonzero Hom(X, Σ^-i Y) past the computed vanishing bound");
  return bound;
}

}  // namespace spherahall
