#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spherahall/matrix.hpp"
#include "spherahall/object.hpp"

namespace spherahall {

using QMatrix = FieldMatrix<RationalField>;

/// Finite-dimensional graded module over k[t], t of degree 1 - d, given by
/// its graded dimensions and the action of t between graded pieces. For d = 0
/// the algebra is k x k instead: two graded dimension maps and no operator.
struct GradedTModule {
  SphereDim dim;
  std::map<int, int> dims;          ///< degree -> dimension (branch 1 for d = 0)
  std::map<int, int> dims_branch2;  ///< d = 0 only
  std::map<int, QMatrix> t;         ///< degree i -> matrix of t: M^i -> M^{i + (1-d)}

  int dim_at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  int dim2_at(int degree) const {
    auto it = dims_branch2.find(degree);
    return it == dims_branch2.end() ? 0 : it->second;
  }
  int total_dim() const {
    int n = 0;
    for (auto [_, k] : dims) n += k;
    for (auto [_, k] : dims_branch2) n += k;
    return n;
  }

  /// t restricted to degree i, zero when not stored.
  QMatrix t_at(int degree) const {
    auto it = t.find(degree);
    if (it != t.end()) return it->second;
    return QMatrix(RationalField{}, static_cast<std::size_t>(dim_at(degree + dim.t_degree())),
                   static_cast<std::size_t>(dim_at(degree)));
  }

  /// t^n : M^g -> M^{g + n(1-d)}.
  QMatrix t_power(int g, int n) const {
    const int delta = dim.t_degree();
    QMatrix acc = QMatrix::identity(RationalField{}, static_cast<std::size_t>(dim_at(g)));
    for (int k = 0; k < n; ++k) acc = t_at(g + k * delta) * acc;
    return acc;
  }

  /// Shape and nilpotency checks.
  void validate() const {
    const int delta = dim.t_degree();
    for (const auto& [i, m] : t) {
      if (m.rows() != static_cast<std::size_t>(dim_at(i + delta)) ||
          m.cols() != static_cast<std::size_t>(dim_at(i)))
        throw InvalidArgument("t matrix shape does not match graded dimensions");
    }
    if (dim.d == 0) {
      if (!t.empty()) throw InvalidArgument("d = 0 modules carry no operator t");
      return;
    }
    if (!dims_branch2.empty()) throw InvalidArgument("branch 2 only exists for d = 0");
    int n = total_dim();
    for (const auto& [g, k] : dims)
      if (k > 0 && !t_power(g, n).is_zero()) throw InvalidArgument("t is not nilpotent");
  }
};

/// Total homology of X as a graded module (the functor F = H*).
inline GradedTModule f_image(const ObjClass& x) {
  GradedTModule m;
  m.dim = x.dim();
  const int delta = x.dim().t_degree();
  if (x.dim().d == 0) {
    for (const auto& l : x.summands()) {
      auto& target = (l.branch == 1) ? m.dims : m.dims_branch2;
      ++target[generator_degree(l)];
    }
    return m;
  }
  for (const auto& l : x.summands())
    for (int k = 0; k < l.len; ++k) ++m.dims[generator_degree(l) + k * delta];
  std::map<int, int> next;  // next free basis index per degree
  for (const auto& l : x.summands()) {
    int prev_index = -1;
    for (int k = 0; k < l.len; ++k) {
      int deg = generator_degree(l) + k * delta;
      int idx = next[deg]++;
      if (prev_index >= 0) {
        int from = deg - delta;
        auto it = m.t.find(from);
        if (it == m.t.end())
          it = m.t.emplace(from, QMatrix(RationalField{}, static_cast<std::size_t>(m.dims[deg]),
                                         static_cast<std::size_t>(m.dims[from])))
                   .first;
        it->second(static_cast<std::size_t>(idx), static_cast<std::size_t>(prev_index)) = Rational(1);
      }
      prev_index = idx;
    }
  }
  return m;
}

/// Inverse of f_image up to graded isomorphism: reads off the graded Jordan
/// type of t from ranks of its powers.
inline ObjClass decompose(const GradedTModule& m) {
  std::vector<IndecLabel> labels;
  if (m.dim.d == 0) {
    for (auto [g, k] : m.dims)
      for (int i = 0; i < k; ++i) labels.push_back({-g, 1, 1});
    for (auto [g, k] : m.dims_branch2)
      for (int i = 0; i < k; ++i) labels.push_back({-g, 1, 2});
    return ObjClass(m.dim, std::move(labels));
  }
  const int delta = m.dim.t_degree();
  const int total = m.total_dim();
  // strings generated in degree g of length >= n:
  //   rank(t^{n-1} on M^g) - rank(t^n on M^{g - delta})
  auto at_least = [&](int g, int n) {
    long a = static_cast<long>(m.t_power(g, n - 1).rank());
    long b = static_cast<long>(m.t_power(g - delta, n).rank());
    return a - b;
  };
  for (const auto& [g, k] : m.dims) {
    if (k == 0) continue;
    for (int n = 1; n <= total; ++n) {
      long exact = at_least(g, n) - at_least(g, n + 1);
      for (long i = 0; i < exact; ++i) labels.push_back({-g, n, 1});
    }
  }
  return ObjClass(m.dim, std::move(labels));
}

/// dim_k of degree-preserving module maps M -> N commuting with t.
inline int hom_dim_graded(const GradedTModule& m, const GradedTModule& n) {
  if (m.dim != n.dim) throw InvalidArgument("hom between modules over different d");
  if (m.dim.d == 0) {
    int total = 0;
    for (auto [g, k] : m.dims) total += k * n.dim_at(g);
    for (auto [g, k] : m.dims_branch2) total += k * n.dim2_at(g);
    return total;
  }
  const int delta = m.dim.t_degree();
  // One block of unknowns per degree present in both modules.
  std::map<int, std::size_t> offset;
  std::size_t nvars = 0;
  for (auto [g, k] : m.dims) {
    int nk = n.dim_at(g);
    if (k == 0 || nk == 0) continue;
    offset[g] = nvars;
    nvars += static_cast<std::size_t>(k * nk);
  }
  if (nvars == 0) return 0;
  auto var = [&](int g, std::size_t row, std::size_t col) {
    return offset.at(g) + row * static_cast<std::size_t>(m.dim_at(g)) + col;
  };
  // Equations t_N phi_g - phi_{g+delta} t_M = 0, one block per degree g of M.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (auto [g, k] : m.dims) {
    if (k == 0) continue;
    int h = g + delta;
    int rows_here = n.dim_at(h);
    if (rows_here == 0) continue;
    QMatrix tn = n.t_at(g);
    QMatrix tm = m.t_at(g);
    bool has_phi_g = offset.count(g) > 0;
    bool has_phi_h = offset.count(h) > 0;
    for (int a = 0; a < rows_here; ++a)
      for (int b = 0; b < k; ++b) {
        std::vector<std::pair<std::size_t, Rational>> eq;
        if (has_phi_g)
          for (int c = 0; c < n.dim_at(g); ++c) {
            const Rational& coef = tn(static_cast<std::size_t>(a), static_cast<std::size_t>(c));
            if (!coef.is_zero())
              eq.emplace_back(var(g, static_cast<std::size_t>(c), static_cast<std::size_t>(b)), coef);
          }
        if (has_phi_h)
          for (int c = 0; c < m.dim_at(h); ++c) {
            const Rational& coef = tm(static_cast<std::size_t>(c), static_cast<std::size_t>(b));
            if (!coef.is_zero())
              eq.emplace_back(var(h, static_cast<std::size_t>(a), static_cast<std::size_t>(c)), -coef);
          }
        if (!eq.empty()) rows.push_back(std::move(eq));
      }
  }
  QMatrix sys(RationalField{}, rows.size(), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) sys(r, c) = sys(r, c) + v;
  return static_cast<int>(nvars - sys.rank());
}

/// dim Ext^1(M, N) from the resolution 0 -> k[t]<g + n(1-d)> -> k[t]<g> -> M -> 0
/// of each cyclic summand (generator degree g, length n) of M.
inline int ext1_dim_graded(const GradedTModule& m, const GradedTModule& n) {
  if (m.dim != n.dim) throw InvalidArgument("ext between modules over different d");
  if (m.dim.d == 0) return 0;
  const int delta = m.dim.t_degree();
  int total = 0;
  const ObjClass parts = decompose(m);
  for (const auto& l : parts.summands()) {
    int g = generator_degree(l);
    int target = g + l.len * delta;
    total += n.dim_at(target) - static_cast<int>(n.t_power(g, l.len).rank());
  }
  return total;
}

}  // namespace spherahall
