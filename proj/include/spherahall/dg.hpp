#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "spherahall/category.hpp"
#include "spherahall/fp_poly.hpp"
#include "spherahall/matrix.hpp"
#include "spherahall/object.hpp"
#include "spherahall/rational.hpp"

namespace spherahall {

/// Semifree right dg-module over Γ = F_p[t] (t of degree 1 - d). Column j of
/// the differential holds d(g_j) = Σ_i g_i · diff(i, j). The generators are
/// ordered so that the differential is strictly lower triangular.
/// For d = 0 the ring is F_p x F_p: every entry is a constant and generators
/// only interact within their branch.
struct SemifreeDgModule {
  SphereDim dim;
  long p = 2;
  std::vector<int> degrees;
  std::vector<int> branches;
  PolyMatrix diff;

  std::size_t size() const { return degrees.size(); }

  void validate() const {
    const std::size_t n = size();
    if (branches.size() != n || diff.rows != n || diff.cols != n)
      throw InvalidArgument("semifree module shape mismatch");
    const int delta = dim.t_degree();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const FpPoly& e = diff(i, j);
        if (e.empty()) continue;
        if (i <= j) throw InvalidArgument("differential is not strictly lower triangular");
        if (dim.d == 0) {
          if (e.size() != 1 || branches[i] != branches[j] || degrees[i] != degrees[j] + 1)
            throw InvalidArgument("inhomogeneous differential entry");
          continue;
        }
        for (std::size_t m = 0; m < e.size(); ++m)
          if (e[m] != 0 && degrees[i] + static_cast<int>(m) * delta != degrees[j] + 1)
            throw InvalidArgument("inhomogeneous differential entry");
      }
    PrimeField f(p);
    if (!mat_mul(f, diff, diff).is_zero()) throw InvalidArgument("differential does not square to zero");
  }
};

/// Degree-zero map of semifree modules; map(i, j) is the coefficient of target
/// generator i in the image of source generator j.
struct DgMorphism {
  std::shared_ptr<const SemifreeDgModule> source;
  std::shared_ptr<const SemifreeDgModule> target;
  PolyMatrix map;

  bool is_chain_map() const {
    PrimeField f(source->p);
    return mat_mul(f, target->diff, map) == mat_mul(f, map, source->diff);
  }
};

namespace detail {

inline std::atomic<std::uint64_t>& ceiling_ref() {
  static std::atomic<std::uint64_t> c{1'000'000};
  return c;
}

inline std::atomic<unsigned>& workers_ref() {
  static std::atomic<unsigned> w{std::max(1u, std::thread::hardware_concurrency())};
  return w;
}

}  // namespace detail

/// Largest hom-space cardinality the oracle will enumerate.
inline std::uint64_t enumeration_ceiling() { return detail::ceiling_ref().load(); }
inline void set_enumeration_ceiling(std::uint64_t c) { detail::ceiling_ref().store(c); }

/// Number of threads used to classify cones.
inline unsigned oracle_workers() { return detail::workers_ref().load(); }
inline void set_oracle_workers(unsigned w) { detail::workers_ref().store(std::max(1u, w)); }

/// Two generators f, e per summand Σ^s(Γ/t^n) with d(f) = t^n e; one generator
/// with zero differential per summand when d = 0.
inline SemifreeDgModule semifree_model(const ObjClass& x, long p) {
  SemifreeDgModule m;
  m.dim = x.dim();
  m.p = p;
  PrimeField f(p);
  const int delta = x.dim().t_degree();
  if (x.dim().d == 0) {
    for (const auto& l : x.summands()) {
      m.degrees.push_back(generator_degree(l));
      m.branches.push_back(l.branch);
    }
    m.diff = PolyMatrix(m.size(), m.size());
    return m;
  }
  for (const auto& l : x.summands()) {
    int e = generator_degree(l);
    m.degrees.push_back(e + l.len * delta - 1);
    m.degrees.push_back(e);
  }
  m.branches.assign(m.degrees.size(), 1);
  m.diff = PolyMatrix(m.size(), m.size());
  std::size_t k = 0;
  for (const auto& l : x.summands()) {
    m.diff(k + 1, k) = fppoly::monomial(f, 1, l.len);
    k += 2;
  }
  return m;
}

/// Generators of ΣY followed by those of Z; differential [[-d_Y, 0], [f, d_Z]].
inline SemifreeDgModule cone_of(const DgMorphism& f) {
  const SemifreeDgModule& y = *f.source;
  const SemifreeDgModule& z = *f.target;
  PrimeField fld(y.p);
  SemifreeDgModule c;
  c.dim = y.dim;
  c.p = y.p;
  for (std::size_t j = 0; j < y.size(); ++j) {
    c.degrees.push_back(y.degrees[j] - 1);
    c.branches.push_back(y.branches[j]);
  }
  c.degrees.insert(c.degrees.end(), z.degrees.begin(), z.degrees.end());
  c.branches.insert(c.branches.end(), z.branches.begin(), z.branches.end());
  const std::size_t ny = y.size();
  c.diff = PolyMatrix(c.size(), c.size());
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j) c.diff(i, j) = fppoly::neg(fld, y.diff(i, j));
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < ny; ++j) c.diff(ny + i, j) = f.map(i, j);
    for (std::size_t j = 0; j < z.size(); ++j) c.diff(ny + i, ny + j) = z.diff(i, j);
  }
  return c;
}

namespace detail {

// Diagonalizes w over F_p[t] in place by unimodular row and column operations
// (pivot of least degree, Euclidean reduction). Optionally records the inverse
// of the accumulated column transform and permutes degree labels. Returns the
// rank; pivots end up at (k, k).
struct Diagonalizer {
  const PrimeField& f;
  PolyMatrix& w;
  PolyMatrix* vinv = nullptr;
  std::vector<int>* coldeg = nullptr;
  std::vector<int>* rowdeg = nullptr;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < w.cols; ++j) std::swap(w(a, j), w(b, j));
    if (rowdeg) std::swap((*rowdeg)[a], (*rowdeg)[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < w.rows; ++i) std::swap(w(i, a), w(i, b));
    if (vinv)
      for (std::size_t j = 0; j < vinv->cols; ++j) std::swap((*vinv)(a, j), (*vinv)(b, j));
    if (coldeg) std::swap((*coldeg)[a], (*coldeg)[b]);
  }
  // row dst += m * row src
  void row_add(std::size_t dst, std::size_t src, const FpPoly& m) {
    for (std::size_t j = 0; j < w.cols; ++j)
      if (!w(src, j).empty()) w(dst, j) = fppoly::add(f, w(dst, j), fppoly::mul(f, m, w(src, j)));
  }
  // col dst += m * col src
  void col_add(std::size_t dst, std::size_t src, const FpPoly& m) {
    for (std::size_t i = 0; i < w.rows; ++i)
      if (!w(i, src).empty()) w(i, dst) = fppoly::add(f, w(i, dst), fppoly::mul(f, m, w(i, src)));
    if (vinv)
      for (std::size_t j = 0; j < vinv->cols; ++j)
        if (!(*vinv)(dst, j).empty())
          (*vinv)(src, j) = fppoly::sub(f, (*vinv)(src, j), fppoly::mul(f, m, (*vinv)(dst, j)));
  }

  std::size_t run() {
    const std::size_t lim = std::min(w.rows, w.cols);
    std::size_t k = 0;
    for (; k < lim; ++k) {
      int best = -1;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = k; i < w.rows; ++i)
        for (std::size_t j = k; j < w.cols; ++j)
          if (!w(i, j).empty() && (best < 0 || fppoly::degree(w(i, j)) < best)) {
            best = fppoly::degree(w(i, j));
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      swap_rows(k, bi);
      swap_cols(k, bj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = k + 1; i < w.rows; ++i) {
          if (w(i, k).empty()) continue;
          auto [quo, rem] = fppoly::divmod(f, w(i, k), w(k, k));
          row_add(i, k, fppoly::neg(f, quo));
          if (!rem.empty()) clean = false;
        }
        for (std::size_t j = k + 1; j < w.cols; ++j) {
          if (w(k, j).empty()) continue;
          auto [quo, rem] = fppoly::divmod(f, w(k, j), w(k, k));
          col_add(j, k, fppoly::neg(f, quo));
          if (!rem.empty()) clean = false;
        }
        if (clean) break;
        int low = -1;
        std::size_t li = 0;
        bool in_col = true;
        for (std::size_t i = k + 1; i < w.rows; ++i)
          if (!w(i, k).empty() && (low < 0 || fppoly::degree(w(i, k)) < low)) {
            low = fppoly::degree(w(i, k));
            li = i;
            in_col = true;
          }
        for (std::size_t j = k + 1; j < w.cols; ++j)
          if (!w(k, j).empty() && (low < 0 || fppoly::degree(w(k, j)) < low)) {
            low = fppoly::degree(w(k, j));
            li = j;
            in_col = false;
          }
        if (low < 0) break;
        if (in_col) swap_rows(k, li);
        else swap_cols(k, li);
      }
    }
    return k;
  }
};

inline ObjClass homology_class_semisimple(const SemifreeDgModule& pm) {
  PrimeField f(pm.p);
  std::vector<IndecLabel> labels;
  for (int b : {1, 2}) {
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < pm.size(); ++i)
      if (pm.branches[i] == b) by_degree[pm.degrees[i]].push_back(i);
    // rank of the differential leaving each degree
    std::map<int, std::size_t> out_rank;
    for (const auto& [g, src] : by_degree) {
      auto it = by_degree.find(g + 1);
      if (it == by_degree.end()) continue;
      FieldMatrix<PrimeField> m(f, it->second.size(), src.size());
      for (std::size_t r = 0; r < it->second.size(); ++r)
        for (std::size_t c = 0; c < src.size(); ++c) {
          const FpPoly& e = pm.diff(it->second[r], src[c]);
          m(r, c) = e.empty() ? 0u : e[0];
        }
      out_rank[g] = m.rank();
    }
    for (const auto& [g, gens] : by_degree) {
      long h = static_cast<long>(gens.size()) - static_cast<long>(out_rank[g]);
      auto prev = out_rank.find(g - 1);
      if (prev != out_rank.end()) h -= static_cast<long>(prev->second);
      for (long i = 0; i < h; ++i) labels.push_back({-g, 1, b});
    }
  }
  return ObjClass(pm.dim, std::move(labels));
}

}  // namespace detail

/// Isomorphism class of a semifree module with finite-dimensional homology.
/// Kernel of d from a diagonal form of d, then the image presented on that
/// kernel basis is diagonalized; each diagonal entry c·t^a is one summand
/// Γ/t^a generated in the degree of its kernel vector.
inline ObjClass homology_class(const SemifreeDgModule& pm) {
  if (pm.dim.d == 0) return detail::homology_class_semisimple(pm);
  PrimeField f(pm.p);
  const std::size_t n = pm.size();
  PolyMatrix w = pm.diff;
  PolyMatrix vinv(n, n);
  for (std::size_t i = 0; i < n; ++i) vinv(i, i) = {1};
  std::vector<int> coldeg = pm.degrees;
  detail::Diagonalizer a{f, w, &vinv, &coldeg, nullptr};
  const std::size_t rho = a.run();

  PolyMatrix image = mat_mul(f, vinv, pm.diff);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!image(i, j).empty()) throw InternalError("image of d not contained in its kernel");
  PolyMatrix e(n - rho, n);
  for (std::size_t i = rho; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i - rho, j) = image(i, j);
  std::vector<int> rowdeg(coldeg.begin() + static_cast<long>(rho), coldeg.end());

  detail::Diagonalizer b{f, e, nullptr, nullptr, &rowdeg};
  const std::size_t r = b.run();
  if (r < e.rows) throw InfiniteHomology("homology has a free summand over the polynomial ring");
  std::vector<IndecLabel> labels;
  for (std::size_t i = 0; i < r; ++i) {
    const FpPoly& entry = e(i, i);
    if (!fppoly::is_monomial(entry)) throw InternalError("homology torsion is not t-primary");
    int len = fppoly::degree(entry);
    if (len >= 1) labels.push_back({-rowdeg[i], len, 1});
  }
  return ObjClass(pm.dim, std::move(labels));
}

/// Truncation bound for polynomial entries.
inline int truncation_bound(const ObjClass& y, const ObjClass& z) {
  return 2 * (y.total_dim() + z.total_dim()) + std::abs(1 - y.dim().d) + 2;
}

namespace detail {

struct MapVar {
  std::size_t i, j;
  int m;
};

// Monomial positions (i, j, t^m) allowed in a map P -> Q of degree `deg`.
inline std::vector<MapVar> map_vars(const SemifreeDgModule& p, const SemifreeDgModule& q, int deg, int beta) {
  std::vector<MapVar> vars;
  const int delta = p.dim.t_degree();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (q.branches[i] != p.branches[j]) continue;
      const int gap = p.degrees[j] + deg - q.degrees[i];  // = m * delta
      if (p.dim.d == 0) {
        if (gap == 0) vars.push_back({i, j, 0});
      } else if (delta == 0) {
        if (gap == 0)
          for (int m = 0; m < beta; ++m) vars.push_back({i, j, m});
      } else if (gap % delta == 0 && gap / delta >= 0) {
        vars.push_back({i, j, gap / delta});
      }
    }
  return vars;
}

using Coord = std::tuple<std::size_t, std::size_t, int>;

// Image of the monomial map (i, j, t^m) under g -> d_Q g - sign * g d_P, as
// sparse coordinates of the result.
inline void differential_of_var(const PrimeField& f, const SemifreeDgModule& p, const SemifreeDgModule& q,
                                const MapVar& v, std::uint32_t sign, std::map<Coord, std::uint32_t>& out) {
  for (std::size_t r = 0; r < q.size(); ++r) {
    const FpPoly& e = q.diff(r, v.i);
    for (std::size_t a = 0; a < e.size(); ++a)
      if (e[a]) {
        auto& slot = out[{r, v.j, v.m + static_cast<int>(a)}];
        slot = f.add(slot, e[a]);
      }
  }
  for (std::size_t c = 0; c < p.size(); ++c) {
    const FpPoly& e = p.diff(v.j, c);
    for (std::size_t a = 0; a < e.size(); ++a)
      if (e[a]) {
        auto& slot = out[{v.i, c, v.m + static_cast<int>(a)}];
        slot = f.sub(slot, f.mul(sign, e[a]));
      }
  }
}

struct HomComputation {
  std::vector<PolyMatrix> basis;
};

inline HomComputation hom_basis_at(const SemifreeDgModule& p, const SemifreeDgModule& q, int beta) {
  PrimeField f(p.p);
  const auto phi = map_vars(p, q, 0, beta);
  const auto hv = map_vars(p, q, -1, beta);
  std::map<Coord, std::size_t> phi_index;
  for (std::size_t k = 0; k < phi.size(); ++k) phi_index[{phi[k].i, phi[k].j, phi[k].m}] = k;

  // closed maps: kernel of phi -> d_Q phi - phi d_P
  std::map<Coord, std::size_t> out_rows;
  std::vector<std::map<Coord, std::uint32_t>> cols(phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    differential_of_var(f, p, q, phi[k], 1, cols[k]);
    for (const auto& [c, v] : cols[k])
      if (v) out_rows.emplace(c, out_rows.size());
  }
  FieldMatrix<PrimeField> closed(f, out_rows.size(), phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k)
    for (const auto& [c, v] : cols[k])
      if (v) closed(out_rows.at(c), k) = v;
  auto cycles = closed.nullspace();

  // boundaries d_Q h + h d_P with every coefficient below the truncation
  std::map<Coord, std::size_t> high_rows;
  std::vector<std::map<Coord, std::uint32_t>> hcols(hv.size());
  for (std::size_t k = 0; k < hv.size(); ++k) {
    differential_of_var(f, p, q, hv[k], f.neg(1), hcols[k]);
    for (const auto& [c, v] : hcols[k])
      if (v && !phi_index.count(c)) high_rows.emplace(c, high_rows.size());
  }
  std::vector<std::vector<std::uint32_t>> admissible;
  if (high_rows.empty()) {
    for (std::size_t k = 0; k < hv.size(); ++k) {
      std::vector<std::uint32_t> e(hv.size(), 0);
      e[k] = 1;
      admissible.push_back(std::move(e));
    }
  } else {
    FieldMatrix<PrimeField> high(f, high_rows.size(), hv.size());
    for (std::size_t k = 0; k < hv.size(); ++k)
      for (const auto& [c, v] : hcols[k]) {
        auto it = high_rows.find(c);
        if (v && it != high_rows.end()) high(it->second, k) = v;
      }
    admissible = high.nullspace();
  }
  SpanBuilder<PrimeField> span(f, phi.size());
  for (const auto& h : admissible) {
    std::vector<std::uint32_t> b(phi.size(), 0);
    for (std::size_t k = 0; k < hv.size(); ++k) {
      if (!h[k]) continue;
      for (const auto& [c, v] : hcols[k]) {
        auto it = phi_index.find(c);
        if (v && it != phi_index.end()) b[it->second] = f.add(b[it->second], f.mul(h[k], v));
      }
    }
    span.insert(std::move(b));
  }
  HomComputation out;
  for (const auto& z : cycles) {
    if (!span.insert(z)) continue;
    PolyMatrix m(q.size(), p.size());
    for (std::size_t k = 0; k < phi.size(); ++k)
      if (z[k]) m(phi[k].i, phi[k].j) = fppoly::add(f, m(phi[k].i, phi[k].j), fppoly::monomial(f, z[k], phi[k].m));
    out.basis.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Basis of Hom_T(Y, Σ^k Z) = H^0 Hom(P_Y, P_{Σ^k Z}) over F_q, as chain maps
/// modulo homotopy. Only d = 1 needs polynomial truncation; the dimension is
/// re-checked one degree higher.
inline std::vector<DgMorphism> hom_basis(const ObjClass& y, const ObjClass& z, int k, long q) {
  if (y.dim() != z.dim()) throw InvalidArgument("hom between objects over different d");
  auto src = std::make_shared<const SemifreeDgModule>(semifree_model(y, q));
  auto tgt = std::make_shared<const SemifreeDgModule>(semifree_model(shift_obj(z, k), q));
  const int beta = truncation_bound(y, z);
  auto result = detail::hom_basis_at(*src, *tgt, beta);
  if (y.dim().t_degree() == 0) {
    auto again = detail::hom_basis_at(*src, *tgt, beta + 1);
    if (again.basis.size() != result.basis.size())
      throw TruncationUnstable("hom dimension changed when the truncation bound was raised");
  }
  std::vector<DgMorphism> out;
  for (auto& m : result.basis) out.push_back({src, tgt, std::move(m)});
  return out;
}

namespace detail {

inline std::uint64_t checked_power(long q, std::size_t n) {
  const std::uint64_t ceiling = enumeration_ceiling();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > ceiling / static_cast<std::uint64_t>(q))
      throw EnumerationTooLarge("hom space of size " + std::to_string(q) + "^" + std::to_string(n) +
                                " exceeds the enumeration ceiling");
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

// Visits every F_q-combination of the basis with index in [begin, end).
template <class Visit>
void enumerate_span(const std::vector<DgMorphism>& basis, const SemifreeDgModule& src,
                    const SemifreeDgModule& tgt, long q, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  PrimeField f(q);
  const std::size_t n = basis.size();
  std::vector<std::uint32_t> digit(n, 0);
  std::uint64_t rest = begin;
  for (std::size_t i = 0; i < n; ++i) {
    digit[i] = static_cast<std::uint32_t>(rest % static_cast<std::uint64_t>(q));
    rest /= static_cast<std::uint64_t>(q);
  }
  PolyMatrix cur(tgt.size(), src.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = 0; e < cur.a.size(); ++e)
      cur.a[e] = fppoly::add(f, cur.a[e], fppoly::scale(f, basis[i].map.a[e], digit[i]));
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    visit(cur);
    // odometer step: each changed digit moves by +1 mod q, i.e. adds its basis map
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t e = 0; e < cur.a.size(); ++e)
        if (!basis[i].map.a[e].empty()) cur.a[e] = fppoly::add(f, cur.a[e], basis[i].map.a[e]);
      digit[i] = (digit[i] + 1) % static_cast<std::uint32_t>(q);
      if (digit[i] != 0) break;
    }
  }
}

// Number of m x n matrices of rank r over F_q.
inline BigInt rank_count(int m, int n, int r, long q) {
  BigInt num = 1, den = 1;
  auto uq = static_cast<unsigned long>(q);
  for (int i = 0; i < r; ++i) {
    BigInt qi = big_pow(uq, static_cast<unsigned long>(i));
    num *= (big_pow(uq, static_cast<unsigned long>(m)) - qi) * (big_pow(uq, static_cast<unsigned long>(n)) - qi);
    den *= big_pow(uq, static_cast<unsigned long>(r)) - qi;
  }
  return num / den;
}

// Cone classes of all maps Y -> Z for d = 0. A map is a family of matrices,
// one per shifted simple; only their ranks matter.
inline std::map<ObjClass, BigInt> cone_distribution_semisimple(const ObjClass& y, const ObjClass& z, long q) {
  std::map<std::pair<int, int>, std::pair<int, int>> comp;  // (shift, branch) -> (mult in Y, mult in Z)
  for (const auto& l : y.summands()) ++comp[{l.shift, l.branch}].first;
  for (const auto& l : z.summands()) ++comp[{l.shift, l.branch}].second;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> items(comp.begin(), comp.end());
  std::map<ObjClass, BigInt> out;
  std::vector<int> rk(items.size(), 0);
  for (;;) {
    BigInt weight = 1;
    std::vector<IndecLabel> labels;
    for (std::size_t c = 0; c < items.size(); ++c) {
      auto [key, mults] = items[c];
      weight *= rank_count(mults.second, mults.first, rk[c], q);
      // Z-part keeps its cokernel; the kernel from Y moves up one shift
      for (int i = 0; i < mults.second - rk[c]; ++i) labels.push_back({key.first, 1, key.second});
      for (int i = 0; i < mults.first - rk[c]; ++i) labels.push_back({key.first + 1, 1, key.second});
    }
    out[ObjClass(y.dim(), std::move(labels))] += weight;
    std::size_t c = 0;
    for (; c < items.size(); ++c) {
      if (rk[c] < std::min(items[c].second.first, items[c].second.second)) {
        ++rk[c];
        break;
      }
      rk[c] = 0;
    }
    if (c == items.size()) break;
  }
  return out;
}

}  // namespace detail

namespace detail {

inline std::map<ObjClass, BigInt> enumerate_cones(const ObjClass& y, const ObjClass& z, long q) {
  auto basis = hom_basis(y, z, 0, q);
  const std::uint64_t total = checked_power(q, basis.size());
  auto src = std::make_shared<const SemifreeDgModule>(semifree_model(y, q));
  auto tgt = std::make_shared<const SemifreeDgModule>(semifree_model(z, q));
  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(oracle_workers(), std::max<std::uint64_t>(1, total / 256)));
  std::vector<std::map<ObjClass, std::uint64_t>> partial(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    DgMorphism g{src, tgt, {}};
    enumerate_span(basis, *src, *tgt, q, begin, end, [&](const PolyMatrix& m) {
      g.map = m;
      ++partial[w][homology_class(cone_of(g))];
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::map<ObjClass, BigInt> out;
  for (const auto& part : partial)
    for (const auto& [cls, n] : part) out[cls] += BigInt(static_cast<unsigned long>(n));
  return out;
}

}  // namespace detail

/// Counts of cone classes over the whole of Hom_T(Y, Z), by enumerating the
/// hom space. Memoized.
inline std::map<ObjClass, BigInt> cone_distribution_enumerated(const ObjClass& y, const ObjClass& z, long q) {
  if (y.dim() != z.dim()) throw InvalidArgument("objects over different d");
  static std::mutex mu;
  static std::map<std::tuple<long, ObjClass, ObjClass>, std::map<ObjClass, BigInt>> memo;
  auto key = std::make_tuple(q, y, z);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto dist = detail::enumerate_cones(y, z, q);
  std::lock_guard lock(mu);
  memo.emplace(key, dist);
  return dist;
}

/// Same counts, by closed-form rank counting when d = 0.
inline std::map<ObjClass, BigInt> cone_distribution(const ObjClass& y, const ObjClass& z, long q) {
  if (y.dim() != z.dim()) throw InvalidArgument("objects over different d");
  if (y.dim().d == 0) return detail::cone_distribution_semisimple(y, z, q);
  return cone_distribution_enumerated(y, z, q);
}

/// #{f ∈ Hom_T(Y, Z) : cone(f) ≅ X}.
inline BigInt count_cone_class(const ObjClass& y, const ObjClass& z, const ObjClass& x, long q) {
  if (y.dim() != z.dim() || y.dim() != x.dim()) throw InvalidArgument("objects over different d");
  auto dist = cone_distribution_enumerated(y, z, q);
  auto it = dist.find(x);
  return it == dist.end() ? BigInt(0) : it->second;
}

/// Invertible endomorphisms of X, by enumeration: φ is invertible exactly when
/// its cone is zero.
inline BigInt brute_aut_count(const ObjClass& x, long q) {
  return count_cone_class(x, x, ObjClass::zero(x.dim()), q);
}

}  // namespace spherahall
