#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "spherahall/hall.hpp"
#include "spherahall/laurent.hpp"
#include "spherahall/matrix.hpp"
#include "spherahall/ncpoly.hpp"

namespace spherahall {

struct Relation {
  std::string id;
  NCPolynomial poly;
};

/// Instantiated relations of the presentation for one d over an index window.
struct RelationSet {
  SphereDim dim;
  int lo = 0;
  int hi = 0;
  int blocks = 0;
  std::vector<Relation> relations;
};

namespace detail {

using RF = RationalFunctionV;

inline RF qp(int e) { return RF::q_pow(e); }
inline RF qq() { return RF::q(); }
inline RF one() { return RF(1); }
inline int sgn_pow(int e) { return (e % 2 == 0) ? 1 : -1; }  // (-1)^e

inline NCPolynomial w(std::initializer_list<GeneratorSymbol> gens, const RF& c = RF(1)) {
  return NCPolynomial::word(Word(gens), c);
}

inline std::string tag(const std::string& family, std::initializer_list<std::pair<const char*, int>> idx) {
  std::string s = family + "[";
  bool first = true;
  for (const auto& [name, v] : idx) {
    if (!first) s += ",";
    s += std::string(name) + "=" + std::to_string(v);
    first = false;
  }
  return s + "]";
}

// a^2 b - c1 a b a + c2 b a^2 and a b^2 - c1 b a b + c2 b^2 a
inline NCPolynomial serre_left(GeneratorSymbol a, GeneratorSymbol b, const RF& c1, const RF& c2) {
  return w({a, a, b}) - w({a, b, a}, c1) + w({b, a, a}, c2);
}
inline NCPolynomial serre_right(GeneratorSymbol a, GeneratorSymbol b, const RF& c1, const RF& c2) {
  return w({a, b, b}) - w({b, a, b}, c1) + w({b, b, a}, c2);
}

inline void relations_d3(int lo, int hi, std::vector<Relation>& out) {
  const RF c1 = one() + qp(-1), c2 = qp(-1);
  for (int i = lo; i <= hi; ++i) out.push_back({tag("(1)", {{"i", i}}), serre_left(gx(i), gx(i - 1), c1, c2)});
  for (int i = lo; i <= hi; ++i) out.push_back({tag("(2)", {{"i", i}}), serre_right(gx(i), gx(i - 1), c1, c2)});
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 2; j <= hi; ++j)
      out.push_back({tag("(3)", {{"i", i}, {"j", j}}), w({gx(i), gx(j)}) - w({gx(j), gx(i)})});
  for (int i = lo; i <= hi; ++i)
    out.push_back({tag("(4)", {{"i", i}}), w({gy(i), gx(i)}) - w({gx(i), gy(i)}, qq()) +
                                               NCPolynomial::constant(qq() / (qq() - one()))});
  for (int i = lo; i <= hi; ++i)
    out.push_back({tag("(5)", {{"i", i}}), w({gy(i), gx(i + 1)}) - w({gx(i + 1), gy(i)}, qp(-1)) -
                                               NCPolynomial::constant(one() / (qq() - one()))});
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      if (j != i && j != i + 1)
        out.push_back({tag("(6)", {{"i", i}, {"j", j}}), w({gy(i), gx(j)}) - w({gx(j), gy(i)})});
  for (int i = lo; i <= hi; ++i) out.push_back({tag("(7)", {{"i", i}}), serre_left(gy(i), gy(i - 1), c1, c2)});
  for (int i = lo; i <= hi; ++i) out.push_back({tag("(8)", {{"i", i}}), serre_right(gy(i), gy(i - 1), c1, c2)});
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 2; j <= hi; ++j)
      out.push_back({tag("(9)", {{"i", i}, {"j", j}}), w({gy(i), gy(j)}) - w({gy(j), gy(i)})});
}

// d >= 3 and d <= -1 share one shape; only the exponents differ.
inline void relations_generic(int d, int lo, int hi, std::vector<Relation>& out) {
  const int dp = d - 1;
  const bool positive = d >= 3;
  const int s = sgn_pow(d);  // (-1)^d = (-1)^{-d}
  const RF c1 = (qq() + one()) * (positive ? qp(s) : qp(-1 - s));
  const RF c2 = positive ? qp(1 + 2 * s) : qp(-1 - 2 * s);
  for (int i = lo; i <= hi; ++i) out.push_back({tag("(1)", {{"i", i}}), serre_left(gz(i), gz(i - dp), c1, c2)});
  for (int i = lo; i <= hi; ++i) out.push_back({tag("(2)", {{"i", i}}), serre_right(gz(i), gz(i - dp), c1, c2)});
  const RF tail = positive ? one() / (qq() - one()) : one() / (qp(s) * (qq() - one()));
  for (int i = lo; i <= hi; ++i)
    out.push_back({tag("(3)", {{"i", i}}),
                   w({gz(i), gz(i + 1)}) - w({gz(i + 1), gz(i)}, qp(-1)) - NCPolynomial::constant(tail)});
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      const int diff = i - j;
      const bool far = positive ? diff <= -d : diff < dp;
      const bool near = positive ? (-dp < diff && diff < -1) : (d <= diff && diff < -1);
      if (far)
        out.push_back({tag("(4)", {{"i", i}, {"j", j}}),
                       w({gz(i), gz(j)}) - w({gz(j), gz(i)}, qp(sgn_pow(j - i) * (1 + s)))});
      else if (near)
        out.push_back({tag("(5)", {{"i", i}, {"j", j}}),
                       w({gz(i), gz(j)}) - w({gz(j), gz(i)}, qp(sgn_pow(j - i)))});
    }
}

inline void relations_d2(int lo, int hi, std::vector<Relation>& out) {
  const RF c1 = (qq() + one()) * qq(), c2 = qp(3), low = qq() * (qq() + one());
  for (int i = lo; i <= hi; ++i)
    out.push_back({tag("(1)", {{"i", i}}), serre_left(gz(i), gz(i - 1), c1, c2) - w({gz(i)}, low)});
  for (int i = lo; i <= hi; ++i)
    out.push_back({tag("(2)", {{"i", i}}), serre_right(gz(i), gz(i - 1), c1, c2) - w({gz(i - 1)}, low)});
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 2; j <= hi; ++j)
      out.push_back({tag("(3)", {{"i", i}, {"j", j}}),
                     w({gz(i), gz(j)}) - w({gz(j), gz(i)}, qp(2 * sgn_pow(j - i)))});
}

}  // namespace detail

/// F^l_{j,j'} of the d = 1 presentation.
inline RationalFunctionV jordan_coefficient(int j, int jp, int l) {
  using detail::qp;
  using detail::qq;
  const int m = std::min(j, jp);
  if (l < 0 || l > m) throw InvalidArgument("coefficient index out of range");
  if (l == 0) return RationalFunctionV(1);
  if (l < m) return (qq() - RationalFunctionV(1)) / qp(l + 1);
  if (l == jp && jp < j) return qp(-jp);
  if (l == j && j < jp) return qp(-j);
  return RationalFunctionV(1) / (qp(j - 1) * (qq() - RationalFunctionV(1)));
}

/// z_{i,j} with z_{i,0} read as the empty factor.
inline NCPolynomial jordan_factor(int i, int j) {
  if (j == 0) return NCPolynomial::constant(RationalFunctionV(1));
  return gen(gzj(i, j));
}

namespace detail {

inline void relations_d1(int lo, int hi, int blocks, std::vector<Relation>& out) {
  std::vector<GeneratorSymbol> gens;
  for (int i = lo; i <= hi; ++i)
    for (int j = 1; j <= blocks; ++j) gens.push_back(gzj(i, j));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const int gap = gens[a].index - gens[b].index;
      if (gap == 1 || gap == -1) continue;
      out.push_back({tag("(1)", {{"i", gens[a].index}, {"j", gens[a].block}, {"i'", gens[b].index}, {"j'", gens[b].block}}),
                     w({gens[a], gens[b]}) - w({gens[b], gens[a]})});
    }
  for (int i = lo; i <= hi; ++i)
    for (int j = 1; j <= blocks; ++j)
      for (int jp = 1; jp <= blocks; ++jp) {
        NCPolynomial r = w({gzj(i, j), gzj(i + 1, jp)});
        for (int l = 0; l <= std::min(j, jp); ++l)
          r -= jordan_coefficient(j, jp, l) * (jordan_factor(i + 1, jp - l) * jordan_factor(i, j - l));
        out.push_back({tag("(2)", {{"i", i}, {"j", j}, {"j'", jp}}), r});
      }
}

inline void relations_d0(int lo, int hi, std::vector<Relation>& out) {
  std::vector<GeneratorSymbol> gens;
  for (int i = lo; i <= hi; ++i) gens.push_back(gz(i));
  for (int i = lo; i <= hi; ++i) gens.push_back(gzp(i));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      out.push_back({"comm[" + gens[a].str() + "," + gens[b].str() + "]", w({gens[a], gens[b]}) - w({gens[b], gens[a]})});
}

}  // namespace detail

/// Relations whose base index i (and partner index j, where the schema has
/// one) runs over [lo, hi]; indices derived from i, such as i - d', may leave
/// the window. `blocks` bounds the Jordan block sizes for d = 1.
inline RelationSet relation_set(SphereDim dim, int lo, int hi, int blocks = 3) {
  if (lo > hi) throw InvalidArgument("empty index window");
  RelationSet rs{dim, lo, hi, blocks, {}};
  const int d = dim.d;
  if (d == 3) detail::relations_d3(lo, hi, rs.relations);
  else if (d >= 4 || d <= -1) detail::relations_generic(d, lo, hi, rs.relations);
  else if (d == 2) detail::relations_d2(lo, hi, rs.relations);
  else if (d == 1) {
    if (blocks < 1) throw InvalidArgument("d = 1 needs a positive block bound");
    detail::relations_d1(lo, hi, blocks, rs.relations);
  } else {
    detail::relations_d0(lo, hi, rs.relations);
  }
  return rs;
}

/// Isoclass represented by a generator.
inline ObjClass generator_class(const GeneratorSymbol& g, SphereDim dim) {
  switch (g.family) {
    case Family::x:
    case Family::y:
      if (dim.d != 3) throw WrongFamily("x and y generators belong to d = 3");
      return simple(dim, g.family == Family::x ? -2 * g.index : -2 * g.index - 1);
    case Family::z:
      if (dim.d == 1) throw WrongFamily("z generators do not exist for d = 1");
      return simple(dim, -g.index, 1);
    case Family::zprime:
      if (dim.d != 0) throw WrongFamily("z' generators belong to d = 0");
      return simple(dim, -g.index, 2);
    case Family::zjordan:
      if (dim.d != 1) throw WrongFamily("z_{i,j} generators belong to d = 1");
      return ObjClass(dim, {IndecLabel{-g.index, g.block, 1}});
  }
  throw InternalError("unknown generator family");
}

/// Left-to-right Hall product of a word; memoized.
inline HallElement eval_word(const Word& word, SphereDim dim, long q) {
  static std::mutex mu;
  static std::map<std::tuple<int, long, Word>, HallElement> memo;
  auto key = std::make_tuple(dim.d, q, word);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  HallElement acc = unit(dim, q);
  if (!word.empty()) {
    Word prefix(word.begin(), word.end() - 1);
    acc = eval_word(prefix, dim, q) * HallElement::basis(generator_class(word.back(), dim), q);
  }
  std::lock_guard lock(mu);
  memo.emplace(key, acc);
  return acc;
}

/// Image of a polynomial in the Hall algebra at q.
inline HallElement phi_eval(const NCPolynomial& p, SphereDim dim, long q) {
  PrimeField check(q);
  HallElement out(dim, q);
  for (const auto& [word, c] : p.terms()) out += rf_eval_at_q(c, q) * eval_word(word, dim, q);
  return out;
}

struct RelationResult {
  std::string id;
  std::string relation;
  bool passed = false;
  std::string residual;
};

struct RelationReport {
  int d = 0;
  long q = 0;
  int lo = 0;
  int hi = 0;
  std::vector<RelationResult> results;

  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
};

inline RelationReport verify_relations(SphereDim dim, int lo, int hi, long q, int blocks = 3) {
  RelationReport rep{dim.d, q, lo, hi, {}};
  for (const auto& r : relation_set(dim, lo, hi, blocks).relations) {
    HallElement res = phi_eval(r.poly, dim, q);
    rep.results.push_back({r.id, r.poly.str(), res.is_zero(), res.is_zero() ? "0" : res.str()});
  }
  return rep;
}

struct RankReport {
  std::size_t pairs = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  bool full_rank() const { return rank == pairs; }
};

namespace detail {

// Objects of D_fd (d = 3) with homology only in degrees of the given parity
// inside [lo, hi] and total dimension <= bound.
inline std::vector<ObjClass> parity_objects(int lo, int hi, int bound, int parity) {
  const SphereDim dim{3};
  std::vector<IndecLabel> labels;
  for (int g = lo; g <= hi; ++g) {
    if (((g % 2) + 2) % 2 != parity) continue;
    for (int len = 1; len <= bound; ++len)
      if (degree_span(dim, {-g, len, 1}).first >= lo) labels.push_back({-g, len, 1});
  }
  std::vector<ObjClass> out;
  std::vector<IndecLabel> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int budget) {
    out.emplace_back(dim, cur);
    for (std::size_t k = start; k < labels.size(); ++k) {
      if (labels[k].len > budget) continue;
      cur.push_back(labels[k]);
      rec(k, budget - labels[k].len);
      cur.pop_back();
    }
  };
  rec(0, bound);
  return out;
}

}  // namespace detail

/// Rank of the coefficient matrix of the products [M][N], M even-concentrated
/// and N odd-concentrated. With `duplicate_first_pair` the first row is
/// repeated, which must make the rank deficient.
inline RankReport basis_rank_check(int lo, int hi, int dim_bound, long q, bool duplicate_first_pair = false) {
  if (dim_bound < 0) throw InvalidArgument("dimension bound must be non-negative");
  auto evens = detail::parity_objects(lo, hi, dim_bound, 0);
  auto odds = detail::parity_objects(lo, hi, dim_bound, 1);
  std::vector<std::map<ObjClass, Rational>> rows;
  for (const auto& m : evens)
    for (const auto& n : odds) rows.push_back(basis_product(m, n, q));
  if (duplicate_first_pair && !rows.empty()) rows.push_back(rows.front());
  std::map<ObjClass, std::size_t> col;
  for (const auto& r : rows)
    for (const auto& [z, _] : r) col.emplace(z, 0);
  std::size_t k = 0;
  for (auto& [_, idx] : col) idx = k++;
  QMatrix m(RationalField{}, rows.size(), col.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [z, c] : rows[r]) m(r, col.at(z)) = c;
  return {rows.size(), col.size(), m.rank()};
}

/// Character x_i -> v/(v^2-1) x, y_i -> v/(v^2-1) x^{-1} into Q(v)[x, x^{-1}].
inline LaurentElement torus_char(const NCPolynomial& p) {
  const RationalFunctionV c = RationalFunctionV::v() / (RationalFunctionV::q() - RationalFunctionV(1));
  LaurentElement out;
  for (const auto& [word, coef] : p.terms()) {
    LaurentElement term = LaurentElement::constant(coef);
    for (const auto& g : word) {
      if (g.family == Family::x) term = term * LaurentElement::monomial(c, 1);
      else if (g.family == Family::y) term = term * LaurentElement::monomial(c, -1);
      else throw WrongFamily("torus character is defined on x and y generators only");
    }
    out += term;
  }
  return out;
}

struct TorusReport {
  std::size_t relations_checked = 0;
  std::size_t relations_zero = 0;
  std::size_t commutators_checked = 0;
  std::size_t commutators_zero = 0;
  std::vector<std::string> failures;
  bool passed() const { return relations_zero == relations_checked && commutators_zero == commutators_checked; }
};

/// Character of every d = 3 relation in [-3, 3] and of random commutators.
inline TorusReport torus_relations_check(std::uint32_t seed = 20260101u, int commutators = 20) {
  TorusReport rep;
  for (const auto& r : relation_set(SphereDim{3}, -3, 3).relations) {
    ++rep.relations_checked;
    if (torus_char(r.poly).is_zero()) ++rep.relations_zero;
    else rep.failures.push_back(r.id);
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(1, 3), idx(-3, 3), fam(0, 1);
  auto random_word = [&] {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(fam(rng) ? gx(idx(rng)) : gy(idx(rng)));
    return NCPolynomial::word(w);
  };
  for (int k = 0; k < commutators; ++k) {
    NCPolynomial a = random_word(), b = random_word();
    ++rep.commutators_checked;
    if (torus_char(a * b - b * a).is_zero()) ++rep.commutators_zero;
    else rep.failures.push_back("commutator " + a.str() + " , " + b.str());
  }
  return rep;
}

}  // namespace spherahall
