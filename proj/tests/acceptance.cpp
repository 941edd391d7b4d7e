// Acceptance suite: one PASS/FAIL line per criterion. Run with a criterion
// number to run just that one; without arguments all run, lock test first.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spherahall/spherahall.hpp"

using namespace spherahall;

namespace {

// Runtime budgets in seconds; every equality below is exact.
constexpr double kBudgetSpherePowers = 5.0;
constexpr double kBudgetRelationsD3 = 300.0;
constexpr double kBudgetAssociativity = 600.0;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

using RF = RationalFunctionV;

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

HallElement b(const ObjClass& x, long q, const Rational& c = Rational(1)) { return HallElement::basis(x, q, c); }

// Every object with total dimension <= bound, lengths <= max_len and shifts in
// [lo, hi]; d = 0 also varies the branch.
std::vector<ObjClass> all_objects(SphereDim dim, int bound, int max_len, int lo, int hi) {
  std::vector<IndecLabel> labels;
  for (int s = lo; s <= hi; ++s)
    for (int len = 1; len <= (dim.d == 0 ? 1 : max_len); ++len)
      for (int br = 1; br <= (dim.d == 0 ? 2 : 1); ++br) labels.push_back({s, len, br});
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

void check_relations(Outcome& o, const RelationReport& rep, const std::string& where) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& r : rep.results)
    if (!r.passed && failed++ == 0) first = r.id + " = " + r.residual;
  if (failed > 0) {
    std::ostringstream s;
    s << where << ": " << failed << "/" << rep.results.size() << " relations nonzero, first " << first;
    o.fail(s.str());
  }
  if (rep.results.empty()) o.fail(where + ": no relation instances");
}

// [S][S] = (q+1)[S+S] and the coefficient of [S+S+S] in [S]^3.
Outcome sphere_powers() {
  Outcome o;
  SphereDim d3{3};
  ObjClass s = simple(d3), s2 = s.direct_sum(s), s3 = s2.direct_sum(s);
  for (long q : {2L, 3L, 5L}) {
    HallElement x = b(s, q);
    if (x * x != b(s2, q, Rational(q + 1))) o.fail("[S][S] at q=" + std::to_string(q) + " is " + (x * x).str());
    HallElement cube = x * x * x;
    const Rational expected = frac(q * q * q - 1, q - 1);
    if (cube.coeff(s3) != expected)
      o.fail("coefficient of [S+S+S] in [S]^3 at q=" + std::to_string(q) + " is " + cube.coeff(s3).str() +
             ", expected " + expected.str());
    for (const auto& [z, c] : cube.terms())
      if (z.total_dim() > 3) o.fail("[S]^3 has a term of higher dimension");
  }
  return o;
}

Outcome relations_d3() {
  Outcome o;
  for (long q : {2L, 3L}) check_relations(o, verify_relations(SphereDim{3}, -2, 2, q), "d=3 q=" + std::to_string(q));
  return o;
}

Outcome relations_general() {
  Outcome o;
  for (int d : {4, 2, -1, -2}) check_relations(o, verify_relations(SphereDim{d}, -1, 1, 2), "d=" + std::to_string(d));
  for (long q : {2L, 3L}) check_relations(o, verify_relations(SphereDim{0}, -2, 2, q), "d=0 q=" + std::to_string(q));
  return o;
}

// The d = 1 structure constants, case by case.
Rational table_coefficient(int j, int jp, int l, long q) {
  const int m = std::min(j, jp);
  if (l == 0) return Rational(1);
  if (0 < l && l < m) return Rational(q - 1) * Rational::power(q, -(l + 1));
  if (l == jp && jp < j) return Rational::power(q, -jp);
  if (l == j && j < jp) return Rational::power(q, -j);
  return Rational(1) / (Rational::power(q, j - 1) * Rational(q - 1));
}

Outcome jordan_table() {
  Outcome o;
  SphereDim d1{1};
  auto z = [&](int i, int j, long q) {
    return j == 0 ? unit(d1, q) : b(ObjClass(d1, {IndecLabel{-i, j, 1}}), q);
  };
  for (long q : {2L, 3L})
    for (int i : {-1, 0})
      for (int j = 1; j <= 3; ++j)
        for (int jp = 1; jp <= 3; ++jp) {
          HallElement lhs = z(i, j, q) * z(i + 1, jp, q);
          HallElement rhs(d1, q);
          for (int l = 0; l <= std::min(j, jp); ++l)
            rhs += table_coefficient(j, jp, l, q) * (z(i + 1, jp - l, q) * z(i, j - l, q));
          if (lhs != rhs) {
            std::ostringstream s;
            s << "z[" << i << "," << j << "]z[" << i + 1 << "," << jp << "] at q=" << q << ": " << (lhs - rhs).str();
            o.fail(s.str());
          }
        }
  return o;
}

Outcome associativity() {
  Outcome o;
  std::mt19937 rng(20260101u);
  auto run = [&](int d, int samples) {
    SphereDim dim{d};
    for (int k = 0; k < samples; ++k) {
      ObjClass x = random_object(dim, rng, 4, -3, 3), y = random_object(dim, rng, 4, -3, 3),
               z = random_object(dim, rng, 4, -3, 3);
      if (!assoc_check(x, y, z, 2)) o.fail("d=" + std::to_string(d) + ": " + x.str() + " | " + y.str() + " | " + z.str());
      HallElement one = unit(dim, 2);
      if (one * b(x, 2) != b(x, 2) || b(x, 2) * one != b(x, 2)) o.fail("unit law fails at " + x.str());
    }
  };
  run(3, 100);
  for (int d : {2, 1, 0, -1}) run(d, 25);
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  std::size_t pairs = 0;
  for (int d : {3, 1, -1}) {
    auto objs = all_objects(SphereDim{d}, 3, 3, -4, 4);
    for (const auto& x : objs) {
      if (aut_count(x, 2) != brute_aut_count(x, 2)) o.fail("aut_count differs at d=" + std::to_string(d) + " " + x.str());
      for (const auto& y : objs) {
        ++pairs;
        if (static_cast<int>(hom_basis(x, y, 0, 2).size()) != hom_dim_T(x, y, 0))
          o.fail("hom dimension differs at d=" + std::to_string(d) + " " + x.str() + " -> " + y.str());
      }
    }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome basis_rank() {
  Outcome o;
  RankReport rep = basis_rank_check(-3, 0, 3, 2);
  std::ostringstream s;
  s << "rank " << rep.rank << " of " << rep.pairs << " products";
  if (!rep.full_rank()) o.fail(s.str());
  else o.detail = s.str();
  return o;
}

Outcome torus() {
  Outcome o;
  TorusReport rep = torus_relations_check();
  if (rep.relations_zero != rep.relations_checked)
    o.fail(std::to_string(rep.relations_checked - rep.relations_zero) + " relations have nonzero character");
  const RF expected = RF::q() / ((RF::q() - RF(1)) * (RF::q() - RF(1)));
  for (int i = -3; i <= 3; ++i)
    for (auto xi : {gx(i), gx(i + 1)}) {
      LaurentElement c = torus_char(gen(xi) * gen(gy(i)));
      if (c != LaurentElement::constant(expected)) o.fail("character of " + xi.str() + gy(i).str() + " is " + c.str());
    }
  return o;
}

Outcome round_trip() {
  Outcome o;
  SphereDim d3{3};
  auto objs = all_objects(d3, 4, 4, -3, 3);
  for (long q : {2L, 3L})
    for (const auto& x : objs)
      if (phi_eval(express_in_spheres(x, q), d3, q) != b(x, q))
        o.fail("round trip fails at " + x.str() + " q=" + std::to_string(q));
  if (o.passed) o.detail = std::to_string(objs.size()) + " objects";
  return o;
}

Outcome convention_lock() {
  Outcome o;
  NCPolynomial r = gen(gy(0)) * gen(gx(0)) - RF::q() * (gen(gx(0)) * gen(gy(0))) +
                   NCPolynomial::constant(RF::q() / (RF::q() - RF(1)));
  HallElement res = phi_eval(r, SphereDim{3}, 2);
  if (!res.is_zero()) o.fail("residual " + res.str());
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double budget;  // seconds, 0 = none
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {10, "convention lock", convention_lock, 0},
      {1, "sphere-power identity", sphere_powers, kBudgetSpherePowers},
      {2, "d=3 presentation", relations_d3, kBudgetRelationsD3},
      {3, "general-d presentations", relations_general, 0},
      {4, "d=1 coefficient table", jordan_table, 0},
      {5, "associativity and unit", associativity, kBudgetAssociativity},
      {6, "oracle/formula consistency", oracle_consistency, 0},
      {7, "basis rank", basis_rank, 0},
      {8, "torus character", torus, 0},
      {9, "expression round trip", round_trip, 0},
  };
  int selected = argc > 1 ? std::stoi(argv[1]) : 0;
  bool any_failed = false, found = false;
  for (const auto& c : all) {
    if (selected != 0 && c.id != selected) continue;
    found = true;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) o.fail("runtime " + std::to_string(secs) + " s over budget");
    std::ostringstream line;
    line << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ")";
    if (!o.detail.empty()) line << ": " << o.detail;
    line.precision(2);
    line << std::fixed << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    any_failed |= !o.passed;
  }
  if (!found) {
    std::cerr << "unknown criterion " << selected << "\n";
    return 2;
  }
  return any_failed ? 1 : 0;
}
