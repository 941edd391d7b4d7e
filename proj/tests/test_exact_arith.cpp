#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "spherahall/laurent.hpp"
#include "spherahall/matrix.hpp"
#include "spherahall/prime_field.hpp"
#include "spherahall/rational.hpp"
#include "spherahall/rational_function.hpp"

using namespace spherahall;

namespace {

// Reference fraction arithmetic on 64-bit integers, small operands only.
struct Frac {
  long long n, d;
  Frac(long long a, long long b) {
    if (b < 0) a = -a, b = -b;
    long long g = std::gcd(a < 0 ? -a : a, b);
    n = a / g;
    d = b / g;
  }
};

Frac add(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac mul(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }

std::string frac_str(Frac f) { return f.d == 1 ? std::to_string(f.n) : std::to_string(f.n) + "/" + std::to_string(f.d); }

// Rank of a small matrix over F_p by counting the distinct vectors in its row space.
std::size_t brute_rank(const std::vector<std::vector<long>>& rows, long p) {
  std::set<std::vector<long>> span{std::vector<long>(rows.empty() ? 0 : rows[0].size(), 0)};
  for (const auto& r : rows) {
    std::set<std::vector<long>> next;
    for (const auto& v : span)
      for (long c = 0; c < p; ++c) {
        auto w = v;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = (w[j] + c * r[j]) % p;
        next.insert(w);
      }
    span = std::move(next);
  }
  std::size_t rank = 0;
  for (std::size_t size = span.size(); size > 1; size /= static_cast<std::size_t>(p)) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("rational arithmetic matches reference fractions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30);
  for (int k = 0; k < 500; ++k) {
    int a = num(rng), b = den(rng), c = num(rng), e = den(rng);
    Rational x{BigInt(a), BigInt(b)}, y{BigInt(c), BigInt(e)};
    REQUIRE((x + y).str() == frac_str(add(Frac(a, b), Frac(c, e))));
    REQUIRE((x * y).str() == frac_str(mul(Frac(a, b), Frac(c, e))));
    REQUIRE((x - y).str() == frac_str(add(Frac(a, b), Frac(-c, e))));
    if (c != 0) REQUIRE((x / y).str() == frac_str(mul(Frac(a, b), Frac(e, c))));
    REQUIRE(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("rational parsing and errors") {
  REQUIRE(Rational::parse("-6/4").str() == "-3/2");
  REQUIRE(Rational::parse("+7").str() == "7");
  REQUIRE_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
  REQUIRE_THROWS_AS(Rational::parse("x"), InvalidArgument);
  REQUIRE_THROWS_AS(Rational::parse("1/-2"), InvalidArgument);
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
  REQUIRE(Rational::power(2, -3).str() == "1/8");
  REQUIRE(Rational::power(-3, 3).str() == "-27");
  REQUIRE(Rational::power(5, 40).str() == "9094947017729282379150390625");
}

TEST_CASE("prime field inverses and primality") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 101L}) {
    PrimeField f(p);
    for (long a = 1; a < p; ++a) {
      long found = 0;
      for (long b = 1; b < p; ++b)
        if ((a * b) % p == 1) found = b;
      REQUIRE(static_cast<long>(f.inv(f.from_int(a))) == found);
    }
    REQUIRE(f.from_int(-1) == static_cast<std::uint32_t>(p - 1));
  }
  for (long n : {0L, 1L, 4L, 9L, 15L, 91L}) REQUIRE_THROWS_AS(PrimeField(n), InvalidArgument);
  REQUIRE_THROWS_AS(PrimeFieldScalar(1, 2) + PrimeFieldScalar(1, 3), InvalidArgument);
}

TEST_CASE("matrix rank and nullspace over F_p agree with row-space counting") {
  std::mt19937 rng(5);
  for (long p : {2L, 3L}) {
    PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      std::vector<std::vector<long>> rows(r, std::vector<long>(c));
      FieldMatrix<PrimeField> m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          rows[i][j] = static_cast<long>(rng() % p);
          m(i, j) = f.from_int(rows[i][j]);
        }
      const std::size_t rank = brute_rank(rows, p);
      REQUIRE(m.rank() == rank);
      auto ns = m.nullspace();
      REQUIRE(ns.size() == c - rank);
      for (const auto& v : ns)
        for (std::size_t i = 0; i < r; ++i) {
          long acc = 0;
          for (std::size_t j = 0; j < c; ++j) acc += rows[i][j] * static_cast<long>(v[j]);
          REQUIRE(acc % p == 0);
        }
      SpanBuilder<PrimeField> span(f, c);
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::uint32_t> v(c);
        for (std::size_t j = 0; j < c; ++j) v[j] = m(i, j);
        span.insert(v);
      }
      REQUIRE(span.size() == rank);
    }
  }
}

TEST_CASE("rational matrices") {
  RationalField f;
  FieldMatrix<RationalField> m(f, 2, 3);
  m(0, 0) = Rational(1), m(0, 1) = Rational(2), m(0, 2) = Rational(3);
  m(1, 0) = Rational(2), m(1, 1) = Rational(4), m(1, 2) = Rational(6);
  REQUIRE(m.rank() == 1);
  REQUIRE(m.nullspace().size() == 2);
  REQUIRE((FieldMatrix<RationalField>::identity(f, 2) * m) == m);
}

TEST_CASE("rational functions in v and evaluation at q") {
  using RF = RationalFunctionV;
  RF q = RF::q();
  RF f = (q * q - RF(1)) / (q - RF(1));
  REQUIRE(f == q + RF(1));
  REQUIRE(rf_eval_at_q(f, 3) == Rational(4));
  REQUIRE(rf_eval_at_q(RF::q_pow(-2), 5) == Rational(BigInt(1), BigInt(25)));
  REQUIRE(f.is_function_of_q());
  REQUIRE_FALSE(RF::v().is_function_of_q());
  REQUIRE_THROWS_AS(rf_eval_at_q(RF::v(), 2), OddPowerResidue);
  REQUIRE_THROWS_AS(rf_eval_at_q(RF(1) / (q - RF(2)), 2), InvalidArgument);
  // evaluation is a ring map
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    RF a = RF::q_pow(static_cast<int>(rng() % 5) - 2) + RF(static_cast<int>(rng() % 7) - 3);
    RF b = q * RF(static_cast<int>(rng() % 5) + 1) - RF(static_cast<int>(rng() % 3));
    for (long p : {2L, 3L, 5L}) {
      REQUIRE(rf_eval_at_q(a * b, p) == rf_eval_at_q(a, p) * rf_eval_at_q(b, p));
      REQUIRE(rf_eval_at_q(a + b, p) == rf_eval_at_q(a, p) + rf_eval_at_q(b, p));
      if (!rf_eval_at_q(b, p).is_zero()) REQUIRE(rf_eval_at_q(a / b, p) == rf_eval_at_q(a, p) / rf_eval_at_q(b, p));
    }
  }
}

TEST_CASE("Laurent elements") {
  using RF = RationalFunctionV;
  LaurentElement x = LaurentElement::monomial(RF(1), 1), xinv = LaurentElement::monomial(RF(1), -1);
  REQUIRE((x * xinv - LaurentElement::constant(RF(1))).is_zero());
  LaurentElement s = x + LaurentElement::constant(RF::q());
  LaurentElement sq = s * s;
  REQUIRE(sq.coeff(2) == RF(1));
  REQUIRE(sq.coeff(1) == RF(2) * RF::q());
  REQUIRE(sq.coeff(0) == RF::q() * RF::q());
  REQUIRE((s - s).is_zero());
}
