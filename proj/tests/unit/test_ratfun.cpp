#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "binharm/combinatorics.hpp"
#include "binharm/errors.hpp"
#include "binharm/ratfun.hpp"
#include "binharm/sweep.hpp"

using namespace binharm;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Poly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

// Direct substitution into x (1-x)_n (1-x)_m / ((x)_{n+1} (x)_{m+1}).
Rational f1_direct(std::int64_t m, std::int64_t n, const Rational& x) {
  const Rational one_minus = Rational(1) - x;
  return x * rising_factorial(one_minus, static_cast<std::uint64_t>(n)) *
         rising_factorial(one_minus, static_cast<std::uint64_t>(m)) /
         (rising_factorial(x, static_cast<std::uint64_t>(n + 1)) * rising_factorial(x, static_cast<std::uint64_t>(m + 1)));
}

Rational f2_direct(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1, const Rational& c2,
                   const Rational& x) {
  Rational s1, s2;
  for (std::int64_t s = l - n; s <= n; ++s) s1 += Rational(1) / (Rational(s) - x);
  for (std::int64_t s = l - m; s <= m; ++s) s2 += Rational(1) / (Rational(s) - x);
  return f1_direct(m, n, x) * (c1 * s1 + c2 * s2);
}

}  // namespace

TEST_CASE("polynomial operations") {
  CHECK(poly({1, -1}) * poly({2, -1}) == poly({2, -3, 1}));
  CHECK(poly({0, 0, 1}).shifted(Rational(-1)) == poly({1, -2, 1}));
  CHECK(poly({2, -3, 1}).derivative() == poly({-3, 2}));
  CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("shift agrees with evaluation and with its truncated form") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-20, 20), d(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < 7; ++i) coeffs.push_back(q(c(rng), d(rng)));
    const Poly p(coeffs);
    const Rational t = q(c(rng), d(rng));
    const Poly s = p.shifted(t);
    for (int i = 0; i < 5; ++i) {
      const Rational x = q(c(rng), d(rng));
      CHECK(s(x) == p(x + t));
    }
    const auto low = p.shifted_low(t, 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(low[i] == s.coeff(i));
  }
}

TEST_CASE("build_f_thm1 evaluation") {
  CHECK(eval_exact(build_f_thm1(2, 1), q(1, 2)) == q(2, 15));
  CHECK(eval_exact(build_f_thm1(2, 1), Rational(1)) == Rational(0));
  CHECK(eval_exact(build_f_thm1(1, 1), Rational(2)) == q(1, 18));
  CHECK_THROWS_AS(build_f_thm1(1, 2), InvalidShape);
  CHECK_THROWS_AS(build_f_thm1(3, 0), InvalidShape);
  CHECK_THROWS_AS(eval_exact(build_f_thm1(2, 1), Rational(-2)), PoleEvaluation);
}

TEST_CASE("build_f_thm2 evaluation") {
  CHECK(eval_exact(build_f_thm2(2, 1, 1, Rational(1), Rational(0)), q(1, 2)) == q(4, 9));
  CHECK(eval_exact(build_f_thm2(2, 1, 1, Rational(0), Rational(0)), q(5, 3)) == Rational(0));
  const Rational direct = f2_direct(3, 2, 2, Rational(0), Rational(1), q(1, 2));
  CHECK(direct == q(16, 75));
  CHECK(eval_exact(build_f_thm2(3, 2, 2, Rational(0), Rational(1)), q(1, 2)) == direct);
  CHECK_THROWS_AS(build_f_thm2(1, 2, 3, Rational(1), Rational(0)), InvalidShape);
  CHECK_THROWS_AS(build_f_thm2(5, 3, 2, Rational(1), Rational(0)), InvalidShape);  // n < l/2
}

TEST_CASE("builders agree with direct substitution") {
  std::mt19937_64 rng(21);
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t n = 1; n <= m; ++n) {
      for (const Rational& x : random_nonpole_points(6, m + 10, 50, rng)) {
        CHECK(eval_exact(build_f_thm1(m, n), x) == f1_direct(m, n, x));
      }
    }
  }
  for (std::int64_t l = 2; l <= 9; ++l) {
    for (std::int64_t m = 1; m < l; ++m) {
      for (std::int64_t n = (l + 1) / 2; n <= m; ++n) {
        for (const Rational& x : random_nonpole_points(4, m + 10, 50, rng)) {
          if (x.is_integer()) continue;  // the direct form divides by (s - x)
          CHECK(eval_exact(build_f_thm2(l, m, n, q(2, 1), q(-3, 2)), x) ==
                f2_direct(l, m, n, q(2, 1), q(-3, 2), x));
        }
      }
    }
  }
}

TEST_CASE("eval_exact edge cases") {
  const FactoredRatFun one(Poly::constant(Rational(1)), {});
  CHECK(eval_exact(one, q(7, 3)) == Rational(1));
  const FactoredRatFun g(Poly::constant(Rational(1)), {{0, 1}, {-3, 2}});
  CHECK_THROWS_AS(eval_exact(g, Rational(-3)), PoleEvaluation);
  CHECK_THROWS_AS(FactoredRatFun(Poly(), {{1, 1}}), InvalidShape);
  CHECK_THROWS_AS(FactoredRatFun(Poly(), {{0, 3}}), InvalidShape);
  CHECK_THROWS_AS(FactoredRatFun(Poly(), {{0, 1}, {0, 2}}), InvalidShape);
}

TEST_CASE("laurent_pfd examples") {
  const PFD a = laurent_pfd(build_f_thm1(2, 1));
  CHECK(a.a == Rational(1));
  REQUIRE(a.quad.size() == 1);
  CHECK(a.quad[0].b == Rational(-12));
  CHECK(a.quad[0].c == Rational(16));
  REQUIRE(a.simple.size() == 1);
  CHECK(a.simple[0].k == 2);
  CHECK(a.simple[0].d == Rational(-18));
  CHECK(a.n == 1);
  CHECK(a.m == 2);

  const PFD b = laurent_pfd(build_f_thm1(1, 1));
  CHECK(b.a == Rational(1));
  CHECK(b.quad[0].b == Rational(-4));
  CHECK(b.quad[0].c == Rational(0));  // a vanishing coefficient is an ordinary value
  CHECK(b.simple.empty());

  const PFD c = laurent_pfd(build_f_thm2(2, 1, 1, Rational(1), Rational(0)));
  CHECK(c.a == Rational(1));
  CHECK(c.quad[0].b == Rational(-2));
  CHECK(c.quad[0].c == Rational(-1));
}

TEST_CASE("laurent_pfd rejects improper input") {
  const FactoredRatFun improper(Poly({Rational(0), Rational(0), Rational(1)}), {{0, 1}, {-1, 1}});
  CHECK_THROWS_AS(laurent_pfd(improper), ImproperFunction);
  const FactoredRatFun no_origin(Poly::constant(Rational(1)), {{-1, 2}});
  CHECK_THROWS_AS(laurent_pfd(no_origin), InvalidShape);
}

TEST_CASE("recombination reproduces the function") {
  std::mt19937_64 rng(33);
  for (std::int64_t m = 1; m <= 9; ++m) {
    for (std::int64_t n = 1; n <= m; ++n) {
      const FactoredRatFun f = build_f_thm1(m, n);
      const PFD pfd = laurent_pfd(f);
      for (const Rational& x : random_nonpole_points(25, m, 100, rng)) CHECK(recombine(pfd, x) == eval_exact(f, x));
    }
  }
  const FactoredRatFun f = build_f_thm2(7, 5, 4, q(1, 3), q(-5, 2));
  const PFD pfd = laurent_pfd(f);
  for (const Rational& x : random_nonpole_points(25, 5, 100, rng)) CHECK(recombine(pfd, x) == eval_exact(f, x));
}

TEST_CASE("degree structure fixes the behaviour at infinity") {
  for (std::int64_t m = 1; m <= 15; ++m) {
    for (std::int64_t n = 1; n <= m; ++n) {
      const FactoredRatFun f = build_f_thm1(m, n);
      CHECK(f.numerator().degree() == n + m);
      CHECK(f.denominator_degree() == n + m + 1);
      // x f(x) -> leading(num)/leading(den) = (-1)^{m+n}
      CHECK(f.numerator().leading() == ((m + n) % 2 == 0 ? Rational(1) : Rational(-1)));
      CHECK(f.denominator().leading() == Rational(1));
    }
  }
  for (std::int64_t l = 2; l <= 14; ++l) {
    for (std::int64_t m = 1; m < l; ++m) {
      for (std::int64_t n = (l + 1) / 2; n <= m; ++n) {
        const FactoredRatFun f = build_f_thm2(l, m, n, Rational(1), Rational(1));
        CHECK(f.numerator().degree() <= n + m - 1);
        CHECK(f.denominator_degree() == n + m + 1);
      }
    }
  }
}
