#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "binharm/combinatorics.hpp"
#include "binharm/errors.hpp"
#include "binharm/padic.hpp"

using namespace binharm;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

// Gamma_p straight from (-1)^n prod_{0<j<n, p !| j} j, with plain integer arithmetic.
std::uint64_t gamma_brute(const Rational& x, std::uint32_t p, std::uint32_t k) {
  std::uint64_t mod = 1;
  for (std::uint32_t i = 0; i < k; ++i) mod *= p;
  BigInt rep = x.num() * BigInt(mod_inverse(x.den(), mod));
  mpz_fdiv_r_ui(rep.get_mpz_t(), rep.get_mpz_t(), mod);
  const std::uint64_t n = rep.get_ui();
  std::uint64_t acc = 1;
  for (std::uint64_t j = 1; j < n; ++j) {
    if (j % p != 0) acc = acc * j % mod;
  }
  return n % 2 == 0 ? acc : (mod - acc) % mod;
}

// The defining G sum term by term, every quantity recomputed from scratch.
std::uint64_t g_brute(const std::vector<Rational>& a, std::uint32_t p, std::uint32_t k, std::uint64_t* j0_term) {
  std::uint64_t mod = 1;
  for (std::uint32_t i = 0; i < k; ++i) mod *= p;
  BigInt total = 0;
  for (std::uint32_t j = 0; j + 1 < p; ++j) {
    const Rational t = q(static_cast<long>(j), static_cast<long>(p - 1));
    BigInt term = gamma_brute(t, p, k);
    if (j % 2 == 1) term = -term;
    BigInt powered = 1;
    for (std::size_t i = 0; i < a.size(); ++i) powered *= term;
    term = powered;
    for (const Rational& ai : a) {
      const Rational diff = ai - t;
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), diff.num().get_mpz_t(), diff.den().get_mpz_t());
      const Rational frac = diff - Rational(fl);
      term *= gamma_brute(frac, p, k);
      term *= mod_inverse(BigInt(gamma_brute(ai, p, k)), mod);
      if (fl == -1) term *= -static_cast<long>(p);
      mpz_fdiv_r_ui(term.get_mpz_t(), term.get_mpz_t(), mod);
    }
    if (j == 0 && j0_term) *j0_term = term.get_ui();
    total += term;
  }
  total *= -BigInt(mod_inverse(static_cast<std::int64_t>(p - 1), mod));
  mpz_fdiv_r_ui(total.get_mpz_t(), total.get_mpz_t(), mod);
  return total.get_ui();
}

Rational hyp_brute(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Rational& z,
                   std::uint64_t trunc) {
  Rational sum;
  for (std::uint64_t n = 0; n <= trunc; ++n) {
    Rational term(1);
    for (const auto& a : upper) term *= rising_factorial(a, n);
    for (const auto& b : lower) term /= rising_factorial(b, n);
    term *= z.pow(static_cast<long>(n)) / Rational(factorial(n));
    sum += term;
  }
  return sum;
}

Rational random_p_integral(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 500);
  while (true) {
    const Rational x = q(num(rng), den(rng));
    if (x.den() % p != 0) return x;
  }
}

}  // namespace

TEST_CASE("gamma table values") {
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const GammaTable t(p, k);
      CHECK(t[0] == 1);
      CHECK(t[1] == t.modulus() - 1);
    }
  }
  CHECK(GammaTable(5, 1)[3] == 3);
  CHECK(GammaTable(7, 1)[5] == 4);
  CHECK_THROWS_AS(GammaTable(97, 5, 1 << 20), TableTooLarge);
  CHECK_THROWS_AS(GammaTable(9, 1), InvalidShape);
  CHECK_THROWS_AS(GammaTable(2, 3), InvalidShape);
}

TEST_CASE("gamma table recurrence and continuity hold everywhere") {
  for (std::uint32_t p : {3U, 5U, 7U}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const GammaTable t(p, k);
      const std::uint64_t mod = t.modulus();
      for (std::uint64_t j = 0; j + 1 < mod; ++j) {
        const std::uint64_t factor = j % p == 0 ? 1 : j;
        REQUIRE((t[j + 1] + t[j] * factor) % mod == 0);
      }
      if (k > 1) {
        const GammaTable coarse(p, k - 1);
        for (std::uint64_t j = 0; j < mod; ++j) REQUIRE(t[j] % coarse.modulus() == coarse[j % coarse.modulus()]);
      }
    }
  }
}

TEST_CASE("gamma tables are shared per (p, k)") {
  CHECK(gamma_table(7, 2).get() == gamma_table(7, 2).get());
  CHECK(gamma_table(7, 2).get() != gamma_table(7, 3).get());
}

TEST_CASE("gamma of rationals") {
  CHECK(gamma_rational(q(1, 2), 5, 2).value() == 18);
  CHECK(gamma_rational(q(1, 5), 7, 1).value() == 5);
  CHECK_THROWS_AS(gamma_rational(q(1, 5), 5, 3), NotPIntegral);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Rational x = random_p_integral(rng, 11);
    CHECK(gamma_rational(x, 11, 2).value() == gamma_brute(x, 11, 2));
    CHECK(gamma_reference(x, 11, 2) == gamma_rational(x, 11, 2));
  }
}

TEST_CASE("reflection formula") {
  const Residue g = gamma_rational(q(1, 2), 5, 2);
  CHECK((g * g).value() == 24);
  CHECK(reflection_index(q(1, 2), 5) == 3);
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (int i = 0; i < 100; ++i) {
        const Rational x = random_p_integral(rng, p);
        const Residue lhs = gamma_rational(x, p, k) * gamma_rational(Rational(1) - x, p, k);
        const Residue expected = reflection_index(x, p) % 2 == 0 ? Residue(1, p, k) : -Residue(1, p, k);
        REQUIRE(lhs == expected);
      }
    }
  }
}

TEST_CASE("truncated hypergeometric series") {
  const std::vector<Rational> halves(4, q(1, 2));
  const std::vector<Rational> ones(3, Rational(1));
  CHECK(trunc_hypergeometric({halves, ones, Rational(1), 0}) == Rational(1));
  CHECK(trunc_hypergeometric({halves, ones, Rational(1), 1}) == q(17, 16));

  const std::vector<Rational> fifths{q(1, 5), q(2, 5), q(3, 5), q(4, 5)};
  const Rational six = trunc_hypergeometric({fifths, ones, Rational(1), 6});
  CHECK(six == hyp_brute(fifths, ones, Rational(1), 6));
  CHECK(six == Rational(BigInt("39573391046166478681"), BigInt("37252902984619140625")));

  const std::vector<Rational> mixed_upper{q(-1, 3), q(7, 2)};
  const std::vector<Rational> mixed_lower{q(5, 4)};
  CHECK(trunc_hypergeometric({mixed_upper, mixed_lower, q(-2, 9), 9}) ==
        hyp_brute(mixed_upper, mixed_lower, q(-2, 9), 9));

  CHECK_THROWS_AS(trunc_hypergeometric({halves, {Rational(-2)}, Rational(1), 3}), ZeroDenominatorTerm);
  CHECK_NOTHROW(trunc_hypergeometric({halves, {Rational(-2)}, Rational(1), 2}));
}

TEST_CASE("termwise modular series agrees with reducing the exact sum") {
  const std::vector<Rational> ones(3, Rational(1));
  for (std::uint32_t p : {5U, 7U, 11U, 13U}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::int64_t d : {5, 8, 12}) {
        if (d % p == 0) continue;
        const std::vector<Rational> upper{q(1, d), q(d == 5 ? 2 : (d == 8 ? 3 : 5), d), q(d == 5 ? 3 : (d == 8 ? 5 : 7), d),
                                          q(d - 1, d)};
        const HypSeriesSpec spec{upper, ones, Rational(1), p - 1};
        CHECK(trunc_hypergeometric_mod(spec, p, k) == reduce_mod_pk(trunc_hypergeometric(spec), p, k));
      }
    }
  }
  CHECK_THROWS_AS(trunc_hypergeometric_mod({{q(1, 2)}, {Rational(1)}, Rational(1), 5}, 5, 2), NotPIntegral);
}

TEST_CASE("G function frozen values") {
  std::uint64_t j0 = 0;
  const std::vector<Rational> halves{q(1, 2), q(1, 2)};
  CHECK(g_brute(halves, 5, 1, &j0) == 1);
  CHECK(j0 == 1);
  CHECK(g_function({halves, 5, 1}).value() == 1);

  const std::vector<Rational> fifths{q(1, 5), q(2, 5), q(3, 5), q(4, 5)};
  CHECK(g_brute(fifths, 7, 3, &j0) == 342);
  CHECK(j0 == 1);
  CHECK(g_function({fifths, 7, 3}).value() == 342);
  CHECK(g_function({fifths, 7, 3}, Execution::serial).value() == 342);
  CHECK(g_function_reference({fifths, 7, 3}).value() == 342);
}

TEST_CASE("G function agrees with the brute-force sum") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> den(2, 30);
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rational> a;
      const std::size_t size = 2 + static_cast<std::size_t>(trial % 3);
      while (a.size() < size) {
        const long d = den(rng);
        if (d % p == 0) continue;
        std::uniform_int_distribution<long> num(1, d - 1);
        a.push_back(q(num(rng), d));
      }
      for (std::uint32_t k = 1; k <= 3; ++k) {
        const std::uint64_t expected = g_brute(a, p, k, nullptr);
        CHECK(g_function({a, p, k}).value() == expected);
        CHECK(g_function({a, p, k}, Execution::serial).value() == expected);
        CHECK(g_function_reference({a, p, k}).value() == expected);
      }
    }
  }
}

TEST_CASE("G parameter validation") {
  CHECK_THROWS_AS(g_function({{q(1, 2)}, 5, 1}), InvalidShape);
  CHECK_THROWS_AS(g_function({{q(1, 2), Rational(1)}, 5, 1}), InvalidShape);
  CHECK_THROWS_AS(g_function({{q(1, 2), q(1, 5)}, 5, 1}), NotPIntegral);
  CHECK_THROWS_AS(g_function({{q(1, 2), q(1, 3)}, 9, 1}), InvalidShape);
}

TEST_CASE("s(p)") {
  CHECK(s_p(5, 2, 7, 1).value() == 6);
  CHECK(s_p(5, 2, 7, 3).value() == 342);
  CHECK_THROWS_AS(s_p(6, 2, 7, 1), InvalidShape);
  CHECK_THROWS_AS(s_p(5, 1, 7, 1), InvalidShape);
  CHECK_THROWS_AS(s_p(5, 2, 5, 1), NotPIntegral);
  for (auto [d, r] : {std::pair{5, 2}, std::pair{8, 3}, std::pair{12, 5}, std::pair{7, 3}}) {
    for (std::uint32_t p : odd_primes_in(3, 40)) {
      if (d % p == 0) continue;
      for (std::uint32_t k = 1; k <= 3; ++k) {
        const Residue s = s_p(d, r, p, k);
        CHECK((s * s).value() == 1);
      }
    }
  }
}

TEST_CASE("supercongruence hypotheses") {
  CHECK(supercongruence_hypothesis(5, 2, 3));
  CHECK(supercongruence_hypothesis(8, 3, 5));
  CHECK_FALSE(supercongruence_hypothesis(7, 2, 3));
  CHECK(supercongruence_hypothesis(7, 2, 13));  // 13 = -1 mod 7
}

TEST_CASE("verify_supercongruence") {
  const auto a = verify_supercongruence(5, 2, 7);
  CHECK(a.pass);
  CHECK(a.lhs.value() == 342);
  CHECK(a.rhs.value() == 342);
  CHECK(a.lhs.modulus() == 343);
  const auto b = verify_supercongruence(8, 3, 5);
  CHECK(b.pass);
  CHECK(b.lhs.value() == 1);
  CHECK(verify_supercongruence(12, 5, 29).lhs.value() == 24300);
  CHECK_THROWS_AS(verify_supercongruence(5, 2, 5), NotPIntegral);
  CHECK_THROWS_AS(verify_supercongruence(6, 2, 7), InvalidShape);
  CHECK_THROWS_AS(verify_supercongruence(7, 2, 3), HypothesisViolated);
  const auto observed = verify_supercongruence(7, 2, 3, {.override_hypothesis = true});
  CHECK_FALSE(observed.hypothesis_holds);
}
