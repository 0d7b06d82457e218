#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "binharm/errors.hpp"
#include "binharm/exact.hpp"

using namespace binharm;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(q(6, -8).str() == "-3/4");
  CHECK(Rational().str() == "0/1");
  CHECK(q(0, -5).str() == "0/1");
  CHECK(Rational(16).str() == "16/1");
  CHECK((q(1, 6) + q(1, 3)).str() == "1/2");
  CHECK(Rational::parse("-3/4") == q(-3, 4));
  CHECK(Rational::parse("10/-4") == q(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseFailure);
  CHECK_THROWS_AS(Rational::parse("x"), ParseFailure);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(q(2, 3).pow(-2) == q(9, 4));
}

TEST_CASE("floor_frac") {
  auto ff = floor_frac(q(7, 2));
  CHECK(ff.floor == 3);
  CHECK(ff.frac == q(1, 2));
  ff = floor_frac(q(-1, 3));
  CHECK(ff.floor == -1);
  CHECK(ff.frac == q(2, 3));
  ff = floor_frac(Rational(4));
  CHECK(ff.floor == 4);
  CHECK(ff.frac.is_zero());
}

TEST_CASE("floor_frac is shift-equivariant and exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60), shift(-40, 40);
  for (int i = 0; i < 300; ++i) {
    const Rational x = q(num(rng), den(rng));
    const long s = shift(rng);
    const auto a = floor_frac(x);
    const auto b = floor_frac(x + Rational(s));
    CHECK(b.floor == a.floor + s);
    CHECK(b.frac == a.frac);
    CHECK(Rational(a.floor) + a.frac == x);
    CHECK(a.frac >= Rational(0));
    CHECK(a.frac < Rational(1));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(-3, 7) == 2);
  CHECK_THROWS_AS(mod_inverse(5, 25), NotInvertible);
}

TEST_CASE("reduce_mod_pk") {
  CHECK(reduce_mod_pk(q(1, 2), 5, 1).value() == 3);
  CHECK(reduce_mod_pk(Rational(7), 7, 2).value() == 7);
  CHECK(reduce_mod_pk(q(-1, 3), 7, 1).value() == 2);
  CHECK(reduce_mod_pk(q(1, 2), 5, 2).value() == 13);
  CHECK_THROWS_AS(reduce_mod_pk(q(1, 5), 5, 3), NotPIntegral);
}

TEST_CASE("reduce_mod_pk is a ring homomorphism on p-integral rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-2000, 2000), den(1, 400);
  for (std::uint32_t p : {3U, 5U, 7U}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      int checked = 0;
      while (checked < 150) {
        const Rational a = q(num(rng), den(rng));
        const Rational b = q(num(rng), den(rng));
        if (a.den() % p == 0 || b.den() % p == 0) continue;
        ++checked;
        const Residue ra = reduce_mod_pk(a, p, k);
        const Residue rb = reduce_mod_pk(b, p, k);
        CHECK(reduce_mod_pk(a * b, p, k) == ra * rb);
        CHECK(reduce_mod_pk(a + b, p, k) == ra + rb);
        CHECK(reduce_mod_pk(a - b, p, k) == ra - rb);
        // den * r = num (mod p^k)
        CHECK(reduce_mod_pk(Rational(a.den()), p, k) * ra == reduce_mod_pk(Rational(a.num()), p, k));
      }
    }
  }
}

TEST_CASE("rational arithmetic round-trips exactly") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 10000);
  for (int i = 0; i < 200; ++i) {
    const Rational a = q(num(rng), den(rng));
    const Rational b = q(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a.den() > 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("residues refuse mixed moduli") {
  const Residue a(3, 5, 2);
  const Residue b(3, 5, 3);
  const Residue c(3, 7, 2);
  CHECK_THROWS_AS(a + b, ModulusMismatch);
  CHECK_THROWS_AS(a * c, ModulusMismatch);
  CHECK(a.modulus() == 25);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((-a).value() == 22);
  CHECK(Residue(2, 5, 3).pow(10).value() == 1024 % 125);
  CHECK_THROWS_AS(Residue(10, 5, 2).inverse(), NotInvertible);
}
