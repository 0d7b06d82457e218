#include "binharm/exact.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "binharm/errors.hpp"

namespace binharm {

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    BigInt v;
    std::string digits = part;
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    if (digits.empty() || v.set_str(digits, 10) != 0) {
      throw ParseFailure("not a rational: '" + s + "'");
    }
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseFailure("zero denominator in '" + s + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

FloorFrac floor_frac(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return {fl, q - Rational(fl)};
}

std::uint64_t prime_power(std::uint32_t p, std::uint32_t k) {
  if (p < 2 || k < 1) throw std::invalid_argument("prime_power needs p >= 2, k >= 1");
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (out > limit / p) throw std::overflow_error("p^k exceeds the 62-bit residue range");
    out *= p;
  }
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod_inverse with zero modulus");
  // extended Euclid on (a mod m, m)
  __int128 r0 = static_cast<__int128>(m);
  __int128 r1 = a % static_cast<__int128>(m);
  if (r1 < 0) r1 += m;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    if (m == 1) return 0;
    throw NotInvertible(std::to_string(a) + " mod " + std::to_string(m));
  }
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t mod_inverse(const BigInt& a, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
  return mod_inverse(static_cast<std::int64_t>(r.get_ui()), m);
}

namespace {

std::uint64_t bigint_mod(const BigInt& a, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

}  // namespace

Residue::Residue(std::uint64_t value, std::uint32_t p, std::uint32_t k)
    : p_(p), k_(k), modulus_(prime_power(p, k)) {
  value_ = value % modulus_;
}

void Residue::check_same(const Residue& o) const {
  if (p_ != o.p_ || k_ != o.k_) {
    throw ModulusMismatch(std::to_string(p_) + "^" + std::to_string(k_) + " vs " +
                          std::to_string(o.p_) + "^" + std::to_string(o.k_));
  }
}

Residue Residue::operator-() const {
  Residue r = *this;
  r.value_ = value_ == 0 ? 0 : modulus_ - value_;
  return r;
}

Residue& Residue::operator+=(const Residue& o) {
  check_same(o);
  value_ += o.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  check_same(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  check_same(o);
  value_ = mulmod(value_, o.value_, modulus_);
  return *this;
}

Residue Residue::pow(std::uint64_t e) const {
  Residue base = *this;
  Residue acc(1, p_, k_);
  while (e > 0) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  return acc;
}

Residue Residue::inverse() const {
  Residue r = *this;
  r.value_ = mod_inverse(static_cast<std::int64_t>(value_), modulus_);
  return r;
}

Residue reduce_mod_pk(const Rational& q, std::uint32_t p, std::uint32_t k) {
  const std::uint64_t mod = prime_power(p, k);
  const BigInt den = q.den();
  if (bigint_mod(den, p) == 0) {
    throw NotPIntegral(q.str() + " has denominator divisible by " + std::to_string(p));
  }
  const std::uint64_t num_r = bigint_mod(q.num(), mod);
  const std::uint64_t den_inv = mod_inverse(static_cast<std::int64_t>(bigint_mod(den, mod)), mod);
  return Residue(mulmod(num_r, den_inv, mod), p, k);
}

}  // namespace binharm
