#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace binharm {

using BigInt = mpz_class;

// Exact rational number, always kept in canonical form:
// den > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q);

  // Parses "a", "a/b" or "-a/b". Throws ParseFailure on malformed text or b = 0.
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const;

  // "num/den", e.g. "-3/4", "0/1", "16/1".
  std::string str() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

struct FloorFrac {
  BigInt floor;
  Rational frac;  // 0 <= frac < 1
};

FloorFrac floor_frac(const Rational& q);

// Residue modulo p^k. Arithmetic requires identical (p, k).
class Residue {
 public:
  Residue(std::uint64_t value, std::uint32_t p, std::uint32_t k);

  std::uint64_t value() const { return value_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t precision() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }

  Residue operator-() const;
  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  Residue pow(std::uint64_t e) const;
  // Throws NotInvertible when p divides the value.
  Residue inverse() const;
  bool is_unit() const { return value_ % p_ != 0; }

  friend bool operator==(const Residue& a, const Residue& b) = default;

 private:
  void check_same(const Residue& o) const;

  std::uint64_t value_;
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t modulus_;
};

// p^k, checked against overflow of the 62-bit residue range.
std::uint64_t prime_power(std::uint32_t p, std::uint32_t k);

// b in [0, m) with a*b = 1 (mod m). Throws NotInvertible if gcd(a, m) != 1.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);
std::uint64_t mod_inverse(const BigInt& a, std::uint64_t m);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// Image of a p-integral rational in Z/p^k. Throws NotPIntegral if p | den(q).
Residue reduce_mod_pk(const Rational& q, std::uint32_t p, std::uint32_t k);

}  // namespace binharm
