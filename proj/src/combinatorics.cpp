#include "binharm/combinatorics.hpp"

#include <stdexcept>

namespace binharm {

namespace {

Rational reciprocal_power(std::uint64_t j, unsigned order) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), j, order);
  return Rational(BigInt(1), d);
}

}  // namespace

Rational HarmonicCache::get(unsigned order, std::uint64_t n) {
  std::lock_guard lock(mutex_);
  auto& table = tables_[order];
  if (table.empty()) table.emplace_back(0);
  table.reserve(n + 1);
  while (table.size() <= n) {
    const std::uint64_t j = table.size();
    table.push_back(table.back() + reciprocal_power(j, order));
  }
  return table[n];
}

HarmonicCache& HarmonicCache::global() {
  static HarmonicCache cache;
  return cache;
}

Rational harmonic(unsigned order, std::uint64_t n) {
  if (n == 0) return Rational(0);
  return HarmonicCache::global().get(order, n);
}

Rational harmonic_direct(unsigned order, std::uint64_t n) {
  Rational sum;
  for (std::uint64_t j = 1; j <= n; ++j) sum += reciprocal_power(j, order);
  return sum;
}

Rational rising_factorial(const Rational& a, std::uint64_t n) {
  Rational acc(1);
  Rational factor = a;
  for (std::uint64_t i = 0; i < n; ++i) {
    acc *= factor;
    factor += Rational(1);
  }
  return acc;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, i+1) = C(n, i) * (n - i) / (i + 1); each division is exact.
  BigInt acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc *= static_cast<unsigned long>(n - i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return acc;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace binharm
