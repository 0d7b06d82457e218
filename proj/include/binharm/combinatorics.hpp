#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "binharm/exact.hpp"

namespace binharm {

// Incrementally extended table of generalized harmonic sums H_n^(i).
// Entries are computed once and never change; concurrent readers are safe.
class HarmonicCache {
 public:
  Rational get(unsigned order, std::uint64_t n);

  // Process-wide instance used by harmonic().
  static HarmonicCache& global();

 private:
  std::mutex mutex_;
  std::map<unsigned, std::vector<Rational>> tables_;  // tables_[i][n] = H_n^(i)
};

// H_n^(i) = sum_{j=1..n} 1/j^i, with H_0^(i) = 0.
Rational harmonic(unsigned order, std::uint64_t n);

// Uncached direct summation; used where the memo table is unwanted.
Rational harmonic_direct(unsigned order, std::uint64_t n);

// Pochhammer symbol (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
Rational rising_factorial(const Rational& a, std::uint64_t n);

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

}  // namespace binharm
