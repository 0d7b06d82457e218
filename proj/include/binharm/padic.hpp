#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "binharm/exact.hpp"

namespace binharm {

inline constexpr std::uint64_t kDefaultGammaTableCap = std::uint64_t{1} << 26;

bool is_prime(std::uint64_t n);
// Odd primes p with lo <= p <= hi.
std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi);

// Morita's Gamma_p(j) mod p^k for every 0 <= j < p^k, built from
// Gamma_p(0) = 1, Gamma_p(j+1) = -j Gamma_p(j) (p !| j), -Gamma_p(j) (p | j).
class GammaTable {
 public:
  // Throws TableTooLarge when p^k > cap, std::invalid_argument unless p is an odd prime.
  GammaTable(std::uint32_t p, std::uint32_t k, std::uint64_t cap = kDefaultGammaTableCap);

  std::uint32_t prime() const { return p_; }
  std::uint32_t precision() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }
  std::size_t size() const { return values_.size(); }

  std::uint64_t operator[](std::uint64_t j) const { return values_[j]; }
  Residue at(std::uint64_t j) const { return Residue(values_.at(j), p_, k_); }

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t modulus_;
  std::vector<std::uint32_t> values_;
};

// Shared tables, one construction per (p, k).
std::shared_ptr<const GammaTable> gamma_table(std::uint32_t p, std::uint32_t k,
                                              std::uint64_t cap = kDefaultGammaTableCap);

// Gamma_p(q) mod p^k through the representative of q mod p^k (continuity of Gamma_p).
Residue gamma_rational(const Rational& q, std::uint32_t p, std::uint32_t k,
                       std::uint64_t cap = kDefaultGammaTableCap);

// Same value from the product (-1)^n prod_{0<j<n, p !| j} j; no table. Serial reference.
Residue gamma_reference(const Rational& q, std::uint32_t p, std::uint32_t k);

// R(x) in {1..p} with R(x) = x (mod p).
std::uint32_t reflection_index(const Rational& x, std::uint32_t p);

struct HypSeriesSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z;
  std::uint64_t truncation = 0;
};

// sum_{j=0..truncation} prod (a_i)_j / prod (b_i)_j * z^j / j!, exactly.
// Throws ZeroDenominatorTerm if some (b_i)_j vanishes in range.
Rational trunc_hypergeometric(const HypSeriesSpec& spec);

// The same sum reduced mod p^k term by term with modular inverses.
// Throws NotPIntegral when a term denominator is not a p-adic unit.
Residue trunc_hypergeometric_mod(const HypSeriesSpec& spec, std::uint32_t p, std::uint32_t k);

struct GParams {
  std::vector<Rational> entries;  // m_i/d_i, each in (0, 1)
  std::uint32_t p = 0;
  std::uint32_t k = 3;

  // Throws InvalidShape / NotPIntegral.
  void validate() const;
};

enum class Execution { serial, parallel };

// n+1_G(m_1/d_1, ..., m_{n+1}/d_{n+1})_p mod p^k, summed over j = 0..p-2.
// The parallel form splits the j range across OpenMP threads.
Residue g_function(const GParams& params, Execution exec = Execution::parallel,
                   std::uint64_t cap = kDefaultGammaTableCap);

// Serial evaluation that never touches a gamma table.
Residue g_function_reference(const GParams& params);

// Gamma_p(1/d) Gamma_p(r/d) Gamma_p((d-r)/d) Gamma_p((d-1)/d) mod p^k.
Residue s_p(std::int64_t d, std::int64_t r, std::uint32_t p, std::uint32_t k,
            std::uint64_t cap = kDefaultGammaTableCap);

// p = +-1 (mod d), or p = +-r (mod d) with r^2 = +-1 (mod d).
bool supercongruence_hypothesis(std::int64_t d, std::int64_t r, std::uint32_t p);

struct SuperCongruenceReport {
  std::int64_t d = 0;
  std::int64_t r = 0;
  std::uint32_t p = 0;
  Residue lhs{0, 3, 1};
  Residue rhs{0, 3, 1};
  Residue s_p{0, 3, 1};
  bool hypothesis_holds = false;
  bool pass = false;
};

struct SuperCongruenceOptions {
  bool override_hypothesis = false;
  Execution exec = Execution::parallel;
  std::uint64_t table_cap = kDefaultGammaTableCap;
};

// 4G(1/d, r/d, 1-r/d, 1-1/d)_p against 4F3(...; 1,1,1 | 1)_{p-1} + s(p) p mod p^3.
SuperCongruenceReport verify_supercongruence(std::int64_t d, std::int64_t r, std::uint32_t p,
                                             const SuperCongruenceOptions& options = {});

// The four parameters 1/d, r/d, 1-r/d, 1-1/d.
std::vector<Rational> supercongruence_parameters(std::int64_t d, std::int64_t r);

}  // namespace binharm
