#include "binharm/padic.hpp"

#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "binharm/combinatorics.hpp"
#include "binharm/errors.hpp"

namespace binharm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = std::max<std::uint32_t>(lo, 3); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidShape(std::to_string(p) + " is not an odd prime");
}

std::uint64_t checked_modulus(std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
  if (k < 1) throw InvalidShape("precision must be >= 1");
  std::uint64_t mod = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (mod > cap / p) {
      throw TableTooLarge(std::to_string(p) + "^" + std::to_string(k) + " exceeds the table cap " +
                          std::to_string(cap));
    }
    mod *= p;
  }
  if (mod > (std::uint64_t{1} << 32)) throw TableTooLarge("table entries are limited to 32 bits");
  return mod;
}

}  // namespace

GammaTable::GammaTable(std::uint32_t p, std::uint32_t k, std::uint64_t cap) : p_(p), k_(k) {
  require_odd_prime(p);
  modulus_ = checked_modulus(p, k, cap);
  values_.resize(modulus_);
  values_[0] = 1;
  for (std::uint64_t j = 0; j + 1 < modulus_; ++j) {
    const std::uint64_t factor = j % p == 0 ? 1 : j;
    const std::uint64_t prod = mulmod(values_[j], factor, modulus_);
    values_[j + 1] = static_cast<std::uint32_t>(prod == 0 ? 0 : modulus_ - prod);
  }
}

std::shared_ptr<const GammaTable> gamma_table(std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const GammaTable>> cache;
  require_odd_prime(p);
  checked_modulus(p, k, cap);
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const GammaTable>(p, k, cap);
  return slot;
}

Residue gamma_rational(const Rational& q, std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
  const Residue rep = reduce_mod_pk(q, p, k);
  return gamma_table(p, k, cap)->at(rep.value());
}

Residue gamma_reference(const Rational& q, std::uint32_t p, std::uint32_t k) {
  require_odd_prime(p);
  const std::uint64_t n = reduce_mod_pk(q, p, k).value();
  Residue acc(1, p, k);
  for (std::uint64_t j = 1; j < n; ++j) {
    if (j % p != 0) acc *= Residue(j, p, k);
  }
  return n % 2 == 0 ? acc : -acc;
}

std::uint32_t reflection_index(const Rational& x, std::uint32_t p) {
  const auto r = static_cast<std::uint32_t>(reduce_mod_pk(x, p, 1).value());
  return r == 0 ? p : r;
}

namespace {

void check_lower_parameters(const HypSeriesSpec& spec) {
  for (const Rational& b : spec.lower) {
    if (b.is_integer() && b.sign() <= 0) {
      const BigInt zero_at = -b.num();  // (b)_j vanishes for j > -b
      if (BigInt(spec.truncation) > zero_at) {
        throw ZeroDenominatorTerm("lower parameter " + b.str() + " gives a vanishing Pochhammer symbol");
      }
    }
  }
}

}  // namespace

Rational trunc_hypergeometric(const HypSeriesSpec& spec) {
  check_lower_parameters(spec);
  Rational term(1);
  Rational sum(1);
  for (std::uint64_t j = 0; j < spec.truncation; ++j) {
    const Rational jj(static_cast<long>(j));
    for (const Rational& a : spec.upper) term *= a + jj;
    for (const Rational& b : spec.lower) term /= b + jj;
    term *= spec.z;
    term /= jj + Rational(1);
    sum += term;
  }
  return sum;
}

Residue trunc_hypergeometric_mod(const HypSeriesSpec& spec, std::uint32_t p, std::uint32_t k) {
  check_lower_parameters(spec);
  Residue term(1, p, k);
  Residue sum(1, p, k);
  const Residue z = reduce_mod_pk(spec.z, p, k);
  for (std::uint64_t j = 0; j < spec.truncation; ++j) {
    const Rational jj(static_cast<long>(j));
    for (const Rational& a : spec.upper) term *= reduce_mod_pk(a + jj, p, k);
    Residue den(1, p, k);
    for (const Rational& b : spec.lower) den *= reduce_mod_pk(b + jj, p, k);
    den *= Residue(j + 1, p, k);
    if (!den.is_unit()) throw NotPIntegral("term " + std::to_string(j + 1) + " has a denominator divisible by p");
    term *= z * den.inverse();
    sum += term;
  }
  return sum;
}

void GParams::validate() const {
  require_odd_prime(p);
  if (k < 1) throw InvalidShape("precision must be >= 1");
  if (entries.size() < 2) throw InvalidShape("G needs at least two parameters");
  for (const Rational& a : entries) {
    if (a.sign() <= 0 || a >= Rational(1)) throw InvalidShape("parameter " + a.str() + " is not in (0, 1)");
    if (mpz_divisible_ui_p(a.raw().get_den_mpz_t(), p) != 0) {
      throw NotPIntegral("parameter " + a.str() + " is not in Z_" + std::to_string(p));
    }
  }
}

namespace {

// One summand of the G sum for index j, before the -1/(p-1) prefactor.
template <typename Gamma>
Residue g_summand(const GParams& params, std::uint64_t j, const std::vector<Residue>& inv_gamma_a,
                  Gamma&& gamma) {
  const std::uint32_t p = params.p;
  const Rational t(BigInt(j), BigInt(p - 1));
  Residue base = gamma(t);
  if (j % 2 == 1) base = -base;
  Residue term = base.pow(params.entries.size());
  const Residue minus_p = -Residue(p, p, params.k);
  for (std::size_t i = 0; i < params.entries.size(); ++i) {
    const FloorFrac ff = floor_frac(params.entries[i] - t);
    // a in (0,1) and t in [0,1) put the floor in {-1, 0}
    if (ff.floor != 0 && ff.floor != -1) throw std::logic_error("G summand is not p-integral");
    term *= gamma(ff.frac) * inv_gamma_a[i];
    if (ff.floor == -1) term *= minus_p;
  }
  return term;
}

template <typename Gamma>
std::vector<Residue> inverse_gammas(const GParams& params, Gamma&& gamma) {
  std::vector<Residue> out;
  out.reserve(params.entries.size());
  for (const Rational& a : params.entries) out.push_back(gamma(a).inverse());
  return out;
}

Residue g_prefactor(const GParams& params) {
  return -Residue(params.p - 1, params.p, params.k).inverse();
}

}  // namespace

Residue g_function(const GParams& params, Execution exec, std::uint64_t cap) {
  params.validate();
  const auto table = gamma_table(params.p, params.k, cap);
  const auto gamma = [&](const Rational& q) { return table->at(reduce_mod_pk(q, params.p, params.k).value()); };
  const std::vector<Residue> inv_a = inverse_gammas(params, gamma);

  const auto count = static_cast<std::int64_t>(params.p - 1);
  std::vector<std::uint64_t> summands(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::int64_t j = 0; j < count; ++j) {
    try {
      summands[static_cast<std::size_t>(j)] = g_summand(params, static_cast<std::uint64_t>(j), inv_a, gamma).value();
    } catch (...) {
#pragma omp critical(binharm_g_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  Residue sum(0, params.p, params.k);
  for (std::uint64_t v : summands) sum += Residue(v, params.p, params.k);
  return sum * g_prefactor(params);
}

Residue g_function_reference(const GParams& params) {
  params.validate();
  const auto gamma = [&](const Rational& q) { return gamma_reference(q, params.p, params.k); };
  const std::vector<Residue> inv_a = inverse_gammas(params, gamma);
  Residue sum(0, params.p, params.k);
  for (std::uint64_t j = 0; j + 1 < params.p; ++j) sum += g_summand(params, j, inv_a, gamma);
  return sum * g_prefactor(params);
}

namespace {

void check_dr(std::int64_t d, std::int64_t r) {
  if (!(2 <= r && r <= d - 2) || std::gcd(r, d) != 1) {
    throw InvalidShape("need 2 <= r <= d-2 and gcd(r, d) = 1 (got d=" + std::to_string(d) +
                       ", r=" + std::to_string(r) + ")");
  }
}

void check_coprime(std::int64_t d, std::uint32_t p) {
  if (d % static_cast<std::int64_t>(p) == 0) {
    throw NotPIntegral("p = " + std::to_string(p) + " divides d = " + std::to_string(d));
  }
}

}  // namespace

std::vector<Rational> supercongruence_parameters(std::int64_t d, std::int64_t r) {
  check_dr(d, r);
  const BigInt dd(static_cast<long>(d));
  return {Rational(BigInt(1), dd), Rational(BigInt(static_cast<long>(r)), dd),
          Rational(BigInt(static_cast<long>(d - r)), dd), Rational(BigInt(static_cast<long>(d - 1)), dd)};
}

Residue s_p(std::int64_t d, std::int64_t r, std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
  check_dr(d, r);
  require_odd_prime(p);
  check_coprime(d, p);
  Residue out(1, p, k);
  for (const Rational& a : supercongruence_parameters(d, r)) out *= gamma_rational(a, p, k, cap);
  return out;
}

bool supercongruence_hypothesis(std::int64_t d, std::int64_t r, std::uint32_t p) {
  const std::int64_t pm = static_cast<std::int64_t>(p) % d;
  if (pm == 1 || pm == d - 1) return true;
  const std::int64_t rr = (r * r) % d;
  const bool r_square_unit = rr == 1 || rr == d - 1;
  return r_square_unit && (pm == r % d || pm == d - r % d);
}

SuperCongruenceReport verify_supercongruence(std::int64_t d, std::int64_t r, std::uint32_t p,
                                             const SuperCongruenceOptions& options) {
  check_dr(d, r);
  require_odd_prime(p);
  check_coprime(d, p);
  constexpr std::uint32_t precision = 3;

  SuperCongruenceReport report{.d = d,
                               .r = r,
                               .p = p,
                               .lhs = Residue(0, p, precision),
                               .rhs = Residue(0, p, precision),
                               .s_p = Residue(0, p, precision),
                               .hypothesis_holds = supercongruence_hypothesis(d, r, p),
                               .pass = false};
  if (!report.hypothesis_holds && !options.override_hypothesis) {
    throw HypothesisViolated("p = " + std::to_string(p) + " is not +-1 mod d, nor +-r mod d with r^2 = +-1 mod d");
  }

  const std::vector<Rational> params = supercongruence_parameters(d, r);
  report.lhs = g_function(GParams{params, p, precision}, options.exec, options.table_cap);

  HypSeriesSpec series{params, {Rational(1), Rational(1), Rational(1)}, Rational(1), p - 1};
  report.s_p = s_p(d, r, p, precision, options.table_cap);
  report.rhs = reduce_mod_pk(trunc_hypergeometric(series), p, precision) + report.s_p * Residue(p, p, precision);
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace binharm
