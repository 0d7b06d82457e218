#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "binharm/identities.hpp"
#include "binharm/padic.hpp"
#include "binharm/ratfun.hpp"

namespace binharm {

// Inclusive integer range.
struct Range {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  bool empty() const { return hi < lo; }
};

struct SkippedCase {
  std::string params;
  std::string reason;
};

// Cases of a sweep in lexicographic parameter order, invalid combinations set aside.
struct CaseList {
  std::vector<IdentityParams> cases;
  std::vector<SkippedCase> skipped;
};

CaseList chu_cases(Range n);
CaseList thm1_cases(Range m, Range n);
// Ordered by (l, m, n, index into coefficient pairs).
CaseList thm2_cases(Range l, Range m, Range n, std::span<const std::pair<Rational, Rational>> coefficients);

std::string describe(const IdentityParams& params);

// A case that threw is kept with its message instead of aborting the sweep.
template <typename T>
struct Outcome {
  std::optional<T> value;
  std::string error;
  bool ok() const { return value.has_value(); }
};

// Cases run independently; results come back in input order for either execution mode.
std::vector<Outcome<IdentityReport>> run_identity_sweep(std::span<const IdentityParams> cases, Execution exec,
                                                        bool with_oracle = false);

struct PfdCheck {
  IdentityParams params;
  PFD closed;
  PFD oracle;
  bool coefficients_match = false;
  std::size_t points_checked = 0;
  bool recombination_ok = false;  // oracle PFD recombined == eval_exact at every point
  bool pass() const { return coefficients_match && recombination_ok; }
};

// Rationals with |num|, |den| <= bound, avoiding the integers 0, -1, ..., -max_pole.
std::vector<Rational> random_nonpole_points(std::size_t count, std::int64_t max_pole, std::int64_t bound,
                                            std::mt19937_64& rng);

// Closed-form coefficients vs. Laurent oracle, plus recombination at random points.
// Each case draws its points from seed + case index.
PfdCheck check_pfd(const IdentityParams& params, std::size_t points, std::uint64_t seed);
std::vector<Outcome<PfdCheck>> run_pfd_sweep(std::span<const IdentityParams> cases, Execution exec,
                                             std::size_t points = 25, std::uint64_t seed = 20240601);

struct SuperCongruenceCase {
  std::uint32_t p = 0;
  Outcome<SuperCongruenceReport> outcome;
};

struct SuperCongruenceSweep {
  std::vector<SuperCongruenceCase> cases;
  std::vector<SkippedCase> skipped;
};

// Primes dividing d, or failing the hypotheses without an override, are skipped.
SuperCongruenceSweep run_supercongruence_sweep(std::int64_t d, std::int64_t r,
                                               std::span<const std::uint32_t> primes,
                                               const SuperCongruenceOptions& options);

int max_threads();
void set_threads(int count);

}  // namespace binharm
