#include "binharm/sweep.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "binharm/errors.hpp"

namespace binharm {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int count) {
#ifdef _OPENMP
  if (count > 0) omp_set_num_threads(count);
#else
  (void)count;
#endif
}

std::string describe(const IdentityParams& p) {
  switch (p.kind) {
    case IdentityKind::chu: return "chu n=" + std::to_string(p.n);
    case IdentityKind::thm1: return "thm1 m=" + std::to_string(p.m) + " n=" + std::to_string(p.n);
    case IdentityKind::thm2:
      return "thm2 l=" + std::to_string(p.l) + " m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) +
             " c1=" + p.c1.str() + " c2=" + p.c2.str();
  }
  return {};
}

namespace {

void add_case(CaseList& list, IdentityParams params) {
  try {
    params.validate();
    list.cases.push_back(std::move(params));
  } catch (const InvalidShape& e) {
    list.skipped.push_back({describe(params), e.what()});
  }
}

}  // namespace

CaseList chu_cases(Range n) {
  CaseList out;
  for (std::int64_t nn = n.lo; nn <= n.hi; ++nn) add_case(out, IdentityParams::chu(nn));
  return out;
}

CaseList thm1_cases(Range m, Range n) {
  CaseList out;
  for (std::int64_t mm = m.lo; mm <= m.hi; ++mm) {
    for (std::int64_t nn = n.lo; nn <= n.hi; ++nn) add_case(out, IdentityParams::thm1(mm, nn));
  }
  return out;
}

CaseList thm2_cases(Range l, Range m, Range n, std::span<const std::pair<Rational, Rational>> coefficients) {
  CaseList out;
  for (std::int64_t ll = l.lo; ll <= l.hi; ++ll) {
    for (std::int64_t mm = m.lo; mm <= m.hi; ++mm) {
      for (std::int64_t nn = n.lo; nn <= n.hi; ++nn) {
        for (const auto& [c1, c2] : coefficients) add_case(out, IdentityParams::thm2(ll, mm, nn, c1, c2));
      }
    }
  }
  return out;
}

namespace {

// Shared driver: evaluates fn on every case, optionally across OpenMP threads,
// and stores each result (or its error) at the case's own index.
template <typename T, typename Fn>
std::vector<Outcome<T>> run_cases(std::size_t count, Execution exec, Fn&& fn) {
  std::vector<Outcome<T>> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& slot = out[static_cast<std::size_t>(i)];
    try {
      slot.value = fn(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      slot.error = e.what();
    } catch (...) {
      slot.error = "unknown failure";
    }
  }
  return out;
}

}  // namespace

std::vector<Outcome<IdentityReport>> run_identity_sweep(std::span<const IdentityParams> cases, Execution exec,
                                                        bool with_oracle) {
  return run_cases<IdentityReport>(cases.size(), exec,
                                   [&](std::size_t i) { return limit_identity_check(cases[i], with_oracle); });
}

std::vector<Rational> random_nonpole_points(std::size_t count, std::int64_t max_pole, std::int64_t bound,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num_dist(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den_dist(1, bound);
  std::vector<Rational> out;
  out.reserve(count);
  while (out.size() < count) {
    const Rational x(BigInt(static_cast<long>(num_dist(rng))), BigInt(static_cast<long>(den_dist(rng))));
    if (x.is_integer() && x.sign() <= 0 && -x.num() <= max_pole) continue;
    out.push_back(x);
  }
  return out;
}

PfdCheck check_pfd(const IdentityParams& params, std::size_t points, std::uint64_t seed) {
  params.validate();
  PfdCheck check;
  check.params = params;
  check.closed = closed_coefficients(params);
  check.oracle = oracle_coefficients(params);
  check.coefficients_match = check.closed == check.oracle;

  const FactoredRatFun f = params.kind == IdentityKind::thm2
                               ? build_f_thm2(params.l, params.m, params.n, params.c1, params.c2)
                               : build_f_thm1(params.m, params.n);
  std::mt19937_64 rng(seed);
  check.recombination_ok = true;
  for (const Rational& x : random_nonpole_points(points, params.m, 100, rng)) {
    check.recombination_ok = check.recombination_ok && recombine(check.oracle, x) == eval_exact(f, x);
    ++check.points_checked;
  }
  return check;
}

std::vector<Outcome<PfdCheck>> run_pfd_sweep(std::span<const IdentityParams> cases, Execution exec,
                                             std::size_t points, std::uint64_t seed) {
  return run_cases<PfdCheck>(cases.size(), exec,
                             [&](std::size_t i) { return check_pfd(cases[i], points, seed + i); });
}

SuperCongruenceSweep run_supercongruence_sweep(std::int64_t d, std::int64_t r,
                                               std::span<const std::uint32_t> primes,
                                               const SuperCongruenceOptions& options) {
  SuperCongruenceSweep sweep;
  std::vector<std::uint32_t> selected;
  for (std::uint32_t p : primes) {
    const std::string label = "d=" + std::to_string(d) + " r=" + std::to_string(r) + " p=" + std::to_string(p);
    if (d % static_cast<std::int64_t>(p) == 0) {
      sweep.skipped.push_back({label, "p divides d"});
    } else if (!options.override_hypothesis && !supercongruence_hypothesis(d, r, p)) {
      sweep.skipped.push_back({label, "p fails the congruence hypotheses"});
    } else {
      selected.push_back(p);
    }
  }
  // Primes are the parallel axis; each G sum then runs serially inside its task.
  SuperCongruenceOptions inner = options;
  if (options.exec == Execution::parallel) inner.exec = Execution::serial;
  auto outcomes = run_cases<SuperCongruenceReport>(
      selected.size(), options.exec, [&](std::size_t i) { return verify_supercongruence(d, r, selected[i], inner); });
  for (std::size_t i = 0; i < selected.size(); ++i) sweep.cases.push_back({selected[i], std::move(outcomes[i])});
  return sweep;
}

}  // namespace binharm
