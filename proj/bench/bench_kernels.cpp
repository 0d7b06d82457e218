// Wall-clock comparison of the serial reference path and the OpenMP kernels.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "binharm/padic.hpp"
#include "binharm/sweep.hpp"

using namespace binharm;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// One untimed pass first so harmonic and gamma caches are warm for both modes.
void compare(const std::string& name, const std::function<void(Execution)>& kernel) {
  kernel(Execution::serial);
  const double serial = seconds([&] { kernel(Execution::serial); });
  const double parallel = seconds([&] { kernel(Execution::parallel); });
  std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", max_threads());

  const CaseList thm1 = thm1_cases({1, 60}, {1, 60});
  compare("thm1 sweep m <= 60", [&](Execution e) { run_identity_sweep(thm1.cases, e); });

  const std::pair<Rational, Rational> coefficients[] = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  const CaseList thm2 = thm2_cases({1, 30}, {1, 30}, {1, 30}, coefficients);
  compare("thm2 sweep l <= 30", [&](Execution e) { run_identity_sweep(thm2.cases, e); });

  const CaseList pfd = thm1_cases({1, 15}, {1, 15});
  compare("pfd cross-check m <= 15", [&](Execution e) { run_pfd_sweep(pfd.cases, e, 10); });

  const auto params = supercongruence_parameters(5, 2);
  compare("4G at p = 97, k = 3", [&](Execution e) { g_function(GParams{params, 97, 3}, e); });

  const auto primes = odd_primes_in(3, 60);
  compare("supercongruence d=8 r=3 p < 60", [&](Execution e) {
    run_supercongruence_sweep(8, 3, primes, {.exec = e});
  });
  return 0;
}
