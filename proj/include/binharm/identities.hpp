#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "binharm/exact.hpp"
#include "binharm/ratfun.hpp"

namespace binharm {

enum class IdentityKind { chu, thm1, thm2 };

std::string to_string(IdentityKind kind);
IdentityKind parse_identity_kind(const std::string& name);

struct IdentityParams {
  IdentityKind kind = IdentityKind::thm1;
  std::int64_t l = 0;  // thm2 only
  std::int64_t m = 0;  // thm1, thm2
  std::int64_t n = 0;
  Rational c1;  // thm2 only
  Rational c2;

  static IdentityParams chu(std::int64_t n);
  static IdentityParams thm1(std::int64_t m, std::int64_t n);
  static IdentityParams thm2(std::int64_t l, std::int64_t m, std::int64_t n, Rational c1, Rational c2);

  // Throws InvalidShape when the parameters fall outside the identity's hypotheses.
  void validate() const;
};

// One verified case. `lhs` is the direct sum, `closed_limit` is A + sum C_k + sum D_k
// from the closed-form coefficients, `oracle_limit` the same quantity from the
// Laurent oracle when requested. pass holds iff every computed value equals `expected`.
struct IdentityReport {
  IdentityParams params;
  Rational lhs;
  Rational expected;
  std::optional<Rational> closed_limit;
  std::optional<Rational> oracle_limit;
  bool pass = false;
};

// sum_{k=1..n} C(n+k,k)^2 C(n,k)^2 [1 + 2k H_{n+k} + 2k H_{n-k} - 4k H_k]
Rational chu_lhs(std::int64_t n);

Rational thm1_lhs(std::int64_t m, std::int64_t n);

// c1 (H_{k+n}^(r) - H_{k+l-n-1}^(r)) + c2 (H_{k+m}^(r) - H_{k+l-m-1}^(r))
Rational u_weight(unsigned r, std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n,
                  const Rational& c1, const Rational& c2);

// c1 sum_{s=l-n..n} (k+s)^-r + c2 sum_{s=l-m..m} (k+s)^-r, summed term by term.
Rational t_weight(unsigned r, std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n,
                  const Rational& c1, const Rational& c2);

Rational thm2_lhs(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1, const Rational& c2);

PFD coeffs_thm1_closed(std::int64_t m, std::int64_t n);
PFD coeffs_thm2_closed(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1,
                       const Rational& c2);

// Direct left side for any kind.
Rational identity_lhs(const IdentityParams& params);
// (-1)^{m+n} for thm1, 0 otherwise.
Rational identity_expected(const IdentityParams& params);
// Closed-form coefficient PFD matching the kind (chu uses thm1 with m = n).
PFD closed_coefficients(const IdentityParams& params);
// Laurent-oracle PFD of the rational function behind the kind.
PFD oracle_coefficients(const IdentityParams& params);

// Direct sum vs. closed-form limit A + sum C + sum D vs. expected value;
// with_oracle adds the Laurent-oracle limit as a third route.
IdentityReport limit_identity_check(const IdentityParams& params, bool with_oracle = false);

}  // namespace binharm
