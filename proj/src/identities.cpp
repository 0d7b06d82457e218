#include "binharm/identities.hpp"

#include "binharm/combinatorics.hpp"
#include "binharm/errors.hpp"

namespace binharm {

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::chu: return "chu";
    case IdentityKind::thm1: return "thm1";
    case IdentityKind::thm2: return "thm2";
  }
  return "?";
}

IdentityKind parse_identity_kind(const std::string& name) {
  if (name == "chu") return IdentityKind::chu;
  if (name == "thm1") return IdentityKind::thm1;
  if (name == "thm2") return IdentityKind::thm2;
  throw InvalidShape("unknown identity kind '" + name + "'");
}

IdentityParams IdentityParams::chu(std::int64_t n) {
  IdentityParams p;
  p.kind = IdentityKind::chu;
  p.m = n;
  p.n = n;
  return p;
}

IdentityParams IdentityParams::thm1(std::int64_t m, std::int64_t n) {
  IdentityParams p;
  p.kind = IdentityKind::thm1;
  p.m = m;
  p.n = n;
  return p;
}

IdentityParams IdentityParams::thm2(std::int64_t l, std::int64_t m, std::int64_t n, Rational c1, Rational c2) {
  IdentityParams p;
  p.kind = IdentityKind::thm2;
  p.l = l;
  p.m = m;
  p.n = n;
  p.c1 = std::move(c1);
  p.c2 = std::move(c2);
  return p;
}

void IdentityParams::validate() const {
  const std::string got = " (got l=" + std::to_string(l) + ", m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")";
  switch (kind) {
    case IdentityKind::chu:
      if (n < 1) throw InvalidShape("chu needs n >= 1" + got);
      break;
    case IdentityKind::thm1:
      if (n < 1 || m < n) throw InvalidShape("thm1 needs m >= n >= 1" + got);
      break;
    case IdentityKind::thm2:
      if (!(n >= 1 && l > m && m >= n && 2 * n >= l)) {
        throw InvalidShape("thm2 needs l > m >= n >= l/2, n >= 1" + got);
      }
      break;
  }
}

namespace {

// C(m+k,k) C(m,k) C(n+k,k) C(n,k)
BigInt quad_binomial(std::int64_t m, std::int64_t n, std::int64_t k) {
  return BigInt(binomial(m + k, k) * binomial(m, k) * binomial(n + k, k) * binomial(n, k));
}

// (-1)^{k-n} C(m+k,k) C(m,k) C(n+k,k) / C(k-1,n), for n < k <= m
Rational tail_weight(std::int64_t m, std::int64_t n, std::int64_t k) {
  const BigInt num = binomial(m + k, k) * binomial(m, k) * binomial(n + k, k);
  const Rational w(num, binomial(k - 1, n));
  return (k - n) % 2 == 0 ? w : -w;
}

// 1 + k (H_{m+k} + H_{m-k} + H_{n+k} + H_{n-k} - 4 H_k)
Rational harmonic_bracket(std::int64_t m, std::int64_t n, std::int64_t k) {
  const auto h = [](std::int64_t i) { return harmonic(1, static_cast<std::uint64_t>(i)); };
  Rational inner = h(m + k) + h(m - k) + h(n + k) + h(n - k) - Rational(4) * h(k);
  return Rational(1) + Rational(k) * inner;
}

void check_thm1(std::int64_t m, std::int64_t n) { IdentityParams::thm1(m, n).validate(); }

void check_thm2(std::int64_t l, std::int64_t m, std::int64_t n) {
  IdentityParams::thm2(l, m, n, Rational(0), Rational(0)).validate();
}

}  // namespace

Rational chu_lhs(std::int64_t n) {
  IdentityParams::chu(n).validate();
  const auto h = [](std::int64_t i) { return harmonic(1, static_cast<std::uint64_t>(i)); };
  Rational sum;
  for (std::int64_t k = 1; k <= n; ++k) {
    const BigInt b = binomial(n + k, k) * binomial(n, k);
    const Rational weight(BigInt(b * b));
    const Rational kk(k);
    sum += weight * (Rational(1) + Rational(2) * kk * h(n + k) + Rational(2) * kk * h(n - k) -
                     Rational(4) * kk * h(k));
  }
  return sum;
}

Rational thm1_lhs(std::int64_t m, std::int64_t n) {
  check_thm1(m, n);
  Rational sum;
  for (std::int64_t k = 0; k <= n; ++k) sum += Rational(quad_binomial(m, n, k)) * harmonic_bracket(m, n, k);
  for (std::int64_t k = n + 1; k <= m; ++k) sum += tail_weight(m, n, k);
  return sum;
}

Rational u_weight(unsigned r, std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n,
                  const Rational& c1, const Rational& c2) {
  check_thm2(l, m, n);
  if (k < 0) throw InvalidShape("u_weight needs k >= 0");
  const auto h = [r](std::int64_t i) { return harmonic(r, static_cast<std::uint64_t>(i)); };
  Rational out;
  if (!c1.is_zero()) out += c1 * (h(k + n) - h(k + l - n - 1));
  if (!c2.is_zero()) out += c2 * (h(k + m) - h(k + l - m - 1));
  return out;
}

Rational t_weight(unsigned r, std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n,
                  const Rational& c1, const Rational& c2) {
  check_thm2(l, m, n);
  const auto span_sum = [&](std::int64_t lo, std::int64_t hi) {
    Rational s;
    for (std::int64_t j = lo; j <= hi; ++j) s += Rational(k + j).pow(-static_cast<long>(r));
    return s;
  };
  return c1 * span_sum(l - n, n) + c2 * span_sum(l - m, m);
}

Rational thm2_lhs(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1, const Rational& c2) {
  check_thm2(l, m, n);
  Rational sum;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational u1 = u_weight(1, k, l, m, n, c1, c2);
    const Rational u2 = u_weight(2, k, l, m, n, c1, c2);
    sum += Rational(quad_binomial(m, n, k)) * (harmonic_bracket(m, n, k) * u1 - Rational(k) * u2);
  }
  for (std::int64_t k = n + 1; k <= m; ++k) sum += tail_weight(m, n, k) * u_weight(1, k, l, m, n, c1, c2);
  return sum;
}

PFD coeffs_thm1_closed(std::int64_t m, std::int64_t n) {
  check_thm1(m, n);
  PFD out;
  out.n = n;
  out.m = m;
  out.a = Rational(1);
  for (std::int64_t k = 1; k <= n; ++k) {
    const Rational w(quad_binomial(m, n, k));
    out.quad.push_back({k, -Rational(k) * w, w * harmonic_bracket(m, n, k)});
  }
  for (std::int64_t k = n + 1; k <= m; ++k) out.simple.push_back({k, tail_weight(m, n, k)});
  return out;
}

PFD coeffs_thm2_closed(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1,
                       const Rational& c2) {
  check_thm2(l, m, n);
  PFD out;
  out.n = n;
  out.m = m;
  out.a = u_weight(1, 0, l, m, n, c1, c2);
  for (std::int64_t k = 1; k <= n; ++k) {
    const Rational w(quad_binomial(m, n, k));
    const Rational u1 = u_weight(1, k, l, m, n, c1, c2);
    const Rational u2 = u_weight(2, k, l, m, n, c1, c2);
    const Rational kk(k);
    out.quad.push_back({k, -kk * w * u1, w * (-kk * u2 + harmonic_bracket(m, n, k) * u1)});
  }
  for (std::int64_t k = n + 1; k <= m; ++k) {
    out.simple.push_back({k, tail_weight(m, n, k) * u_weight(1, k, l, m, n, c1, c2)});
  }
  return out;
}

Rational identity_lhs(const IdentityParams& p) {
  switch (p.kind) {
    case IdentityKind::chu: return chu_lhs(p.n);
    case IdentityKind::thm1: return thm1_lhs(p.m, p.n);
    case IdentityKind::thm2: return thm2_lhs(p.l, p.m, p.n, p.c1, p.c2);
  }
  return {};
}

Rational identity_expected(const IdentityParams& p) {
  if (p.kind == IdentityKind::thm1) return (p.m + p.n) % 2 == 0 ? Rational(1) : Rational(-1);
  return Rational(0);
}

PFD closed_coefficients(const IdentityParams& p) {
  p.validate();
  switch (p.kind) {
    case IdentityKind::chu: return coeffs_thm1_closed(p.n, p.n);
    case IdentityKind::thm1: return coeffs_thm1_closed(p.m, p.n);
    case IdentityKind::thm2: return coeffs_thm2_closed(p.l, p.m, p.n, p.c1, p.c2);
  }
  return {};
}

PFD oracle_coefficients(const IdentityParams& p) {
  p.validate();
  switch (p.kind) {
    case IdentityKind::chu: return laurent_pfd(build_f_thm1(p.n, p.n));
    case IdentityKind::thm1: return laurent_pfd(build_f_thm1(p.m, p.n));
    case IdentityKind::thm2: return laurent_pfd(build_f_thm2(p.l, p.m, p.n, p.c1, p.c2));
  }
  return {};
}

IdentityReport limit_identity_check(const IdentityParams& params, bool with_oracle) {
  params.validate();
  IdentityReport report;
  report.params = params;
  report.lhs = identity_lhs(params);
  report.expected = identity_expected(params);
  // Chu's sum is the m = n case of thm1 with the k = 0 term (= A = 1) removed.
  const Rational offset = params.kind == IdentityKind::chu ? Rational(1) : Rational(0);
  report.closed_limit = closed_coefficients(params).residue_sum() - offset;
  if (with_oracle) report.oracle_limit = oracle_coefficients(params).residue_sum() - offset;
  report.pass = report.lhs == report.expected && *report.closed_limit == report.expected &&
                (!report.oracle_limit || *report.oracle_limit == report.expected);
  return report;
}

}  // namespace binharm
