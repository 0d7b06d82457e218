#include "binharm/ratfun.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "binharm/errors.hpp"

namespace binharm {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return Poly(std::move(out));
}

Poly Poly::shifted(const Rational& t) const {
  // Horner in the ring Q[x]: p(x + t) = (...(c_d (x+t) + c_{d-1})(x+t) + ...)
  const Poly step = linear(t, Rational(1));
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

std::vector<Rational> Poly::shifted_low(const Rational& t, std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  std::vector<Rational> work = coeffs_;
  for (std::size_t j = 0; j < count; ++j) {
    if (work.empty()) {
      out.emplace_back(0);
      continue;
    }
    // Divide work by (x - t): quotient in work[1..], remainder = work(t).
    for (std::size_t i = work.size() - 1; i > 0; --i) work[i - 1] += work[i] * t;
    out.push_back(work.front());
    work.erase(work.begin());
  }
  return out;
}

Poly Poly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return Poly(std::move(out));
}

FactoredRatFun::FactoredRatFun(Poly numerator, std::vector<Pole> poles)
    : numerator_(std::move(numerator)), poles_(std::move(poles)) {
  std::set<std::int64_t> seen;
  for (const Pole& p : poles_) {
    if (p.location > 0) throw InvalidShape("pole location must be <= 0");
    if (p.multiplicity != 1 && p.multiplicity != 2) throw InvalidShape("pole multiplicity must be 1 or 2");
    if (!seen.insert(p.location).second) throw InvalidShape("duplicate pole location");
  }
}

long FactoredRatFun::denominator_degree() const {
  long deg = 0;
  for (const Pole& p : poles_) deg += p.multiplicity;
  return deg;
}

Poly FactoredRatFun::denominator() const {
  Poly out = Poly::constant(Rational(1));
  for (const Pole& p : poles_) {
    const Poly factor = Poly::linear(Rational(-p.location), Rational(1));
    for (int i = 0; i < p.multiplicity; ++i) out *= factor;
  }
  return out;
}

namespace {

// (s - x)
Poly descending_factor(std::int64_t s) { return Poly::linear(Rational(s), Rational(-1)); }

// prod_{s=1..count, s != skip} (s - x)
Poly rising_one_minus_x(std::int64_t count, std::int64_t skip = 0) {
  Poly out = Poly::constant(Rational(1));
  for (std::int64_t s = 1; s <= count; ++s) {
    if (s != skip) out *= descending_factor(s);
  }
  return out;
}

std::vector<Pole> thm_poles(std::int64_t m, std::int64_t n) {
  std::vector<Pole> poles{{0, 1}};
  for (std::int64_t k = 1; k <= n; ++k) poles.push_back({-k, 2});
  for (std::int64_t k = n + 1; k <= m; ++k) poles.push_back({-k, 1});
  return poles;
}

void check_thm2_shape(std::int64_t l, std::int64_t m, std::int64_t n) {
  if (!(n >= 1 && l > m && m >= n && 2 * n >= l)) {
    throw InvalidShape("need l > m >= n >= l/2, n >= 1 (got l=" + std::to_string(l) +
                       ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

FactoredRatFun build_f_thm1(std::int64_t m, std::int64_t n) {
  if (n < 1 || m < n) {
    throw InvalidShape("need m >= n >= 1 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return FactoredRatFun(rising_one_minus_x(n) * rising_one_minus_x(m), thm_poles(m, n));
}

FactoredRatFun build_f_thm2(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1,
                            const Rational& c2) {
  check_thm2_shape(l, m, n);
  Poly numerator;
  if (!c1.is_zero()) {
    const Poly other = rising_one_minus_x(m);
    Poly part;
    for (std::int64_t s = l - n; s <= n; ++s) part += rising_one_minus_x(n, s) * other;
    numerator += part.scaled(c1);
  }
  if (!c2.is_zero()) {
    const Poly other = rising_one_minus_x(n);
    Poly part;
    for (std::int64_t s = l - m; s <= m; ++s) part += rising_one_minus_x(m, s) * other;
    numerator += part.scaled(c2);
  }
  return FactoredRatFun(std::move(numerator), thm_poles(m, n));
}

Rational eval_exact(const FactoredRatFun& f, const Rational& x) {
  Rational den(1);
  for (const Pole& p : f.poles()) {
    const Rational factor = x - Rational(p.location);
    if (factor.is_zero()) throw PoleEvaluation("x = " + x.str() + " is a pole");
    den *= factor.pow(p.multiplicity);
  }
  return f.numerator()(x) / den;
}

namespace {

// Leading Laurent coefficients at `pole`: element j is the coefficient of
// (x - loc)^(j - multiplicity), j = 0..multiplicity-1.
std::vector<Rational> principal_part(const FactoredRatFun& f, const Pole& pole) {
  const auto order = static_cast<std::size_t>(pole.multiplicity);
  const Rational loc(pole.location);
  const std::vector<Rational> num = f.numerator().shifted_low(loc, order);

  // Remaining denominator as a power series in t = x - loc, truncated to `order` terms.
  std::vector<Rational> den(order);
  den[0] = Rational(1);
  for (const Pole& other : f.poles()) {
    if (other.location == pole.location) continue;
    const Rational offset = loc - Rational(other.location);  // factor (t + offset)
    for (int rep = 0; rep < other.multiplicity; ++rep) {
      for (std::size_t i = order; i-- > 0;) {
        den[i] *= offset;
        if (i > 0) den[i] += den[i - 1];
      }
    }
  }

  // Truncated series division num / den.
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    Rational acc = num[i];
    for (std::size_t j = 0; j < i; ++j) acc -= out[j] * den[i - j];
    out[i] = acc / den[0];
  }
  return out;
}

}  // namespace

PFD laurent_pfd(const FactoredRatFun& f) {
  if (f.numerator().degree() >= f.denominator_degree()) {
    throw ImproperFunction("numerator degree " + std::to_string(f.numerator().degree()) +
                           " >= denominator degree " + std::to_string(f.denominator_degree()));
  }
  std::vector<Pole> poles = f.poles();
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) { return a.location > b.location; });
  if (poles.empty() || poles.front().location != 0 || poles.front().multiplicity != 1) {
    throw InvalidShape("expected a simple pole at 0");
  }

  PFD out;
  out.a = principal_part(f, poles.front())[0];
  bool in_simple_tail = false;
  for (std::size_t i = 1; i < poles.size(); ++i) {
    const Pole& p = poles[i];
    const std::int64_t k = -p.location;
    if (k != static_cast<std::int64_t>(i)) throw InvalidShape("pole locations must be 0, -1, -2, ...");
    const auto coeffs = principal_part(f, p);
    if (p.multiplicity == 2) {
      if (in_simple_tail) throw InvalidShape("double pole after simple poles");
      out.quad.push_back({k, coeffs[0], coeffs[1]});
      out.n = k;
    } else {
      in_simple_tail = true;
      out.simple.push_back({k, coeffs[0]});
    }
  }
  out.m = static_cast<std::int64_t>(poles.size()) - 1;
  return out;
}

Rational PFD::residue_sum() const {
  Rational acc = a;
  for (const auto& t : quad) acc += t.c;
  for (const auto& t : simple) acc += t.d;
  return acc;
}

Rational recombine(const PFD& pfd, const Rational& x) {
  if (x.is_zero()) throw PoleEvaluation("x = 0 is a pole");
  Rational acc = pfd.a / x;
  for (const auto& t : pfd.quad) {
    const Rational shifted = x + Rational(t.k);
    if (shifted.is_zero()) throw PoleEvaluation("x = " + x.str() + " is a pole");
    acc += t.b / (shifted * shifted) + t.c / shifted;
  }
  for (const auto& t : pfd.simple) {
    const Rational shifted = x + Rational(t.k);
    if (shifted.is_zero()) throw PoleEvaluation("x = " + x.str() + " is a pole");
    acc += t.d / shifted;
  }
  return acc;
}

}  // namespace binharm
