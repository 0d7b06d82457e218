#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "binharm/exact.hpp"

namespace binharm {

// Dense polynomial over Q, coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  // c0 + c1*x
  static Poly linear(const Rational& c0, const Rational& c1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a += b.scaled(Rational(-1)); }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly scaled(const Rational& c) const;
  // x -> x + t
  Poly shifted(const Rational& t) const;
  // The first `count` coefficients of p(x + t), via repeated synthetic division.
  std::vector<Rational> shifted_low(const Rational& t, std::size_t count) const;
  Poly derivative() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct Pole {
  std::int64_t location;  // <= 0
  int multiplicity;       // 1 or 2; an upper bound on the true order
  friend bool operator==(const Pole&, const Pole&) = default;
};

// numerator(x) / prod (x - location)^multiplicity.
class FactoredRatFun {
 public:
  FactoredRatFun(Poly numerator, std::vector<Pole> poles);

  const Poly& numerator() const { return numerator_; }
  const std::vector<Pole>& poles() const { return poles_; }
  long denominator_degree() const;
  Poly denominator() const;

 private:
  Poly numerator_;
  std::vector<Pole> poles_;
};

// Partial fraction coefficients
//   A/x + sum_{k=1..n} [B_k/(x+k)^2 + C_k/(x+k)] + sum_{k=n+1..m} D_k/(x+k).
struct PFD {
  struct Double {
    std::int64_t k;
    Rational b;
    Rational c;
    friend bool operator==(const Double&, const Double&) = default;
  };
  struct Simple {
    std::int64_t k;
    Rational d;
    friend bool operator==(const Simple&, const Simple&) = default;
  };

  std::int64_t n = 0;
  std::int64_t m = 0;
  Rational a;
  std::vector<Double> quad;
  std::vector<Simple> simple;

  friend bool operator==(const PFD&, const PFD&) = default;

  // A + sum C_k + sum D_k, the coefficient of 1/x at infinity.
  Rational residue_sum() const;
};

// x (1-x)_n (1-x)_m / ((x)_{n+1} (x)_{m+1}) with the common factor x cancelled.
FactoredRatFun build_f_thm1(std::int64_t m, std::int64_t n);

// The thm1 function times c1*sum_{s=l-n..n} 1/(s-x) + c2*sum_{s=l-m..m} 1/(s-x),
// every 1/(s-x) cancelled against the matching factor of (1-x)_n or (1-x)_m.
FactoredRatFun build_f_thm2(std::int64_t l, std::int64_t m, std::int64_t n, const Rational& c1,
                            const Rational& c2);

Rational eval_exact(const FactoredRatFun& f, const Rational& x);

// Laurent coefficients at each pole, read off from a truncated power-series
// division after shifting the pole to the origin. Never uses closed forms.
PFD laurent_pfd(const FactoredRatFun& f);

Rational recombine(const PFD& pfd, const Rational& x);

}  // namespace binharm
