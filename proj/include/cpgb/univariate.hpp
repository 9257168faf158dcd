#pragma once

// Dense univariate polynomials over Q with Sturm-sequence real root
// isolation.

#include <optional>
#include <vector>

#include "cpgb/polyring.hpp"

namespace cpgb {

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  /// Coefficients from the constant term upward.
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  /// Throws InvalidArgument if `p` involves any variable other than `v`.
  static UnivariatePolynomial from_polynomial(const Polynomial& p, VariableId v);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  double evaluate(double t) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct UnivariateDivision {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};
UnivariateDivision divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Monic gcd.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// p / gcd(p, p'), same roots without multiplicity.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

/// Bound B with every real root in [-B, B].
Rational root_bound(const UnivariatePolynomial& p);

/// Interval (lo, hi] holding exactly one real root, or lo == hi for a root
/// hit exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
};

class SturmSequence {
 public:
  /// `p` must be squarefree and nonzero.
  explicit SturmSequence(const UnivariatePolynomial& p);
  int sign_changes(const Rational& t) const;
  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }
  const UnivariatePolynomial& base() const { return chain_.front(); }

 private:
  std::vector<UnivariatePolynomial> chain_;
};

/// Distinct real roots in the closed interval [lo, hi], ascending.
std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial& p, const Rational& lo,
                                             const Rational& hi);
/// Shrinks an isolating interval of the squarefree part until hi - lo <= width.
RootInterval refine_root(const SturmSequence& sturm, RootInterval interval, const Rational& width);

double midpoint(const RootInterval& r);

/// Exact rational root inside the interval if one exists. Candidate
/// denominators are the divisors of the leading coefficient of the
/// primitive integer form; skipped when that coefficient is huge.
std::optional<Rational> rational_root_in(const UnivariatePolynomial& p, const RootInterval& interval);

}  // namespace cpgb
