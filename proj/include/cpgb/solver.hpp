#pragma once

// From a reduced lex basis to the extinction branch x(λ) = ν(o), the
// density ρ(λ) = 1 - x(λ) and the critical bound.

#include <optional>
#include <string>
#include <vector>

#include "cpgb/closures.hpp"
#include "cpgb/groebner.hpp"
#include "cpgb/identities.hpp"
#include "cpgb/univariate.hpp"

namespace cpgb {

/// (offset + coefficient * sqrt(radicand)) / denominator, all integers,
/// radicand square-free and > 1.
struct QuadraticSurd {
  Integer offset;
  Integer coefficient;
  Integer radicand;
  Integer denominator;

  double value() const;
  std::string str() const;
};

struct CriticalBound {
  double value = 0;
  std::optional<Rational> exact;
  std::optional<QuadraticSurd> surd;

  /// Exact form when known, e.g. `1/2` or `(1 + sqrt(37))/6`.
  std::optional<std::string> exact_text() const;
};

struct ApproximationResult {
  std::string order_label;
  VariableId lambda;
  VariableId x;
  /// Basis element in λ and x only.
  Polynomial elim;
  /// Primitive quotient of elim by (x - 1).
  Polynomial nontrivial;
  /// elim = elim_scalar * (x - 1) * nontrivial.
  Rational elim_scalar;
  CriticalBound lambda_c;
  /// For a nontrivial factor quadratic in x: primitive part of b^2 - 4ac.
  std::optional<Polynomial> discriminant;

  /// ν(o) on the physical branch; NoPhysicalRoot below the bound.
  double extinction(double lambda0) const;
  /// ρ(λ); zero below the critical bound.
  double density(double lambda0) const;
};

/// The unique basis element whose variables are within {λ, x}.
Polynomial elimination_polynomial(const GroebnerBasis& gb, VariableId lambda, VariableId x);

struct TrivialSplit {
  Polynomial nontrivial;
  Rational scalar;
};

/// Divides out (x - 1). NotDivisible when the factor is missing, Degenerate
/// when the quotient does not depend on x.
TrivialSplit strip_trivial(const Polynomial& elim, VariableId lambda, VariableId x);

/// The unique root in [0, 1] of nontrivial(λ0, x), to 1e-12.
double branch_value(const Polynomial& nontrivial, VariableId lambda, VariableId x, const Rational& lambda0);
double branch_value(const Polynomial& nontrivial, VariableId lambda, VariableId x, double lambda0);

/// Largest real root of nontrivial(λ, 1), with an exact form when it is
/// rational or a quadratic surd.
CriticalBound critical_bound(const Polynomial& nontrivial, VariableId lambda, VariableId x);

double density(const ApproximationResult& result, double lambda0);

/// Branch in closed form when the nontrivial factor is linear or quadratic
/// in x, e.g. `x = 1/(2*l)`. Uses the registry's names; `D` stands for the
/// discriminant.
std::optional<std::string> closed_form_branch(const ApproximationResult& result,
                                              const VariableRegistry& registry);

/// Runs elimination, trivial-factor removal and bound extraction.
ApproximationResult solve(const GroebnerBasis& gb, const VariableRegistry& registry, std::string label);

/// Full pipeline for a built-in order: ideal, basis, solution.
struct Approximation {
  VariableRegistry registry;
  Ideal ideal;
  GroebnerBasis basis;
  ApproximationResult result;
};
/// Throws Degenerate for 2prime.
Approximation approximate(ApproximationOrder order);

}  // namespace cpgb
