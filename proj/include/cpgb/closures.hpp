#pragma once

// Closure relations that truncate the identity hierarchy, and the ideals
// they generate together with the identities.

#include <string>
#include <string_view>
#include <vector>

#include "cpgb/identities.hpp"
#include "cpgb/polyring.hpp"

namespace cpgb {

/// lhs[0]*lhs[1]*... = rhs[0]*rhs[1]*... over pattern variables.
struct ClosureRelation {
  std::vector<ConfigurationPattern> lhs;
  std::vector<ConfigurationPattern> rhs;
};

/// Reads `o*ooxo=oo*oxo`. Either side may be `1` for the empty product.
ClosureRelation parse_relation(std::string_view text);
std::string to_string(const ClosureRelation& relation);

enum class SchemeKind { MeanField1, Pair2, Naive2Prime, Third3, Custom };

struct ClosureScheme {
  SchemeKind kind = SchemeKind::Custom;
  std::vector<ClosureRelation> relations;

  static ClosureScheme mean_field();    // y = x^2
  static ClosureScheme pair();          // x z = y^2
  static ClosureScheme naive_pair();    // y = x^2, z = x^3
  static ClosureScheme third();         // y s = z^2, x u = y w
  static ClosureScheme custom(std::vector<ClosureRelation> relations);

  std::string name() const;
};

/// One polynomial LHS - RHS per relation, in relation order.
std::vector<Polynomial> closure_polynomials(const ClosureScheme& scheme, VariableRegistry& registry);

/// The built-in approximation levels: 1, 2, 2prime, 3.
enum class ApproximationOrder { First, Second, SecondPrime, Third };

ApproximationOrder parse_approximation_order(std::string_view label);
std::string to_string(ApproximationOrder order);
std::vector<ConfigurationPattern> identity_patterns(ApproximationOrder order);
ClosureScheme closure_scheme(ApproximationOrder order);

struct Ideal {
  std::string label;
  std::vector<ConfigurationPattern> identity_patterns;
  ClosureScheme scheme;
  /// Identities first, then closures.
  std::vector<Polynomial> generators;
};

Ideal build_ideal(ApproximationOrder order, VariableRegistry& registry);
Ideal build_ideal(std::vector<ConfigurationPattern> identity_patterns, ClosureScheme scheme,
                  VariableRegistry& registry, std::string label = "custom");

}  // namespace cpgb
