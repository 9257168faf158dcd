#pragma once

// One-dimensional correlation identities for the upper invariant measure,
// indexed by translation- and reflection-reduced site patterns.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpgb/polyring.hpp"

namespace cpgb {

/// Finite nonempty subset of Z, anchored at 0 and reflection-reduced.
/// Rendered over sites min..max with `o` for occupied and `x` for gaps.
class ConfigurationPattern {
 public:
  /// Translates to anchor 0, then keeps the smaller of the pattern string
  /// and its reversal. Throws EmptyPattern.
  static ConfigurationPattern canonicalize(std::span<const int> sites);
  /// Reads an `o`/`x` string; the result is canonicalized.
  static ConfigurationPattern parse(std::string_view text);

  const std::vector<int>& sites() const { return sites_; }
  int span() const { return sites_.back() + 1; }
  std::size_t size() const { return sites_.size(); }
  std::string str() const;

  friend bool operator==(const ConfigurationPattern&, const ConfigurationPattern&) = default;
  friend bool operator<(const ConfigurationPattern& a, const ConfigurationPattern& b) {
    return a.sites_ < b.sites_;
  }

 private:
  std::vector<int> sites_;
};

inline ConfigurationPattern canonicalize(std::span<const int> sites) {
  return ConfigurationPattern::canonicalize(sites);
}

/// Maps patterns to ring variables. Preloaded with λ (`l`) and the seven
/// low-order symbols; further patterns get names `v<k>`.
class VariableRegistry {
 public:
  VariableRegistry();

  VariableId lambda() const { return kLambda; }
  /// Idempotent.
  VariableId register_pattern(const ConfigurationPattern& pattern);
  VariableId register_pattern(std::string_view pattern) {
    return register_pattern(ConfigurationPattern::parse(pattern));
  }
  std::optional<VariableId> find(const ConfigurationPattern& pattern) const;
  /// nullptr for λ.
  const ConfigurationPattern* pattern(VariableId v) const;

  Polynomial var(std::string_view pattern) { return Polynomial::variable(register_pattern(pattern)); }

  const VariableNames& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::vector<VariableId> configuration_variables() const;

  /// Lex with λ lowest, then patterns by (span, occupied count, string).
  /// Reproduces λ < x < y < w < z < u < s.
  MonomialOrder order() const;

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, names_); }
  std::string format(const Polynomial& p) const { return format_polynomial(p, names_, order()); }

 private:
  VariableNames names_;
  std::vector<ConfigurationPattern> patterns_;  // by id - 1
  std::map<ConfigurationPattern, VariableId> ids_;
};

/// Stationarity identity for ν(A): births into neighbors of A at rate λ per
/// occupied neighbor, deaths at rate 1, with ν(∅) = 1. Content-normalized
/// with a positive leading coefficient under the registry order.
Polynomial correlation_identity(const ConfigurationPattern& pattern, VariableRegistry& registry);

/// Identities for `o` (m=1), plus `oo` (m=2), plus `ooo`, `oxo` (m=3).
std::vector<Polynomial> identity_system(int order, VariableRegistry& registry);
std::vector<Polynomial> identity_system(std::span<const ConfigurationPattern> patterns,
                                        VariableRegistry& registry);

}  // namespace cpgb
