#include <cctype>

#include <fmt/format.h>

#include "cpgb/closures.hpp"
#include "cpgb/error.hpp"

namespace cpgb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<ConfigurationPattern> parse_product(std::string_view text) {
  std::vector<ConfigurationPattern> out;
  text = trim(text);
  if (text == "1") return out;
  std::size_t start = 0;
  for (;;) {
    auto star = text.find('*', start);
    auto factor = trim(text.substr(start, star == std::string_view::npos ? text.npos : star - start));
    if (factor.empty()) throw InvalidArgument(fmt::format("empty factor in '{}'", text));
    out.push_back(ConfigurationPattern::parse(factor));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

std::string product_string(const std::vector<ConfigurationPattern>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += f.str();
  }
  return out;
}

ClosureScheme make(SchemeKind kind, std::initializer_list<const char*> relations) {
  ClosureScheme s;
  s.kind = kind;
  for (const char* r : relations) s.relations.push_back(parse_relation(r));
  return s;
}

}  // namespace

ClosureRelation parse_relation(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw InvalidArgument(fmt::format("closure relation '{}' needs exactly one '='", text));
  return {parse_product(text.substr(0, eq)), parse_product(text.substr(eq + 1))};
}

std::string to_string(const ClosureRelation& relation) {
  return product_string(relation.lhs) + "=" + product_string(relation.rhs);
}

ClosureScheme ClosureScheme::mean_field() { return make(SchemeKind::MeanField1, {"oo=o*o"}); }
ClosureScheme ClosureScheme::pair() { return make(SchemeKind::Pair2, {"o*ooo=oo*oo"}); }
ClosureScheme ClosureScheme::naive_pair() {
  return make(SchemeKind::Naive2Prime, {"oo=o*o", "ooo=o*o*o"});
}
ClosureScheme ClosureScheme::third() {
  return make(SchemeKind::Third3, {"oo*oooo=ooo*ooo", "o*ooxo=oo*oxo"});
}
ClosureScheme ClosureScheme::custom(std::vector<ClosureRelation> relations) {
  return ClosureScheme{SchemeKind::Custom, std::move(relations)};
}

std::string ClosureScheme::name() const {
  switch (kind) {
    case SchemeKind::MeanField1: return "mean_field_1";
    case SchemeKind::Pair2: return "pair_2";
    case SchemeKind::Naive2Prime: return "naive_2prime";
    case SchemeKind::Third3: return "third_3";
    case SchemeKind::Custom: return "custom";
  }
  return "custom";
}

std::vector<Polynomial> closure_polynomials(const ClosureScheme& scheme, VariableRegistry& registry) {
  auto product = [&](const std::vector<ConfigurationPattern>& factors) {
    Polynomial p(1);
    for (const auto& f : factors) p = p * Polynomial::variable(registry.register_pattern(f));
    return p;
  };
  std::vector<Polynomial> out;
  out.reserve(scheme.relations.size());
  for (const auto& r : scheme.relations) out.push_back(product(r.lhs) - product(r.rhs));
  return out;
}

ApproximationOrder parse_approximation_order(std::string_view label) {
  if (label == "1") return ApproximationOrder::First;
  if (label == "2") return ApproximationOrder::Second;
  if (label == "2prime" || label == "2'") return ApproximationOrder::SecondPrime;
  if (label == "3") return ApproximationOrder::Third;
  throw InvalidArgument(fmt::format("unknown approximation order '{}' (expected 1, 2, 2prime or 3)", label));
}

std::string to_string(ApproximationOrder order) {
  switch (order) {
    case ApproximationOrder::First: return "1";
    case ApproximationOrder::Second: return "2";
    case ApproximationOrder::SecondPrime: return "2prime";
    case ApproximationOrder::Third: return "3";
  }
  return "?";
}

std::vector<ConfigurationPattern> identity_patterns(ApproximationOrder order) {
  std::vector<ConfigurationPattern> out = {ConfigurationPattern::parse("o")};
  if (order != ApproximationOrder::First) out.push_back(ConfigurationPattern::parse("oo"));
  if (order == ApproximationOrder::Third) {
    out.push_back(ConfigurationPattern::parse("ooo"));
    out.push_back(ConfigurationPattern::parse("oxo"));
  }
  return out;
}

ClosureScheme closure_scheme(ApproximationOrder order) {
  switch (order) {
    case ApproximationOrder::First: return ClosureScheme::mean_field();
    case ApproximationOrder::Second: return ClosureScheme::pair();
    case ApproximationOrder::SecondPrime: return ClosureScheme::naive_pair();
    case ApproximationOrder::Third: return ClosureScheme::third();
  }
  return ClosureScheme::custom({});
}

Ideal build_ideal(std::vector<ConfigurationPattern> patterns, ClosureScheme scheme,
                  VariableRegistry& registry, std::string label) {
  Ideal ideal{std::move(label), std::move(patterns), std::move(scheme), {}};
  ideal.generators = identity_system(ideal.identity_patterns, registry);
  for (auto& c : closure_polynomials(ideal.scheme, registry)) ideal.generators.push_back(std::move(c));
  return ideal;
}

Ideal build_ideal(ApproximationOrder order, VariableRegistry& registry) {
  return build_ideal(identity_patterns(order), closure_scheme(order), registry, to_string(order));
}

}  // namespace cpgb
