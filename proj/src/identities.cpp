#include <algorithm>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "cpgb/error.hpp"
#include "cpgb/identities.hpp"

namespace cpgb {

namespace {

std::string render(const std::vector<int>& anchored) {
  std::string s(static_cast<std::size_t>(anchored.back() + 1), 'x');
  for (int site : anchored) s[static_cast<std::size_t>(site)] = 'o';
  return s;
}

}  // namespace

ConfigurationPattern ConfigurationPattern::canonicalize(std::span<const int> sites) {
  if (sites.empty()) throw EmptyPattern();
  std::set<int> unique(sites.begin(), sites.end());
  int lo = *unique.begin();
  int hi = *unique.rbegin();
  std::vector<int> forward;
  std::vector<int> backward;
  for (int s : unique) forward.push_back(s - lo);
  for (auto it = unique.rbegin(); it != unique.rend(); ++it) backward.push_back(hi - *it);
  ConfigurationPattern p;
  p.sites_ = render(backward) < render(forward) ? std::move(backward) : std::move(forward);
  return p;
}

ConfigurationPattern ConfigurationPattern::parse(std::string_view text) {
  std::vector<int> sites;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'o')
      sites.push_back(static_cast<int>(i));
    else if (text[i] != 'x')
      throw ParseError(fmt::format("invalid pattern character '{}'", text[i]), i);
  }
  return canonicalize(sites);
}

std::string ConfigurationPattern::str() const { return render(sites_); }

VariableRegistry::VariableRegistry() {
  names_.add("l");
  // Ring indices follow λ, x, y, z, w, s, u.
  const std::pair<const char*, const char*> preload[] = {
      {"o", "x"}, {"oo", "y"}, {"ooo", "z"}, {"oxo", "w"}, {"oooo", "s"}, {"ooxo", "u"}};
  for (const auto& [pattern, name] : preload) {
    auto p = ConfigurationPattern::parse(pattern);
    VariableId id = names_.add(name);
    patterns_.push_back(p);
    ids_.emplace(p, id);
  }
}

VariableId VariableRegistry::register_pattern(const ConfigurationPattern& pattern) {
  if (auto id = find(pattern)) return *id;
  VariableId id{static_cast<std::uint32_t>(names_.size())};
  names_.add(fmt::format("v{}", id.index));
  patterns_.push_back(pattern);
  ids_.emplace(pattern, id);
  return id;
}

std::optional<VariableId> VariableRegistry::find(const ConfigurationPattern& pattern) const {
  auto it = ids_.find(pattern);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const ConfigurationPattern* VariableRegistry::pattern(VariableId v) const {
  if (v == kLambda || v.index > patterns_.size()) return nullptr;
  return &patterns_[v.index - 1];
}

std::vector<VariableId> VariableRegistry::configuration_variables() const {
  std::vector<VariableId> out;
  for (std::uint32_t i = 1; i < names_.size(); ++i) out.push_back(VariableId{i});
  return out;
}

MonomialOrder VariableRegistry::order() const {
  auto vars = configuration_variables();
  auto key = [&](VariableId v) {
    const auto& p = patterns_[v.index - 1];
    return std::make_tuple(p.span(), p.size(), p.str());
  };
  std::sort(vars.begin(), vars.end(), [&](VariableId a, VariableId b) { return key(a) < key(b); });
  vars.insert(vars.begin(), kLambda);
  return MonomialOrder::lex(std::move(vars));
}

Polynomial correlation_identity(const ConfigurationPattern& pattern, VariableRegistry& registry) {
  const auto& sites = pattern.sites();
  auto nu = [&](const std::set<int>& a) -> Polynomial {
    if (a.empty()) return Polynomial(1);
    std::vector<int> v(a.begin(), a.end());
    return Polynomial::variable(registry.register_pattern(ConfigurationPattern::canonicalize(v)));
  };
  const std::set<int> base(sites.begin(), sites.end());
  const Polynomial nu_a = nu(base);
  const Polynomial lambda = Polynomial::variable(registry.lambda());

  Polynomial births;
  Polynomial deaths;
  for (int site : sites) {
    for (int neighbor : {site - 1, site + 1}) {
      if (base.contains(neighbor)) continue;
      auto grown = base;
      grown.insert(neighbor);
      births += nu(grown) - nu_a;
    }
    auto shrunk = base;
    shrunk.erase(site);
    deaths += nu(shrunk) - nu_a;
  }
  Polynomial identity = lambda * births + deaths;
  return primitive_part(identity, registry.order());
}

std::vector<Polynomial> identity_system(std::span<const ConfigurationPattern> patterns,
                                        VariableRegistry& registry) {
  std::vector<Polynomial> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(correlation_identity(p, registry));
  return out;
}

std::vector<Polynomial> identity_system(int order, VariableRegistry& registry) {
  std::vector<ConfigurationPattern> patterns;
  switch (order) {
    case 3:
      patterns = {ConfigurationPattern::parse("o"), ConfigurationPattern::parse("oo"),
                  ConfigurationPattern::parse("ooo"), ConfigurationPattern::parse("oxo")};
      break;
    case 2:
      patterns = {ConfigurationPattern::parse("o"), ConfigurationPattern::parse("oo")};
      break;
    case 1:
      patterns = {ConfigurationPattern::parse("o")};
      break;
    default:
      throw InvalidArgument(
          fmt::format("no built-in identity system for order {}; pass an explicit pattern list", order));
  }
  return identity_system(patterns, registry);
}

}  // namespace cpgb
