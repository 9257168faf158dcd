// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances, seeds and simulation sizes are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cpgb/closures.hpp"
#include "cpgb/error.hpp"
#include "cpgb/groebner.hpp"
#include "cpgb/identities.hpp"
#include "cpgb/simulator.hpp"
#include "cpgb/solver.hpp"
#include "oracles.hpp"

using namespace cpgb;

namespace {

constexpr double kClosedFormTolerance = 1e-10;
constexpr double kLambdaC3Tolerance = 1e-12;
constexpr double kDensityTolerance = 0.05;
constexpr double kDualityTolerance = 0.05;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

bool scalar_multiple(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  return !a.is_zero() && primitive_part(a, ord) == primitive_part(b, ord);
}

GroebnerBasis basis_for(ApproximationOrder order, VariableRegistry& reg) {
  return buchberger(build_ideal(order, reg).generators, reg.order());
}

Outcome identity_fixtures() {
  VariableRegistry reg;
  const std::pair<const char*, const char*> fixtures[] = {
      {"o", "2*l*y - 2*l*x - x + 1"},
      {"oo", "l*z - l*y - y + x"},
      {"ooo", "2*l*s + w - (2*l + 3)*z + 2*y"},
      {"oxo", "l*u - (2*l + 1)*w + l*z + x"},
  };
  int matched = 0;
  for (const auto& [pattern, expected] : fixtures)
    matched += correlation_identity(ConfigurationPattern::parse(pattern), reg) == reg.parse(expected);
  return {matched == 4, fmt::format("{}/4 identities equal", matched)};
}

Outcome g1_reproduction() {
  VariableRegistry reg;
  auto gb = basis_for(ApproximationOrder::First, reg);
  bool ok = gb.elements.size() == 2 &&
            scalar_multiple(gb.elements[0], reg.parse("(x - 1)*(2*l*x - 1)"), gb.order) &&
            gb.elements[1] == reg.parse("y - x^2");
  return {ok, fmt::format("{} elements", gb.elements.size())};
}

Outcome g2_reproduction() {
  VariableRegistry reg;
  auto gb = basis_for(ApproximationOrder::Second, reg);
  auto elim = elimination_polynomial(gb, reg.lambda(), *reg.find(ConfigurationPattern::parse("o")));
  bool elim_ok = scalar_multiple(elim, reg.parse("(x - 1)*((2*l - 1)*x - 1)"), gb.order);
  int members = 0;
  for (const char* p : {"(x - 1)*((2*l - 1)*x - 1)", "1 + 2*l*(y - x) - x", "-y - y*x + 2*x^2",
                        "-z - y*(2 + y) + 4*x^2"})
    members += is_member(reg.parse(p), gb);
  return {elim_ok && members == 4,
          fmt::format("elimination {}, {}/4 listed elements in the ideal", elim_ok ? "matches" : "differs", members)};
}

Outcome g2prime_degenerate() {
  VariableRegistry reg;
  auto gb = basis_for(ApproximationOrder::SecondPrime, reg);
  bool basis_ok =
      gb.elements == std::vector<Polynomial>{reg.parse("x - 1"), reg.parse("y - 1"), reg.parse("z - 1")};
  bool degenerate = false;
  try {
    solve(gb, reg, "2prime");
  } catch (const Degenerate&) {
    degenerate = true;
  }
  return {basis_ok && degenerate, fmt::format("basis {}, solver {}", basis_ok ? "{x-1, y-1, z-1}" : "differs",
                                              degenerate ? "reports Degenerate" : "did not report Degenerate")};
}

Outcome g3_elimination() {
  VariableRegistry reg;
  auto gb = basis_for(ApproximationOrder::Third, reg);
  auto elim = elimination_polynomial(gb, reg.lambda(), *reg.find(ConfigurationPattern::parse("o")));
  bool ok = scalar_multiple(elim, reg.parse("(x - 1)*((12*l^3 - 5*l - 1)*x^2 - 2*l*(2*l + 3)*x - l + 1)"),
                            gb.order);
  return {ok, fmt::format("{} basis elements", gb.elements.size())};
}

Outcome closed_form_agreement() {
  struct Case {
    ApproximationOrder order;
    long double (*rho)(long double);
  };
  const Case cases[] = {{ApproximationOrder::First, oracle::rho1},
                        {ApproximationOrder::Second, oracle::rho2},
                        {ApproximationOrder::Third, oracle::rho3}};
  std::string detail;
  bool ok = true;
  for (const auto& c : cases) {
    auto a = approximate(c.order);
    double lo = a.result.lambda_c.value;
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      // The first sample sits just above the bound, where the branch meets x = 1.
      double l = i == 0 ? lo + 1e-9 : lo + (5.0 - lo) * i / 199.0;
      double rho = 1.0 - branch_value(a.result.nontrivial, a.result.lambda, a.result.x, l);
      worst = std::max(worst, std::abs(rho - static_cast<double>(c.rho(l))));
    }
    ok = ok && worst <= kClosedFormTolerance;
    detail += fmt::format("{}max err {}: {:.2e}", detail.empty() ? "" : ", ", to_string(c.order), worst);
  }
  return {ok, detail};
}

Outcome critical_bounds() {
  auto b1 = approximate(ApproximationOrder::First).result.lambda_c;
  auto b2 = approximate(ApproximationOrder::Second).result.lambda_c;
  auto b3 = approximate(ApproximationOrder::Third).result.lambda_c;
  bool ok1 = b1.exact && *b1.exact == Rational(1, 2);
  bool ok2 = b2.exact && *b2.exact == 1;
  double err3 = std::abs(b3.value - oracle::kLambdaC3);
  return {ok1 && ok2 && err3 <= kLambdaC3Tolerance,
          fmt::format("{}, {}, {:.15f} (err {:.1e})", b1.exact_text().value_or("?"),
                      b2.exact_text().value_or("?"), b3.value, err3)};
}

Outcome trivial_solution() {
  VariableRegistry reg;
  int patterns = 0, annihilated = 0;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<int> sites;
    for (int i = 0; i < 6; ++i)
      if (mask & (1u << i)) sites.push_back(i);
    auto p = correlation_identity(canonicalize(sites), reg);
    for (VariableId v : reg.configuration_variables()) p = p.substitute(v, Rational(1));
    ++patterns;
    annihilated += p.is_zero();
  }
  int divisible = 0;
  for (auto order : {ApproximationOrder::First, ApproximationOrder::Second, ApproximationOrder::Third}) {
    VariableRegistry r;
    auto gb = basis_for(order, r);
    auto x = *r.find(ConfigurationPattern::parse("o"));
    auto elim = elimination_polynomial(gb, r.lambda(), x);
    try {
      exact_divide(elim, Polynomial::variable(x) - Polynomial(1));
      ++divisible;
    } catch (const NotDivisible&) {
    }
  }
  return {annihilated == patterns && divisible == 3,
          fmt::format("{}/{} patterns annihilated, (x-1) divides {}/3 elimination elements", annihilated, patterns,
                      divisible)};
}

Outcome rate_audit() {
  std::size_t states = 0, mismatches = 0;
  for (std::size_t L = 3; L <= 8; ++L) {
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      LatticeState s(L);
      std::vector<int> eta(L);
      for (std::size_t i = 0; i < L; ++i) {
        eta[i] = (mask >> i) & 1u;
        s.set(i, eta[i] != 0);
      }
      auto w = s.event_weights();
      for (std::size_t i = 0; i < L; ++i) {
        auto r = oracle::flip_rate(eta, i);
        // Integer weights of 1 and λ, so equality of the pairs is exact.
        mismatches += (w[i].death != r.constant || w[i].infection != r.lambda);
      }
      ++states;
    }
  }
  return {mismatches == 0, fmt::format("{} states, {} site mismatches", states, mismatches)};
}

Outcome simulation_landmarks() {
  SimConfig sub;
  sub.lambda = 0.3;
  sub.L = 200;
  sub.T = 200;
  sub.replicas = 2000;
  sub.seed = kSeed;
  auto e_sub = extinction_probability(sub);

  SimConfig super = sub;
  super.lambda = 3.0;
  super.L = 400;
  auto e_super = extinction_probability(super);

  SimConfig low;
  low.lambda = 1.0;
  low.L = 400;
  low.T = 400;
  low.replicas = 100;
  low.seed = kSeed;
  low.initial = InitialCondition::all_ones();
  auto d_low = density_estimate(low);

  SimConfig high = low;
  high.lambda = 4.0;
  high.T = 100;
  high.replicas = 200;
  auto d_high = density_estimate(high);
  double rho3 = approximate(ApproximationOrder::Third).result.density(4.0);

  bool ok = e_sub.mean >= 0.99 && e_super.mean <= 0.9 && d_low.mean <= 0.02 &&
            std::abs(d_high.mean - rho3) <= kDensityTolerance;
  return {ok, fmt::format("ext(0.3)={:.4f} ext(3)={:.4f} rho(1)={:.4f} rho(4)={:.4f} vs {:.4f}", e_sub.mean,
                          e_super.mean, d_low.mean, d_high.mean, rho3)};
}

Outcome duality() {
  auto d = duality_check(2.5, ConfigurationPattern::parse("o"), 400, 300, 2000, kSeed);
  double gap = std::abs(d.vacancy.mean - d.extinction.mean);
  return {gap <= kDualityTolerance,
          fmt::format("nu={:.4f}+-{:.4f} ext={:.4f}+-{:.4f} gap={:.4f}", d.vacancy.mean, d.vacancy.half_width,
                      d.extinction.mean, d.extinction.half_width, gap)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "identity fixtures", 1, identity_fixtures},
      {2, "first-order basis", 1, g1_reproduction},
      {3, "second-order basis", 1, g2_reproduction},
      {4, "degenerate second-order variant", 1, g2prime_degenerate},
      {5, "third-order elimination element", 5, g3_elimination},
      {6, "closed-form agreement", 5, closed_form_agreement},
      {7, "critical bounds", 1, critical_bounds},
      {8, "trivial-solution invariant", 5, trivial_solution},
      {9, "rate audit", 10, rate_audit},
      {10, "simulation landmarks", 300, simulation_landmarks},
      {11, "duality cross-check", 120, duality},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds <= c.limit_seconds;
    bool pass = o.pass && in_time;
    failures += !pass;
    fmt::print("{} {:2d} {}: {} [{:.2f}s / {:g}s{}]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail, seconds,
               c.limit_seconds, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
