#include <doctest.h>

#include <cmath>

#include "cpgb/error.hpp"
#include "cpgb/solver.hpp"
#include "oracles.hpp"

using namespace cpgb;

namespace {

bool scalar_multiple(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  return primitive_part(a, ord) == primitive_part(b, ord);
}

struct Case {
  ApproximationOrder order;
  const char* elim;
  long double (*rho)(long double);
};

const Case kCases[] = {
    {ApproximationOrder::First, "(x - 1)*(2*l*x - 1)", oracle::rho1},
    {ApproximationOrder::Second, "(x - 1)*((2*l - 1)*x - 1)", oracle::rho2},
    {ApproximationOrder::Third, "(x - 1)*((12*l^3 - 5*l - 1)*x^2 - 2*l*(2*l + 3)*x - l + 1)", oracle::rho3},
};

}  // namespace

TEST_CASE("elimination elements match the published factored forms") {
  for (const auto& c : kCases) {
    auto a = approximate(c.order);
    CHECK(scalar_multiple(a.result.elim, a.registry.parse(c.elim), a.registry.order()));
  }
}

TEST_CASE("elimination element must be unique") {
  VariableRegistry reg;
  GroebnerBasis gb{{reg.parse("x - 1"), reg.parse("y - 1")}, reg.order(), {}};
  CHECK(elimination_polynomial(gb, reg.lambda(), *reg.find(ConfigurationPattern::parse("o"))) ==
        reg.parse("x - 1"));
  GroebnerBasis none{{reg.parse("y - x")}, reg.order(), {}};
  CHECK_THROWS_AS(elimination_polynomial(none, reg.lambda(), *reg.find(ConfigurationPattern::parse("o"))),
                  NoEliminationElement);
  GroebnerBasis two{{reg.parse("x^2 - 1"), reg.parse("l*x - 1")}, reg.order(), {}};
  CHECK_THROWS_AS(elimination_polynomial(two, reg.lambda(), *reg.find(ConfigurationPattern::parse("o"))),
                  MultipleEliminationElements);
}

TEST_CASE("strip_trivial") {
  VariableRegistry reg;
  auto x = *reg.find(ConfigurationPattern::parse("o"));
  auto split = strip_trivial(reg.parse("2*l*x^2 - 2*l*x - x + 1"), reg.lambda(), x);
  CHECK(split.nontrivial == reg.parse("2*l*x - 1"));
  CHECK(split.scalar == 1);
  auto scaled = strip_trivial(reg.parse("-6*l*x^2 + 6*l*x + 3*x - 3"), reg.lambda(), x);
  CHECK(scaled.nontrivial == reg.parse("2*l*x - 1"));
  CHECK(scaled.scalar == -3);
  CHECK_THROWS_AS(strip_trivial(reg.parse("x - 1"), reg.lambda(), x), Degenerate);
  CHECK_THROWS_AS(strip_trivial(reg.parse("(x - 1)*(l - 2)"), reg.lambda(), x), Degenerate);
  CHECK_THROWS_AS(strip_trivial(reg.parse("x^2 + 1"), reg.lambda(), x), NotDivisible);
}

TEST_CASE("factorization identity") {
  for (const auto& c : kCases) {
    auto a = approximate(c.order);
    const auto& r = a.result;
    auto x = Polynomial::variable(r.x);
    CHECK(r.elim == r.elim_scalar * (r.nontrivial * (x - Polynomial(1))));
  }
}

TEST_CASE("branch values") {
  auto a1 = approximate(ApproximationOrder::First);
  CHECK(branch_value(a1.result.nontrivial, a1.result.lambda, a1.result.x, Rational(1)) == doctest::Approx(0.5));
  auto a2 = approximate(ApproximationOrder::Second);
  CHECK(branch_value(a2.result.nontrivial, a2.result.lambda, a2.result.x, Rational(1)) == doctest::Approx(1.0));
  auto a3 = approximate(ApproximationOrder::Third);
  CHECK(std::abs(branch_value(a3.result.nontrivial, a3.result.lambda, a3.result.x, 2.0) - oracle::kNu3At2) <
        1e-12);
  CHECK_THROWS_AS(a1.result.extinction(0.3), NoPhysicalRoot);
}

TEST_CASE("ambiguous roots are reported") {
  VariableRegistry reg;
  auto x = *reg.find(ConfigurationPattern::parse("o"));
  auto p = reg.parse("(4*x - 1)*(4*x - 3)*l");
  try {
    branch_value(p, reg.lambda(), x, Rational(2));
    FAIL("expected AmbiguousRoot");
  } catch (const AmbiguousRoot& e) {
    REQUIRE(e.roots().size() == 2);
    CHECK(e.roots()[0] == doctest::Approx(0.25));
    CHECK(e.roots()[1] == doctest::Approx(0.75));
  }
}

TEST_CASE("densities at landmark rates") {
  auto a1 = approximate(ApproximationOrder::First);
  CHECK(density(a1.result, 0.5) == 0.0);
  CHECK(density(a1.result, 0.3) == 0.0);
  auto a2 = approximate(ApproximationOrder::Second);
  CHECK(density(a2.result, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  auto a3 = approximate(ApproximationOrder::Third);
  CHECK(density(a3.result, oracle::kLambdaC3) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(density(a3.result, 3.0) - oracle::kRho3At3) < 1e-12);
  CHECK(std::abs(density(a3.result, 4.0) - oracle::kRho3At4) < 1e-12);
}

TEST_CASE("critical bounds") {
  auto b1 = approximate(ApproximationOrder::First).result.lambda_c;
  REQUIRE(b1.exact);
  CHECK(*b1.exact == Rational(1, 2));
  CHECK(b1.exact_text() == "1/2");
  auto b2 = approximate(ApproximationOrder::Second).result.lambda_c;
  REQUIRE(b2.exact);
  CHECK(*b2.exact == 1);
  auto b3 = approximate(ApproximationOrder::Third).result.lambda_c;
  CHECK_FALSE(b3.exact);
  REQUIRE(b3.surd);
  CHECK(b3.exact_text() == "(1 + sqrt(37))/6");
  CHECK(std::abs(b3.value - oracle::kLambdaC3) <= 1e-12);
  CHECK(std::abs(b3.surd->value() - oracle::kLambdaC3) <= 1e-15);
  CHECK(b1.value < b2.value);
  CHECK(b2.value < b3.value);
}

TEST_CASE("discriminant and closed forms") {
  auto a3 = approximate(ApproximationOrder::Third);
  REQUIRE(a3.result.discriminant);
  CHECK(*a3.result.discriminant == a3.registry.parse("16*l^4 + 4*l^2 + 4*l + 1"));
  CHECK(closed_form_branch(a3.result, a3.registry) == "x = (2*l^2 + 3*l + sqrt(D))/(12*l^3 - 5*l - 1)");
  auto a1 = approximate(ApproximationOrder::First);
  CHECK(closed_form_branch(a1.result, a1.registry) == "x = 1/(2*l)");
  CHECK_FALSE(a1.result.discriminant);
  auto a2 = approximate(ApproximationOrder::Second);
  CHECK(closed_form_branch(a2.result, a2.registry) == "x = 1/(2*l - 1)");
}

TEST_CASE("degenerate order") {
  CHECK_THROWS_AS(approximate(ApproximationOrder::SecondPrime), Degenerate);
}

TEST_CASE("branch agrees with the published densities on 200 samples") {
  for (const auto& c : kCases) {
    auto a = approximate(c.order);
    double lo = a.result.lambda_c.value;
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      double l = lo + (5.0 - lo) * i / 199.0;
      if (i == 0) l = lo + 1e-9;
      double rho = 1.0 - branch_value(a.result.nontrivial, a.result.lambda, a.result.x, l);
      worst = std::max(worst, std::abs(rho - static_cast<double>(c.rho(l))));
    }
    CAPTURE(to_string(c.order));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("density lies in [0, 1) and is nondecreasing") {
  for (const auto& c : kCases) {
    auto a = approximate(c.order);
    double lo = a.result.lambda_c.value;
    double prev = -1;
    for (int i = 0; i <= 400; ++i) {
      double l = lo + (10.0 - lo) * i / 400.0;
      double rho = a.result.density(l);
      CHECK(rho >= 0.0);
      CHECK(rho < 1.0);
      CHECK(rho >= prev - 1e-14);
      prev = rho;
    }
  }
}
