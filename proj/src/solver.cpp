#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cpgb/error.hpp"
#include "cpgb/solver.hpp"

namespace cpgb {

namespace {

// 2^-50: well inside the 1e-12 target.
const Rational kBranchWidth = Rational(1, 1) / Rational(Integer(1) << 50);
// 2^-60 for the critical bound, so rational reconstruction sees a narrow interval.
const Rational kBoundWidth = Rational(1, 1) / Rational(Integer(1) << 60);

/// Coefficients of p viewed as a polynomial in v: result[k] multiplies v^k.
std::vector<Polynomial> coefficients_in(const Polynomial& p, VariableId v) {
  std::vector<Polynomial> out(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exponent(v);
    out[e] += Polynomial::term(c, *quotient(m, Monomial::variable(v, e)));
  }
  return out;
}

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

/// n = k^2 * t with t square-free (trial division, capped).
std::pair<Integer, Integer> split_square(const Integer& n) {
  Integer k = 1;
  Integer t = n;
  for (unsigned long p = 2; p < 1'000'000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > t) break;
    while (t % pp == 0) {
      t /= pp;
      k *= p;
    }
  }
  return {k, t};
}

bool needs_parens(const Polynomial& p) { return p.size() > 1; }

/// Denominators stay bare only when they are a single variable power.
bool needs_parens_below(const Polynomial& p) {
  if (p.size() != 1) return true;
  const auto& [m, c] = *p.terms().begin();
  return c != 1 || m.entries().size() > 1;
}

std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

}  // namespace

double QuadraticSurd::value() const {
  return (offset.get_d() + coefficient.get_d() * std::sqrt(radicand.get_d())) / denominator.get_d();
}

std::string QuadraticSurd::str() const {
  std::string root = coefficient == 1 ? fmt::format("sqrt({})", radicand.get_str())
                                      : fmt::format("{}*sqrt({})", coefficient.get_str(), radicand.get_str());
  std::string num = offset == 0 ? root
                                : fmt::format("{} {} {}", offset.get_str(), coefficient < 0 ? "-" : "+",
                                              coefficient < 0 ? root.substr(1) : root);
  if (denominator == 1) return num;
  return fmt::format("({})/{}", num, denominator.get_str());
}

std::optional<std::string> CriticalBound::exact_text() const {
  if (exact) return exact->get_str();
  if (surd) return surd->str();
  return std::nullopt;
}

Polynomial elimination_polynomial(const GroebnerBasis& gb, VariableId lambda, VariableId x) {
  const VariableId allowed[] = {lambda, x};
  std::vector<Polynomial> found;
  for (const auto& g : gb.elements)
    if (g.uses_only(allowed) && g.degree_in(x) > 0) found.push_back(g);
  if (found.empty())
    throw NoEliminationElement("no basis element in the infection rate and x alone; the closure leaves x free");
  if (found.size() > 1)
    throw MultipleEliminationElements(
        fmt::format("{} basis elements involve only the infection rate and x", found.size()));
  return found.front();
}

TrivialSplit strip_trivial(const Polynomial& elim, VariableId lambda, VariableId x) {
  Polynomial q = exact_divide(elim, Polynomial::variable(x) - Polynomial(1));
  auto split = split_content(q, MonomialOrder::lex({lambda, x}));
  if (split.primitive.degree_in(x) == 0)
    throw Degenerate("only the trivial solution x = 1 remains after elimination");
  return {std::move(split.primitive), split.scalar};
}

double branch_value(const Polynomial& nontrivial, VariableId lambda, VariableId x, const Rational& lambda0) {
  auto u = UnivariatePolynomial::from_polynomial(nontrivial.substitute(lambda, lambda0), x);
  if (u.is_zero()) throw Degenerate(fmt::format("nontrivial factor vanishes identically at {}", lambda0.get_d()));
  auto roots = isolate_real_roots(u, Rational(0), Rational(1));
  if (roots.empty())
    throw NoPhysicalRoot(fmt::format("no root in [0, 1] at infection rate {}", lambda0.get_d()));
  if (roots.size() > 1) {
    std::vector<double> values;
    SturmSequence sturm(squarefree_part(u));
    for (const auto& r : roots) values.push_back(midpoint(refine_root(sturm, r, kBranchWidth)));
    throw AmbiguousRoot(fmt::format("{} roots in [0, 1] at infection rate {}", values.size(), lambda0.get_d()),
                        std::move(values));
  }
  SturmSequence sturm(squarefree_part(u));
  double root = midpoint(refine_root(sturm, roots.front(), kBranchWidth));

  if (u.degree() == 2) {
    double a = u.coefficient(2).get_d();
    double b = u.coefficient(1).get_d();
    double c = u.coefficient(0).get_d();
    double disc = b * b - 4 * a * c;
    if (disc < 0) throw NumericalFailure("quadratic cross-check found a negative discriminant");
    // Cancellation-free pair of roots.
    double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double r1 = q / a;
    double r2 = q != 0 ? c / q : r1;
    double best = std::min(std::abs(r1 - root), std::abs(r2 - root));
    if (best > 1e-9 * std::max(1.0, std::abs(root)))
      throw NumericalFailure(fmt::format("quadratic formula disagrees with isolated root {} by {}", root, best));
  }
  return root;
}

double branch_value(const Polynomial& nontrivial, VariableId lambda, VariableId x, double lambda0) {
  return branch_value(nontrivial, lambda, x, Rational(lambda0));
}

CriticalBound critical_bound(const Polynomial& nontrivial, VariableId lambda, VariableId x) {
  auto q = UnivariatePolynomial::from_polynomial(nontrivial.substitute(x, Rational(1)), lambda);
  if (q.is_zero()) throw Degenerate("nontrivial branch meets x = 1 for every infection rate");
  auto sf = squarefree_part(q);
  if (sf.degree() < 1) throw Degenerate("nontrivial branch never meets x = 1");
  Rational bound = root_bound(sf);
  auto roots = isolate_real_roots(sf, -bound, bound);
  if (roots.empty()) throw Degenerate("nontrivial branch never meets x = 1 at a real infection rate");

  SturmSequence sturm(sf);
  std::vector<RootInterval> refined;
  for (const auto& r : roots) refined.push_back(refine_root(sturm, r, kBoundWidth));

  CriticalBound out;
  const RootInterval& top = refined.back();
  if (auto r = rational_root_in(sf, top)) {
    out.exact = *r;
    out.value = r->get_d();
    return out;
  }
  out.value = midpoint(top);

  // Deflate rational roots; a quadratic remainder yields the surd.
  UnivariatePolynomial rest = sf;
  for (const auto& r : refined) {
    if (auto rr = rational_root_in(sf, r))
      rest = divide(rest, UnivariatePolynomial({-*rr, Rational(1)})).quotient;
  }
  if (rest.degree() == 2) {
    Integer den = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Rational scale = rest.leading() < 0 ? Rational(-den) : Rational(den);
    Integer c0 = Rational(rest.coefficient(0) * scale).get_num();
    Integer c1 = Rational(rest.coefficient(1) * scale).get_num();
    Integer c2 = Rational(rest.coefficient(2) * scale).get_num();
    Integer disc = c1 * c1 - 4 * c2 * c0;
    auto [k, t] = split_square(disc);
    Integer offset = -c1;
    Integer denom = 2 * c2;
    Integer g;
    mpz_gcd(g.get_mpz_t(), offset.get_mpz_t(), k.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), denom.get_mpz_t());
    if (g == 0) g = 1;
    QuadraticSurd s{offset / g, k / g, t, denom / g};
    if (t > 1 && std::abs(s.value() - out.value) < 1e-9 * std::max(1.0, std::abs(out.value))) out.surd = s;
  }
  return out;
}

double ApproximationResult::extinction(double lambda0) const {
  return branch_value(nontrivial, lambda, x, lambda0);
}

double ApproximationResult::density(double lambda0) const {
  if (lambda0 < lambda_c.value) return 0.0;
  try {
    return 1.0 - extinction(lambda0);
  } catch (const NoPhysicalRoot&) {
    // The branch leaves [0, 1] through x = 1 exactly at the bound.
    if (lambda0 - lambda_c.value <= 1e-9) return 0.0;
    throw;
  }
}

double density(const ApproximationResult& result, double lambda0) { return result.density(lambda0); }

std::optional<std::string> closed_form_branch(const ApproximationResult& result,
                                              const VariableRegistry& registry) {
  auto coeffs = coefficients_in(result.nontrivial, result.x);
  auto fmt_poly = [&](const Polynomial& p) { return registry.format(p); };
  if (coeffs.size() == 2) {
    Polynomial num = -coeffs[0];
    Polynomial den = coeffs[1];
    return fmt::format("x = {}/{}", wrap(fmt_poly(num), needs_parens(num)), wrap(fmt_poly(den), needs_parens_below(den)));
  }
  if (coeffs.size() != 3) return std::nullopt;

  const Polynomial& c = coeffs[0];
  const Polynomial& b = coeffs[1];
  const Polynomial& a = coeffs[2];
  Polynomial disc = b * b - Rational(4) * a * c;
  auto split = split_content(disc, registry.order());
  Integer s = split.scalar.get_num();
  bool scalar_integral = split.scalar.get_den() == 1 && s > 0;
  Integer k = 1;
  Integer t = scalar_integral ? s : Integer(1);
  if (scalar_integral) std::tie(k, t) = split_square(s);
  std::string radicand = scalar_integral ? (t == 1 ? "D" : fmt::format("{}*D", t.get_str())) : fmt_poly(disc);

  Polynomial num = -b;
  Polynomial den = Rational(2) * a;
  Integer g = integer_content(num);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
  Integer gd = integer_content(den);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
  if (g == 0) g = 1;
  num *= Rational(1, 1) / Rational(g);
  den *= Rational(1, 1) / Rational(g);
  k /= g;

  // Pick the sign whose root is the physical branch just above the bound.
  double probe = result.lambda_c.value + 1.0;
  double x_probe = result.extinction(probe);
  auto eval = [&](const Polynomial& p) {
    return UnivariatePolynomial::from_polynomial(p, result.lambda).evaluate(probe);
  };
  double root_d = std::sqrt(UnivariatePolynomial::from_polynomial(disc, result.lambda).evaluate(probe));
  double plus = (eval(-b) + root_d) / eval(Rational(2) * a);
  double minus = (eval(-b) - root_d) / eval(Rational(2) * a);
  bool use_plus = std::abs(plus - x_probe) <= std::abs(minus - x_probe);

  std::string sqrt_term = k == 1 ? fmt::format("sqrt({})", radicand)
                                 : fmt::format("{}*sqrt({})", k.get_str(), radicand);
  std::string numerator = num.is_zero() ? (use_plus ? "" : "-") + sqrt_term
                                        : fmt::format("{} {} {}", fmt_poly(num), use_plus ? "+" : "-", sqrt_term);
  return fmt::format("x = ({})/{}", numerator, wrap(fmt_poly(den), needs_parens_below(den)));
}

ApproximationResult solve(const GroebnerBasis& gb, const VariableRegistry& registry, std::string label) {
  ApproximationResult r;
  r.order_label = std::move(label);
  r.lambda = registry.lambda();
  auto x = registry.find(ConfigurationPattern::parse("o"));
  if (!x) throw InvalidArgument("registry lacks the single-site variable");
  r.x = *x;
  r.elim = elimination_polynomial(gb, r.lambda, r.x);
  auto split = strip_trivial(r.elim, r.lambda, r.x);
  r.nontrivial = std::move(split.nontrivial);
  r.elim_scalar = split.scalar;
  r.lambda_c = critical_bound(r.nontrivial, r.lambda, r.x);
  if (r.nontrivial.degree_in(r.x) == 2) {
    auto coeffs = coefficients_in(r.nontrivial, r.x);
    Polynomial disc = coeffs[1] * coeffs[1] - Rational(4) * coeffs[2] * coeffs[0];
    r.discriminant = primitive_part(disc, registry.order());
  }
  return r;
}

Approximation approximate(ApproximationOrder order) {
  VariableRegistry registry;
  Ideal ideal = build_ideal(order, registry);
  auto ord = registry.order();
  GroebnerBasis basis = buchberger(ideal.generators, ord);
  ApproximationResult result = solve(basis, registry, to_string(order));
  return {std::move(registry), std::move(ideal), std::move(basis), std::move(result)};
}

}  // namespace cpgb
