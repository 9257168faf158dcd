#include <algorithm>
#include <cmath>

#include "cpgb/error.hpp"
#include "cpgb/univariate.hpp"

namespace cpgb {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_polynomial(const Polynomial& p, VariableId v) {
  std::vector<Rational> c(p.degree_in(v) + 1, Rational(0));
  for (const auto& [m, coeff] : p.terms()) {
    for (const auto& [var, e] : m.entries())
      if (var != v) throw InvalidArgument("polynomial is not univariate in the requested variable");
    c[m.exponent(v)] += coeff;
  }
  return UnivariatePolynomial(std::move(c));
}

Rational UnivariatePolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UnivariatePolynomial::evaluate(double t) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return static_cast<double>(acc);
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (coeffs_.empty()) return *this;
  std::vector<Rational> c = coeffs_;
  Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UnivariatePolynomial(std::move(c));
}

UnivariateDivision divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / b.leading();
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coefficient(i);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UnivariatePolynomial(std::move(quo)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a;
  UnivariatePolynomial y = b;
  while (!y.is_zero()) {
    auto r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.degree() <= 0) return p;
  auto g = gcd(p, p.derivative());
  return divide(p, g).quotient.monic();
}

Rational root_bound(const UnivariatePolynomial& p) {
  // Cauchy: 1 + max |a_k / a_n|.
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coefficient(k) / p.leading())));
  return m + 1;
}

SturmSequence::SturmSequence(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    auto r = divide(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    std::vector<Rational> neg = r.coefficients();
    for (auto& c : neg) c = -c;
    chain_.emplace_back(std::move(neg));
  }
}

int SturmSequence::sign_changes(const Rational& t) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sgn(q(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

void bisect(const SturmSequence& sturm, const Rational& a, const Rational& b, std::vector<RootInterval>& out) {
  int n = sturm.count(a, b);
  if (n == 0) return;
  if (n == 1) {
    if (sturm.base()(b) == 0)
      out.push_back({b, b});
    else
      out.push_back({a, b});
    return;
  }
  Rational m = (a + b) / 2;
  bisect(sturm, a, m, out);
  bisect(sturm, m, b, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial& p, const Rational& lo,
                                             const Rational& hi) {
  if (p.is_zero()) throw InvalidArgument("every point is a root of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0 || hi < lo) return out;
  auto sf = squarefree_part(p);
  SturmSequence sturm(sf);
  if (sf(lo) == 0) out.push_back({lo, lo});
  bisect(sturm, lo, hi, out);
  return out;
}

RootInterval refine_root(const SturmSequence& sturm, RootInterval r, const Rational& width) {
  while (r.hi - r.lo > width) {
    Rational m = (r.lo + r.hi) / 2;
    if (sturm.base()(m) == 0) return {m, m};
    if (sturm.count(r.lo, m) == 1)
      r.hi = m;
    else
      r.lo = m;
  }
  return r;
}

double midpoint(const RootInterval& r) { return Rational((r.lo + r.hi) / 2).get_d(); }

std::optional<Rational> rational_root_in(const UnivariatePolynomial& p, const RootInterval& interval) {
  if (p(interval.hi) == 0) return interval.hi;
  if (p(interval.lo) == 0) return interval.lo;
  // Integer form: scale by the lcm of denominators.
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Rational lead_scaled = p.leading() * den;
  Integer lead = abs(lead_scaled.get_num());
  if (lead > 1'000'000) return std::nullopt;
  unsigned long n = lead.get_ui();
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    // At most a couple of numerators k with k/d in the interval.
    Rational lo_scaled = interval.lo * static_cast<long>(d);
    Integer k = lo_scaled.get_num() / lo_scaled.get_den();
    for (int step = -1; step <= 2; ++step) {
      Rational cand(k + step, static_cast<long>(d));
      cand.canonicalize();
      if (cand <= interval.lo || cand > interval.hi) continue;
      if (p(cand) == 0) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace cpgb
