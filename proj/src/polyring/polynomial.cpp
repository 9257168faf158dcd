#include <algorithm>
#include <set>

#include "cpgb/error.hpp"
#include "cpgb/polyring.hpp"

namespace cpgb {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(VariableId v) { return term(Rational(1), Monomial::variable(v)); }

Polynomial Polynomial::term(const Rational& coefficient, const Monomial& m) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(m, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial::Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return *best;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }

Rational Polynomial::leading_coefficient(const MonomialOrder& ord) const {
  return leading_term(ord).second;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.less(b.first, a.first); });
  return out;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(VariableId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::vector<VariableId> Polynomial::variables() const {
  std::set<VariableId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

bool Polynomial::uses_only(std::span<const VariableId> allowed) const {
  for (VariableId v : variables())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  return true;
}

Polynomial Polynomial::substitute(VariableId v, const Rational& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.exponent(v);
    if (e == 0) {
      out.accumulate(m, c);
      continue;
    }
    Rational scale = 1;
    for (std::uint32_t k = 0; k < e; ++k) scale *= value;
    auto rest = quotient(m, Monomial::variable(v, e));
    out.accumulate(*rest, c * scale);
  }
  return out;
}

void Polynomial::accumulate(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

void Polynomial::add_scaled(const Rational& coefficient, const Monomial& m, const Polynomial& other) {
  if (coefficient == 0) return;
  for (const auto& [om, oc] : other.terms_) accumulate(m * om, coefficient * oc);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [m, c] : a.terms_) out.add_scaled(c, m, b);
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, std::uint32_t exponent) {
  Polynomial out(1);
  for (std::uint32_t k = 0; k < exponent; ++k) out = out * p;
  return out;
}

ContentSplit split_content(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) return {Rational(1), Polynomial{}};
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scalar(num_gcd, den_lcm);
  scalar.canonicalize();
  if (f.leading_coefficient(ord) < 0) scalar = -scalar;
  Polynomial primitive = f;
  primitive *= Rational(1) / scalar;
  return {scalar, std::move(primitive)};
}

Polynomial primitive_part(const Polynomial& f, const MonomialOrder& ord) {
  return split_content(f, ord).primitive;
}

}  // namespace cpgb
