#include "cpgb/error.hpp"
#include "cpgb/polyring.hpp"

namespace cpgb {

Division reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  Division out;
  out.quotients.resize(divisors.size());
  std::vector<Polynomial::Term> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
    leads.push_back(g.leading_term(ord));
  }

  Polynomial p = f;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading_term(ord);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      auto q = quotient(lm, leads[i].first);
      if (!q) continue;
      Rational c = lc / leads[i].second;
      out.quotients[i] += Polynomial::term(c, *q);
      p.add_scaled(-c, *q, divisors[i]);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder += Polynomial::term(lc, lm);
      p -= Polynomial::term(lc, lm);
    }
  }
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("exact_divide by the zero polynomial");
  std::uint32_t n = 1;
  for (const auto* p : {&f, &g})
    for (VariableId v : p->variables()) n = std::max(n, v.index + 1);
  auto ord = MonomialOrder::natural_lex(n);
  auto div = reduce(f, std::span<const Polynomial>(&g, 1), ord);
  if (!div.remainder.is_zero()) throw NotDivisible("polynomial does not divide exactly");
  return div.quotients.front();
}

}  // namespace cpgb
