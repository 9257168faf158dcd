#include <algorithm>

#include <fmt/format.h>

#include "cpgb/error.hpp"
#include "cpgb/groebner.hpp"

namespace cpgb {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto [fm, fc] = f.leading_term(ord);
  auto [gm, gc] = g.leading_term(ord);
  Monomial l = lcm(fm, gm);
  Polynomial s;
  s.add_scaled(Rational(1) / fc, *quotient(l, fm), f);
  s.add_scaled(Rational(-1) / gc, *quotient(l, gm), g);
  return s;
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::size_t total_terms(const std::vector<Polynomial>& basis) {
  std::size_t n = 0;
  for (const auto& p : basis) n += p.size();
  return n;
}

}  // namespace

std::vector<Polynomial> normalize_basis(std::vector<Polynomial> raw, const MonomialOrder& ord) {
  std::erase_if(raw, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(raw.begin(), raw.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });

  // Keep an element only if no kept element's leading monomial divides its
  // own; ascending order means equal leading monomials keep the first.
  std::vector<Polynomial> minimal;
  for (auto& p : raw) {
    Monomial lm = p.leading_monomial(ord);
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial(ord).divides(lm);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    auto [lm, lc] = minimal[i].leading_term(ord);
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < i ? reduced[j] : minimal[j]);
    Polynomial tail = minimal[i] - Polynomial::term(lc, lm);
    Polynomial p = Polynomial::term(lc, lm) + reduce(tail, others, ord).remainder;
    reduced.push_back(primitive_part(p, ord));
  }
  return reduced;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& ord,
                         const BuchbergerOptions& options) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(primitive_part(g, ord));
  if (basis.empty()) throw EmptyIdeal();

  std::vector<Monomial> leads;
  std::vector<CriticalPair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(leads[i], leads[j])});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    leads.push_back(basis[j].leading_monomial(ord));
    add_pairs_for(j);
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties broken by insertion order.
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
      return ord.less(a.lcm, b.lcm);
    });
    CriticalPair pair = *it;
    pairs.erase(it);

    PairTrace trace{pair.i, pair.j, pair.lcm, false, {}};
    if (coprime(leads[pair.i], leads[pair.j])) {
      trace.skipped_coprime = true;
      if (options.trace) options.trace(trace);
      continue;
    }
    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], ord);
    Polynomial r = reduce(s, basis, ord).remainder;
    trace.remainder = r;
    if (options.trace) options.trace(trace);
    if (r.is_zero()) continue;

    basis.push_back(primitive_part(r, ord));
    leads.push_back(basis.back().leading_monomial(ord));
    add_pairs_for(basis.size() - 1);
    if (std::size_t n = total_terms(basis); n > options.max_total_terms)
      throw BasisTooLarge(fmt::format("Groebner basis grew to {} terms (limit {})", n, options.max_total_terms));
  }

  GroebnerBasis gb{normalize_basis(std::move(basis), ord), ord, {generators.begin(), generators.end()}};
  return gb;
}

bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce(f, gb.elements, gb.order).remainder.is_zero();
}

}  // namespace cpgb
