#pragma once

// Buchberger's algorithm producing the reduced Groebner basis.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cpgb/polyring.hpp"

namespace cpgb {

struct GroebnerBasis {
  /// Reduced, primitive, positive leading coefficients, sorted by leading
  /// monomial ascending.
  std::vector<Polynomial> elements;
  MonomialOrder order;
  /// The generators the basis was computed from.
  std::vector<Polynomial> source;
};

/// (L/lt(f)) f - (L/lt(g)) g with L the lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// One processed (or skipped) critical pair.
struct PairTrace {
  std::size_t first = 0;
  std::size_t second = 0;
  Monomial lcm;
  bool skipped_coprime = false;
  /// Zero when the S-polynomial reduced away.
  Polynomial remainder;
};

struct BuchbergerOptions {
  /// Abort with BasisTooLarge once the working basis holds more terms.
  std::size_t max_total_terms = 10000;
  std::function<void(const PairTrace&)> trace;
};

/// Throws EmptyIdeal if every generator is zero.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& ord,
                         const BuchbergerOptions& options = {});

/// Minimalize, tail-reduce, make primitive, sort.
std::vector<Polynomial> normalize_basis(std::vector<Polynomial> raw, const MonomialOrder& ord);

bool is_member(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace cpgb
