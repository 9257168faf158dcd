#pragma once

// Exact multivariate polynomials over Q with lexicographic monomial orders.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cpgb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Index into a variable table. Index 0 is always the infection rate.
struct VariableId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

inline constexpr VariableId kLambda{0};

/// Sparse power product. Entries are sorted by variable and never hold a
/// zero exponent, so the empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<VariableId, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(VariableId v, std::uint32_t exponent = 1);
  static Monomial from_entries(std::vector<Entry> entries);

  std::uint32_t exponent(VariableId v) const;
  std::uint32_t degree() const;
  bool is_unit() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  /// Storage order only; use MonomialOrder for term orders.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Entry> entries_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
/// num / den, or nullopt when den does not divide num.
std::optional<Monomial> quotient(const Monomial& num, const Monomial& den);

enum class OrderKind { Lex };

/// Lexicographic order given by a precedence list (lowest first).
class MonomialOrder {
 public:
  static MonomialOrder lex(std::vector<VariableId> ascending);
  /// Lex with precedence equal to the variable index.
  static MonomialOrder natural_lex(std::size_t variable_count);

  OrderKind kind() const { return OrderKind::Lex; }
  std::span<const VariableId> ascending() const { return ascending_; }
  bool covers(VariableId v) const;
  std::size_t rank(VariableId v) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.ascending_ == b.ascending_;
  }

 private:
  std::vector<VariableId> ascending_;
  std::vector<std::int32_t> rank_;  // by variable index, -1 when absent
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit lift of scalars
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  Polynomial(int constant) : Polynomial(Rational(constant)) {}

  static Polynomial variable(VariableId v);
  static Polynomial term(const Rational& coefficient, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  Monomial leading_monomial(const MonomialOrder& ord) const;
  Rational leading_coefficient(const MonomialOrder& ord) const;
  Term leading_term(const MonomialOrder& ord) const;
  /// Terms in descending order under `ord`.
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VariableId v) const;
  std::vector<VariableId> variables() const;
  bool uses_only(std::span<const VariableId> allowed) const;

  Polynomial substitute(VariableId v, const Rational& value) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  /// this += coefficient * m * other, the inner loop of every reduction.
  void add_scaled(const Rational& coefficient, const Monomial& m, const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void accumulate(const Monomial& m, const Rational& c);

  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, std::uint32_t exponent);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. The leading term of the running dividend is
/// always attacked first, by the first divisor (in list order) whose
/// leading monomial divides it; otherwise it moves to the remainder.
Division reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

/// q with f = q * g, or NotDivisible.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Scalar c and primitive p with f = c * p, where p has integer
/// coefficients of content 1 and a positive leading coefficient.
struct ContentSplit {
  Rational scalar;
  Polynomial primitive;
};
ContentSplit split_content(const Polynomial& f, const MonomialOrder& ord);
Polynomial primitive_part(const Polynomial& f, const MonomialOrder& ord);

/// Bidirectional name table for variables.
class VariableNames {
 public:
  VariableId add(std::string name);
  std::optional<VariableId> find(std::string_view name) const;
  const std::string& name(VariableId v) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VariableId> ids_;
};

/// Parses the text grammar: integer or p/q coefficients, `+ - * ^`,
/// parentheses, and identifiers resolved through `names`.
Polynomial parse_polynomial(std::string_view text, const VariableNames& names);

/// Flat expanded rendering, terms descending under `ord`, e.g.
/// `2*l*y - 2*l*x - x + 1`. Factors inside a term are ascending.
std::string format_polynomial(const Polynomial& p, const VariableNames& names,
                              const MonomialOrder& ord);

}  // namespace cpgb
