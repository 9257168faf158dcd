#include <cctype>

#include <fmt/format.h>

#include "cpgb/error.hpp"
#include "cpgb/polyring.hpp"

namespace cpgb {

VariableId VariableNames::add(std::string name) {
  if (auto existing = find(name)) return *existing;
  VariableId id{static_cast<std::uint32_t>(names_.size())};
  ids_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::optional<VariableId> VariableNames::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& VariableNames::name(VariableId v) const {
  if (v.index >= names_.size()) throw UnknownVariable(fmt::format("no name for variable #{}", v.index));
  return names_[v.index];
}

namespace {

// expr   := ['+'|'-'] term { ('+'|'-') term }
// term   := unary { ['*'] unary }      implicit product before a name or '('
// unary  := '-' unary | power
// power  := atom [ '^' integer ]
// atom   := integer [ '/' integer ] | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(fmt::format("unexpected '{}'", text_[pos_]));
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static bool starts_name(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
        continue;
      }
      char c = peek();
      if (starts_name(c) || c == '(') {
        acc = acc * unary();
        continue;
      }
      return acc;
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power_expr();
  }

  Polynomial power_expr() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      Integer e = integer_literal();
      if (!e.fits_uint_p() || e > 1000) fail("exponent too large");
      return power(base, static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  Integer integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      Integer den = 1;
      if (accept('/')) {
        den = integer_literal();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial(q);
    }
    if (starts_name(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto id = names_.find(name);
      if (!id) throw UnknownVariable(fmt::format("unknown variable '{}' at position {}", name, start));
      return Polynomial::variable(*id);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(fmt::format("unexpected '{}'", c));
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m, const VariableNames& names, const MonomialOrder& ord) {
  auto entries = m.entries();
  std::sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
    return ord.rank(a.first) < ord.rank(b.first);
  });
  std::string out;
  for (const auto& [v, e] : entries) {
    if (!out.empty()) out += '*';
    out += names.name(v);
    if (e != 1) out += fmt::format("^{}", e);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& names) {
  return Parser(text, names).parse();
}

std::string format_polynomial(const Polynomial& p, const VariableNames& names, const MonomialOrder& ord) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ord)) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_unit()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += format_monomial(m, names, ord);
    }
  }
  return out;
}

}  // namespace cpgb
