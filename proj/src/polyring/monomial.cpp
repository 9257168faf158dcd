#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cpgb/polyring.hpp"

namespace cpgb {

Monomial Monomial::variable(VariableId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent != 0) m.entries_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.emplace_back(v, e);
  }
  std::erase_if(m.entries_, [](const Entry& x) { return x.second == 0; });
  return m;
}

std::uint32_t Monomial::exponent(VariableId v) const {
  for (const auto& [var, e] : entries_) {
    if (var == v) return e;
    if (v < var) break;
  }
  return 0;
}

std::uint32_t Monomial::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint32_t{0},
                         [](std::uint32_t acc, const Entry& x) { return acc + x.second; });
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> entries = a.entries();
  for (const auto& [v, e] : b.entries()) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [v = v](const Monomial::Entry& x) { return x.first == v; });
    if (it == entries.end())
      entries.emplace_back(v, e);
    else
      it->second = std::max(it->second, e);
  }
  return Monomial::from_entries(std::move(entries));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (const auto& [v, e] : a.entries())
    if (b.exponent(v) != 0) return false;
  return true;
}

std::optional<Monomial> quotient(const Monomial& num, const Monomial& den) {
  if (!den.divides(num)) return std::nullopt;
  std::vector<Monomial::Entry> entries = num.entries();
  for (auto& [v, e] : entries) e -= den.exponent(v);
  return Monomial::from_entries(std::move(entries));
}

MonomialOrder MonomialOrder::lex(std::vector<VariableId> ascending) {
  MonomialOrder ord;
  for (std::size_t r = 0; r < ascending.size(); ++r) {
    auto idx = ascending[r].index;
    if (idx >= ord.rank_.size()) ord.rank_.resize(idx + 1, -1);
    if (ord.rank_[idx] != -1) throw std::invalid_argument("variable listed twice in monomial order");
    ord.rank_[idx] = static_cast<std::int32_t>(r);
  }
  ord.ascending_ = std::move(ascending);
  return ord;
}

MonomialOrder MonomialOrder::natural_lex(std::size_t variable_count) {
  std::vector<VariableId> vars(variable_count);
  for (std::size_t i = 0; i < variable_count; ++i) vars[i] = VariableId{static_cast<std::uint32_t>(i)};
  return lex(std::move(vars));
}

bool MonomialOrder::covers(VariableId v) const {
  return v.index < rank_.size() && rank_[v.index] >= 0;
}

std::size_t MonomialOrder::rank(VariableId v) const {
  if (!covers(v)) throw std::out_of_range("variable not covered by monomial order");
  return static_cast<std::size_t>(rank_[v.index]);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  // Highest-precedence variable present in either monomial with differing
  // exponents decides.
  std::int32_t best_rank = -1;
  std::strong_ordering result = std::strong_ordering::equal;
  auto consider = [&](VariableId v, std::uint32_t ea, std::uint32_t eb) {
    if (ea == eb) return;
    auto r = static_cast<std::int32_t>(rank(v));
    if (r > best_rank) {
      best_rank = r;
      result = ea <=> eb;
    }
  };
  const auto& ae = a.entries();
  const auto& be = b.entries();
  auto i = ae.begin();
  auto j = be.begin();
  while (i != ae.end() || j != be.end()) {
    if (j == be.end() || (i != ae.end() && i->first < j->first)) {
      consider(i->first, i->second, 0);
      ++i;
    } else if (i == ae.end() || j->first < i->first) {
      consider(j->first, 0, j->second);
      ++j;
    } else {
      consider(i->first, i->second, j->second);
      ++i;
      ++j;
    }
  }
  return result;
}

}  // namespace cpgb
