#include "platkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace platkit {

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<Exponent, Integer>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(pairs.size());
  for (auto& [k, c] : pairs) {
    if (!out.empty() && out.back().exponent == k) {
      out.back().coefficient += c;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(Term{k, std::move(c)});
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::from_dense(Exponent lowest, std::span<const std::int64_t> coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.push_back(Term{lowest + static_cast<Exponent>(i), Integer(coeffs[i])});
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::constant(Integer c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::monomial(Exponent k, Integer c) {
  if (c == 0) return {};
  return LaurentPoly({Term{k, std::move(c)}});
}

Exponent LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("min_exponent of the zero polynomial");
  return terms_.front().exponent;
}

Exponent LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("max_exponent of the zero polynomial");
  return terms_.back().exponent;
}

const Integer& LaurentPoly::lowest_coefficient() const {
  if (is_zero()) throw std::domain_error("lowest_coefficient of the zero polynomial");
  return terms_.front().coefficient;
}

const Integer& LaurentPoly::highest_coefficient() const {
  if (is_zero()) throw std::domain_error("highest_coefficient of the zero polynomial");
  return terms_.back().coefficient;
}

Integer LaurentPoly::coefficient(Exponent k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Exponent e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == k) return it->coefficient;
  return 0;
}

LaurentPoly LaurentPoly::reflect() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.exponent = -t.exponent;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  auto out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::pair<Exponent, Integer>> pairs;
  pairs.reserve(a.size() + b.size());
  for (const auto& t : a.terms()) pairs.emplace_back(t.exponent, t.coefficient);
  for (const auto& t : b.terms()) pairs.emplace_back(t.exponent, t.coefficient);
  return LaurentPoly::from_terms(std::move(pairs));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

Integer eval_int(const LaurentPoly& f, const Integer& x) {
  if (x == 0) throw std::domain_error("eval_int: x must be nonzero");
  if (!f.is_zero() && f.min_exponent() < 0 && abs(x) != 1) {
    throw std::domain_error("eval_int: negative exponents require |x| = 1");
  }
  Integer sum = 0;
  for (const auto& t : f.terms()) {
    if (abs(x) == 1) {
      bool odd = (t.exponent % 2) != 0;
      sum += (x < 0 && odd) ? Integer(-t.coefficient) : t.coefficient;
    } else {
      sum += t.coefficient * boost::multiprecision::pow(x, static_cast<unsigned>(t.exponent));
    }
  }
  return sum;
}

Integer derivative_at_one(const LaurentPoly& f) {
  Integer sum = 0;
  for (const auto& t : f.terms()) sum += t.coefficient * t.exponent;
  return sum;
}

LaurentPoly shift_scale(const LaurentPoly& f, Exponent n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("shift_scale: sign must be +1 or -1");
  std::vector<std::pair<Exponent, Integer>> pairs;
  pairs.reserve(f.size());
  for (const auto& t : f.terms()) {
    pairs.emplace_back(t.exponent + n, sign == 1 ? t.coefficient : Integer(-t.coefficient));
  }
  return LaurentPoly::from_terms(std::move(pairs));
}

bool doteq(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.size() != g.size()) return false;
  const Exponent shift = g.min_exponent() - f.min_exponent();
  bool same = true;
  bool negated = true;
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  for (std::size_t i = 0; i < ft.size(); ++i) {
    if (gt[i].exponent != ft[i].exponent + shift) return false;
    if (gt[i].coefficient != ft[i].coefficient) same = false;
    if (gt[i].coefficient != -ft[i].coefficient) negated = false;
    if (!same && !negated) return false;
  }
  return true;
}

LaurentPoly normalize(const LaurentPoly& f) {
  const Integer at_one = eval_int(f, 1);
  if (at_one != 1 && at_one != -1) {
    throw std::domain_error("normalize: f(1) must be +1 or -1, got " + at_one.str());
  }
  const int sign = at_one == 1 ? 1 : -1;
  const Integer slope = derivative_at_one(f) * sign;
  const auto shift = to_int64(-slope);
  if (!shift) throw std::overflow_error("normalize: shift does not fit in an exponent");
  return shift_scale(f, *shift, sign);
}

bool is_reciprocal(const LaurentPoly& f) { return doteq(f, f.reflect()); }

bool is_monic(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("is_monic: zero polynomial");
  return abs(f.lowest_coefficient()) == 1 && abs(f.highest_coefficient()) == 1;
}

std::string to_tuple_string(const LaurentPoly& f) {
  const Exponent lo = f.is_zero() ? 0 : std::min<Exponent>(f.min_exponent(), 0);
  const Exponent hi = f.is_zero() ? 0 : std::max<Exponent>(f.max_exponent(), 0);
  std::string out = "(";
  auto it = f.terms().begin();
  for (Exponent k = lo; k <= hi; ++k) {
    std::string c = "0";
    if (it != f.terms().end() && it->exponent == k) {
      c = it->coefficient.str();
      ++it;
    }
    if (k != lo) out += ", ";
    out += k == 0 ? "[" + c + "]" : c;
  }
  out += ")";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("parse_tuple: empty coefficient");
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("parse_tuple: bad coefficient '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw std::invalid_argument("parse_tuple: bad coefficient '" + std::string(s) + "'");
    }
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

LaurentPoly parse_tuple(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("parse_tuple: expected parenthesised tuple");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string_view> entries;
  while (true) {
    auto comma = text.find(',');
    entries.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::optional<std::size_t> zero_at;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].empty() && entries[i].front() == '[') {
      if (zero_at || entries[i].back() != ']') throw std::invalid_argument("parse_tuple: malformed constant term");
      zero_at = i;
      entries[i] = entries[i].substr(1, entries[i].size() - 2);
    }
  }
  if (!zero_at) throw std::invalid_argument("parse_tuple: missing bracketed constant term");
  std::vector<std::pair<Exponent, Integer>> pairs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    pairs.emplace_back(static_cast<Exponent>(i) - static_cast<Exponent>(*zero_at), parse_integer(entries[i]));
  }
  return LaurentPoly::from_terms(std::move(pairs));
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Integer mag = abs(t.coefficient);
    bool neg = t.coefficient < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.exponent == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "t";
    if (t.exponent != 1) os << "^" << t.exponent;
  }
  return os.str();
}

}  // namespace platkit
