#include "platkit/contfrac.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>


namespace platkit {

Rational::Rational(Integer num, Integer den) {
  if (num == 0 && den == 0) throw std::invalid_argument("Rational: 0/0 is undefined");
  if (den == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g = boost::multiprecision::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) return infinity();
  if (is_infinite()) return Rational(0, 1);
  return Rational(den_, num_);
}

Rational Rational::negated() const {
  if (is_infinite()) return *this;
  return Rational(-num_, den_);
}

Rational add(std::int64_t c, const Rational& x) {
  if (x.is_infinite()) return x;
  return Rational(x.num() + Integer(c) * x.den(), x.den());
}

std::string to_string(const Rational& r) { return r.num().str() + "/" + r.den().str(); }

namespace {

Integer parse_signed(std::string_view s, std::string_view what) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::size_t start = (!s.empty() && (s.front() == '-' || s.front() == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + start, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

std::int64_t checked_int64(const Integer& v) {
  auto out = to_int64(v);
  if (!out) throw std::overflow_error("continued fraction entry does not fit in 64 bits");
  return *out;
}

// Euclid on a/b with 0 < a <= b: quotients of b/a, a/r1, ... (all positive).
std::vector<std::int64_t> euclid_entries(Integer a, Integer b) {
  std::vector<std::int64_t> out;
  while (a != 0) {
    Integer quot = b / a;
    Integer rem = b % a;
    out.push_back(checked_int64(quot));
    b = a;
    a = rem;
  }
  return out;
}

// Rewrites the tail c_m as (c_m - 1, 1) when the parity is wrong; requires c_m >= 2.
void fix_parity(std::vector<std::int64_t>& entries, bool want_odd) {
  if ((entries.size() % 2 == 1) == want_odd) return;
  entries.back() -= 1;
  entries.push_back(1);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_signed(text, "rational"), 1);
  Integer num = parse_signed(text.substr(0, slash), "numerator");
  Integer den = parse_signed(text.substr(slash + 1), "denominator");
  return Rational(num, den);
}

Rational eval(const ContFrac& cf) {
  if (cf.entries.empty()) throw std::invalid_argument("eval: empty continued fraction");
  Rational value = Rational(cf.entries.back()).reciprocal();
  for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) {
    value = add(*it, value).reciprocal();
  }
  return value;
}

ContFrac canonical_expand(const Rational& r) {
  if (r.is_infinite()) return ContFrac{{0}};
  if (r.num() == 0) return ContFrac{{0, 1, -1}};
  const Integer q = abs(r.num());
  const Integer p = r.den();
  ContFrac out;
  if (q <= p) {
    out.entries = euclid_entries(q, p);
    fix_parity(out.entries, true);
  } else {
    // [0, c_2, ..., c_m] = 1/[c_2, ..., c_m]; the tail has even length.
    out.entries = euclid_entries(p, q);
    fix_parity(out.entries, false);
    out.entries.insert(out.entries.begin(), 0);
  }
  if (r.num() < 0) out = negate(out);
  return out;
}

ContFrac reverse(const ContFrac& cf) {
  return ContFrac{std::vector<std::int64_t>(cf.entries.rbegin(), cf.entries.rend())};
}

ContFrac prepend_zero_k(const ContFrac& cf, std::int64_t k) {
  ContFrac out;
  out.entries.reserve(cf.entries.size() + 2);
  out.entries.push_back(0);
  out.entries.push_back(k);
  out.entries.insert(out.entries.end(), cf.entries.begin(), cf.entries.end());
  return out;
}

bool is_canonical(const ContFrac& cf) {
  const auto& c = cf.entries;
  if (c.size() % 2 == 0) return false;
  if (c == std::vector<std::int64_t>{0, 1, -1}) return true;
  auto same_sign_nonzero = [](auto first, auto last) {
    if (first == last) return true;
    const bool positive = *first > 0;
    return std::all_of(first, last, [&](std::int64_t x) { return x != 0 && (x > 0) == positive; });
  };
  if (c.front() != 0) return same_sign_nonzero(c.begin(), c.end());
  return same_sign_nonzero(c.begin() + 1, c.end());
}

ContFrac negate(const ContFrac& cf) {
  ContFrac out = cf;
  for (auto& x : out.entries) x = -x;
  return out;
}

std::string to_string(const ContFrac& cf) {
  std::string out;
  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cf.entries[i]);
  }
  return out;
}

ContFrac parse_contfrac(std::string_view text) {
  ContFrac out;
  while (true) {
    auto comma = text.find(',');
    out.entries.push_back(checked_int64(parse_signed(text.substr(0, comma), "continued fraction entry")));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace platkit
