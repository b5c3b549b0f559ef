#include "platkit/platknot.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace platkit {

namespace {

void require_plat_params(std::int64_t p, std::int64_t q) {
  if (p <= 0) throw std::invalid_argument("p must be positive (got " + std::to_string(p) + ")");
  if (p % 2 == 0) {
    throw std::invalid_argument("p must be odd (got " + std::to_string(p) +
                                "); even p gives a 2-sphere plus a Klein bottle, not a 2-knot");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("p and q must be coprime (gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                                ") = " + std::to_string(std::gcd(p, q)) + ")");
  }
}

}  // namespace

PlatNormalForm::PlatNormalForm(std::int64_t p, std::int64_t q) : p_(p), q_(q) { require_plat_params(p, q); }

std::string to_string(const RibbonType& rt) {
  std::string out = "R(";
  for (std::size_t i = 0; i < rt.entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(rt.entries[i]);
  }
  return out + ")";
}

std::int64_t canonical_even_rep(std::int64_t p, std::int64_t q) {
  require_plat_params(p, q);
  const std::int64_t r = mod_floor(q, p);
  return r % 2 == 0 ? r : r + p;
}

EpsilonSeq epsilon_seq(std::int64_t p, std::int64_t q) {
  require_plat_params(p, q);
  if (q % 2 != 0) throw std::invalid_argument("epsilon_seq: q must be even (got " + std::to_string(q) + ")");
  EpsilonSeq eps(static_cast<std::size_t>(p - 1));
  for (std::int64_t i = 1; i < p; ++i) {
    eps[static_cast<std::size_t>(i - 1)] = floor_div(i * q, p) % 2 == 0 ? 1 : -1;
  }
  return eps;
}

std::vector<std::int64_t> d_sequence(const EpsilonSeq& eps) {
  std::vector<std::int64_t> d(eps.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    acc += eps[i];
    d[i] = acc;
  }
  return d;
}

LaurentPoly alexander_from_epsilon(const EpsilonSeq& eps) {
  const auto d = d_sequence(eps);
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (auto x : d) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  std::vector<std::int64_t> dense(static_cast<std::size_t>(hi - lo + 1), 0);
  dense[static_cast<std::size_t>(-lo)] = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    // term index i + 1
    dense[static_cast<std::size_t>(d[i] - lo)] += (i % 2 == 0) ? -1 : 1;
  }
  return LaurentPoly::from_dense(lo, dense);
}

RibbonType ribbon_type(const PlatNormalForm& nf) {
  if (nf.is_trivial()) return RibbonType{{0, 0}};
  const auto eps = epsilon_seq(nf.p(), canonical_even_rep(nf.p(), nf.q()));
  return RibbonType{std::vector<std::int64_t>(eps.begin(), eps.end())};
}

LaurentPoly alexander_closed(const PlatNormalForm& nf) {
  return alexander_from_epsilon(epsilon_seq(nf.p(), canonical_even_rep(nf.p(), nf.q())));
}

LaurentPoly alexander_from_ribbon_type(const RibbonType& rt) {
  if (rt.entries.size() % 2 != 0) {
    throw std::invalid_argument("ribbon type must have even length (got " + std::to_string(rt.entries.size()) + ")");
  }
  std::vector<std::pair<Exponent, Integer>> terms;
  terms.reserve(rt.entries.size() + 1);
  terms.emplace_back(0, 1);
  Exponent partial = 0;
  for (std::size_t i = 0; i < rt.entries.size(); i += 2) {
    partial += rt.entries[i];
    terms.emplace_back(partial, -1);
    partial += rt.entries[i + 1];
    terms.emplace_back(partial, 1);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

PlatNormalForm mirror(const PlatNormalForm& nf) { return PlatNormalForm(nf.p(), -nf.q()); }

}  // namespace platkit
