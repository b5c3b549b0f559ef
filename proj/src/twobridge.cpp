#include "platkit/twobridge.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "platkit/invariants.hpp"

namespace platkit {

BridgeNormalForm::BridgeNormalForm(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p <= 0 || p % 2 == 0) throw std::invalid_argument("K(p,q): p must be odd and positive");
  if (q == 0 || std::llabs(q) >= p) throw std::invalid_argument("K(p,q): need 0 < |q| < p");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("K(p,q): p and q must be coprime");
}

std::vector<int> GroupPresentation::exponents() const {
  std::vector<int> out;
  out.reserve(word.size());
  for (const auto& l : word) out.push_back(l.exponent);
  return out;
}

std::string to_string(const GroupPresentation& g) {
  std::string w;
  for (const auto& l : g.word) {
    if (!w.empty()) w += " ";
    w += l.generator;
    if (l.exponent != 1) w += "^{" + std::to_string(l.exponent) + "}";
  }
  return "⟨x, y | y = w x w^{-1}⟩, w = " + (w.empty() ? std::string("1") : w);
}

EpsilonSeq bridge_epsilon(const BridgeNormalForm& k) {
  EpsilonSeq eps(static_cast<std::size_t>(k.p() - 1));
  for (std::int64_t i = 1; i < k.p(); ++i) {
    eps[static_cast<std::size_t>(i - 1)] = mod_floor(floor_div(i * k.q(), k.p()), 2) == 0 ? 1 : -1;
  }
  return eps;
}

namespace {

BridgeNormalForm require_odd_q(std::int64_t p, std::int64_t q) {
  BridgeNormalForm k(p, q);
  if (q % 2 == 0) throw std::invalid_argument("K(p,q): q must be odd for the Alexander polynomial and group");
  return k;
}

}  // namespace

LaurentPoly bridge_alexander(std::int64_t p, std::int64_t q) {
  return alexander_from_epsilon(bridge_epsilon(require_odd_q(p, q)));
}

GroupPresentation knot_group(std::int64_t p, std::int64_t q) {
  const auto eps = bridge_epsilon(require_odd_q(p, q));
  GroupPresentation g;
  g.word.reserve(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) g.word.push_back(Letter{i % 2 == 0 ? 'x' : 'y', eps[i]});
  return g;
}

bool schubert_equivalent(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2) {
  BridgeNormalForm a(p, q);
  BridgeNormalForm b(p2, q2);
  if (a.p() != b.p()) return false;
  const std::int64_t r = mod_floor(q, p);
  const std::int64_t r2 = mod_floor(q2, p);
  return r == r2 || r2 == mod_inverse(r, p);
}

}  // namespace platkit
