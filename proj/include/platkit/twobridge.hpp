#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platkit/laurent.hpp"
#include "platkit/platknot.hpp"

namespace platkit {

/// Schubert normal form K(p, q): p odd positive, 0 < |q| < p, gcd(p, q) = 1.
class BridgeNormalForm {
 public:
  BridgeNormalForm(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const BridgeNormalForm&, const BridgeNormalForm&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

struct Letter {
  char generator = 'x';
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// <x, y | y = w x w^-1> with w = x^{e_1} y^{e_2} x^{e_3} ... y^{e_{p-1}}.
struct GroupPresentation {
  std::vector<Letter> word;

  std::vector<int> exponents() const;
};

/// "<x, y | y = w x w^{-1}>, w = x y x^{-1} y^{-1}" with angle brackets as U+27E8 / U+27E9.
std::string to_string(const GroupPresentation& g);

/// eps_i = (-1)^floor(i q / p) with floor, so negative q works.
EpsilonSeq bridge_epsilon(const BridgeNormalForm& k);

/// Both p and q odd; throws std::invalid_argument on even q.
LaurentPoly bridge_alexander(std::int64_t p, std::int64_t q);

GroupPresentation knot_group(std::int64_t p, std::int64_t q);

/// p = p' and q' = q^{+-1} (mod p).
bool schubert_equivalent(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2);

}  // namespace platkit
