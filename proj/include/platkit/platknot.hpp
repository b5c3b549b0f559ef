#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platkit/laurent.hpp"

namespace platkit {

/**
 * @brief Validated normal form F(p, q) of an oriented 2-plat 2-knot.
 *
 * p is odd and positive and gcd(p, q) = 1. F(1, q) is the trivial 2-knot.
 * Even p would describe a 2-sphere plus a Klein bottle and is rejected.
 */
class PlatNormalForm {
 public:
  /// Throws std::invalid_argument naming the violated condition.
  PlatNormalForm(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_trivial() const { return p_ == 1; }

  friend bool operator==(const PlatNormalForm&, const PlatNormalForm&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

inline PlatNormalForm new_normal_form(std::int64_t p, std::int64_t q) { return {p, q}; }

/// Signs eps_i = (-1)^floor(i q / p), i = 1 .. p-1.
using EpsilonSeq = std::vector<int>;

/// Ribbon type R(p_1, q_1, ..., p_n, q_n); the trivial knot is R(0, 0).
struct RibbonType {
  std::vector<std::int64_t> entries;

  friend bool operator==(const RibbonType&, const RibbonType&) = default;
};

/// "R(1, -1)"
std::string to_string(const RibbonType& rt);

/// The even q_e in [0, 2p) with q_e = q (mod p). Unique because p is odd.
std::int64_t canonical_even_rep(std::int64_t p, std::int64_t q);

/// Requires p odd positive, q even, gcd(p, q) = 1 (q is not reduced).
EpsilonSeq epsilon_seq(std::int64_t p, std::int64_t q);

/// Partial sums d(i) = eps_1 + ... + eps_i.
std::vector<std::int64_t> d_sequence(const EpsilonSeq& eps);

/// 1 + sum_i (-1)^i t^{d(i)}.
LaurentPoly alexander_from_epsilon(const EpsilonSeq& eps);

RibbonType ribbon_type(const PlatNormalForm& nf);
inline RibbonType ribbon_type(std::int64_t p, std::int64_t q) { return ribbon_type(PlatNormalForm(p, q)); }

/// Un-normalized closed-form Alexander polynomial, computed from the canonical even representative.
LaurentPoly alexander_closed(const PlatNormalForm& nf);
inline LaurentPoly alexander_closed(std::int64_t p, std::int64_t q) { return alexander_closed(PlatNormalForm(p, q)); }

/// 1 + sum_i (-t^{a(i)} + t^{b(i)}) with a(i), b(i) the partial sums of the ribbon type.
/// Throws std::invalid_argument on odd length.
LaurentPoly alexander_from_ribbon_type(const RibbonType& rt);

/// F(p, -q), equivalent to the reverse-mirror -F(p, q).
PlatNormalForm mirror(const PlatNormalForm& nf);

}  // namespace platkit
