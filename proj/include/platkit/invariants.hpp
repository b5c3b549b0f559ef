#pragma once

#include <cstdint>

#include "platkit/laurent.hpp"

namespace platkit {

/// a = sum |a_k| and tau = sum k |a_k| reduced into [0, a).
struct TauResult {
  Integer a;
  Integer tau;

  friend bool operator==(const TauResult&, const TauResult&) = default;
};

/// |f(-1)|, invariant under f -> +-t^n f.
Integer determinant(const LaurentPoly& f);

/// Throws std::domain_error on the zero polynomial.
TauResult a_and_tau(const LaurentPoly& f);

/// y in [0, m) with x y = 1 (mod m). m = 1 gives 0. Throws std::domain_error unless gcd(x, m) = 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m);

/// (2q)^-1 mod p for p odd positive, q even, gcd(p, q) = 1; p = 1 gives 0.
std::int64_t tau_closed_form(std::int64_t p, std::int64_t q);

/// tau != 0: a knot with this Alexander polynomial cannot be invertible.
bool invertibility_obstructed(const LaurentPoly& f);

/// tau != 0: this polynomial cannot belong to a spun 2-knot (those are reciprocal, hence tau = 0).
bool spun_separation(const LaurentPoly& f);

}  // namespace platkit
