#include "platkit/invariants.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace platkit {

Integer determinant(const LaurentPoly& f) {
  if (f.is_zero()) return 0;
  return abs(eval_int(shift_scale(f, -f.min_exponent(), 1), -1));
}

TauResult a_and_tau(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("a_and_tau: zero polynomial");
  Integer a = 0;
  Integer weighted = 0;
  for (const auto& t : f.terms()) {
    Integer mag = abs(t.coefficient);
    a += mag;
    weighted += mag * t.exponent;
  }
  Integer tau = weighted % a;
  if (tau < 0) tau += a;
  return {a, tau};
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  // Invariant: old_r = old_s * x (mod m), r = s * x (mod m).
  std::int64_t old_r = mod_floor(x, m);
  std::int64_t r = m;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1) {
    throw std::domain_error("mod_inverse: " + std::to_string(x) + " is not invertible mod " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

std::int64_t tau_closed_form(std::int64_t p, std::int64_t q) {
  if (p <= 0 || p % 2 == 0) throw std::invalid_argument("tau_closed_form: p must be odd and positive");
  if (q % 2 != 0) throw std::invalid_argument("tau_closed_form: q must be even");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("tau_closed_form: p and q must be coprime");
  if (p == 1) return 0;
  return mod_inverse(mod_floor(2 * mod_floor(q, p), p), p);
}

bool invertibility_obstructed(const LaurentPoly& f) { return a_and_tau(f).tau != 0; }

bool spun_separation(const LaurentPoly& f) { return a_and_tau(f).tau != 0; }

}  // namespace platkit
