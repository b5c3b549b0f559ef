#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "platkit/integer.hpp"

namespace platkit {

/// One nonzero monomial a * t^k.
struct Term {
  Exponent exponent = 0;
  Integer coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * @brief Sparse Laurent polynomial in one variable t with integer coefficients.
 *
 * Terms are kept sorted by exponent with no zero coefficient stored, so two
 * polynomials are equal exactly when their term lists are identical. The zero
 * polynomial has no terms.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;

  /// Sums duplicate exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<std::pair<Exponent, Integer>> pairs);

  /// Dense coefficients c[0], c[1], ... attached to exponents lowest, lowest+1, ...
  static LaurentPoly from_dense(Exponent lowest, std::span<const std::int64_t> coeffs);

  static LaurentPoly constant(Integer c);
  static LaurentPoly monomial(Exponent k, Integer c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Requires a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const Integer& lowest_coefficient() const;
  const Integer& highest_coefficient() const;

  /// Coefficient of t^k (zero when absent).
  Integer coefficient(Exponent k) const;

  /// f(t^-1).
  LaurentPoly reflect() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

/// Sum of a_k x^k. Negative exponents require |x| == 1; throws std::domain_error otherwise.
Integer eval_int(const LaurentPoly& f, const Integer& x);

/// Derivative evaluated at t = 1, i.e. sum of k * a_k.
Integer derivative_at_one(const LaurentPoly& f);

/// s * t^n * f with s in {+1, -1}.
LaurentPoly shift_scale(const LaurentPoly& f, Exponent n, int sign);

/// f = +-t^n g for some n. Aligns lowest exponents and compares under both signs.
bool doteq(const LaurentPoly& f, const LaurentPoly& g);

/// Representative of the doteq class with g(1) = 1 and g'(1) = 0.
/// Throws std::domain_error unless f(1) is +1 or -1.
LaurentPoly normalize(const LaurentPoly& f);

/// f(t) doteq f(t^-1).
bool is_reciprocal(const LaurentPoly& f);

/// Both extreme coefficients are +-1. Throws std::domain_error on zero.
bool is_monic(const LaurentPoly& f);

/// Tuple notation "(a_m, ..., [a_0], ..., a_n)"; the range always covers exponent 0.
std::string to_tuple_string(const LaurentPoly& f);

/// Inverse of to_tuple_string. Exactly one bracketed entry is required.
LaurentPoly parse_tuple(std::string_view text);

/// Human-readable form such as "-t^-1 + 4 - 2t".
std::string to_string(const LaurentPoly& f);

}  // namespace platkit
