#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "platkit/integer.hpp"

namespace platkit {

/**
 * @brief Reduced fraction num/den with den >= 0.
 *
 * The sign always lives in the numerator. The formal value infinity is 1/0.
 */
class Rational {
 public:
  /// 0/1.
  Rational() = default;
  /// Reduces; throws std::invalid_argument for 0/0.
  Rational(Integer num, Integer den);
  Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)

  static Rational infinity() { return Rational(1, 0); }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  /// 1/x with 1/0 = infinity and 1/infinity = 0.
  Rational reciprocal() const;
  Rational negated() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

/// c + x, with c + infinity = infinity.
Rational add(std::int64_t c, const Rational& x);

std::string to_string(const Rational& r);

/// Parses "q/p" or a bare integer "q".
Rational parse_rational(std::string_view text);

/// Continued fraction [c_1, ..., c_m] = 1/(c_1 + [c_2, ..., c_m]), [c] = 1/c.
struct ContFrac {
  std::vector<std::int64_t> entries;

  friend bool operator==(const ContFrac&, const ContFrac&) = default;
};

Rational eval(const ContFrac& cf);

/// The unique canonical expansion: [0] for 1/0, [0, 1, -1] for 0/1.
ContFrac canonical_expand(const Rational& r);

ContFrac reverse(const ContFrac& cf);

/// [0, k, c_1, ..., c_m].
ContFrac prepend_zero_k(const ContFrac& cf, std::int64_t k);

bool is_canonical(const ContFrac& cf);

/// Entrywise negation.
ContFrac negate(const ContFrac& cf);

/// "1,1,3"
std::string to_string(const ContFrac& cf);

/// Comma-separated integers; throws std::invalid_argument on empty or malformed input.
ContFrac parse_contfrac(std::string_view text);

}  // namespace platkit
