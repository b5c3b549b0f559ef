#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace platkit {

/// Arbitrary-precision signed integer used for polynomial coefficients and rationals.
using Integer = boost::multiprecision::cpp_int;

/// Exponents and knot parameters stay machine-sized.
using Exponent = std::int64_t;

/// Returns the value if it fits in int64, nullopt otherwise.
inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

/// Mathematical floor of a / b for b != 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Least non-negative residue of a modulo m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace platkit
