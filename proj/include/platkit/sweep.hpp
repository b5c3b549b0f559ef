#pragma once

#include <cstdint>
#include <vector>

#include "platkit/platknot.hpp"

namespace platkit {

/// (p, q) with p odd, 1 < p <= max_p, q even in (0, p), gcd(p, q) = 1; ordered by p then q.
/// Every non-trivial class has exactly one such member up to mirror image.
std::vector<PlatNormalForm> nontrivial_even_forms(std::int64_t max_p);

/// Signed coefficients at the lowest and highest exponent of the closed-form polynomial.
struct ExtremeCoefficients {
  std::int64_t lowest = 0;
  std::int64_t highest = 0;

  friend bool operator==(const ExtremeCoefficients&, const ExtremeCoefficients&) = default;
};

/// O(p) time, O(1) memory. Uses d(i) = i (mod 2): every hit on exponent k carries the sign (-1)^k,
/// so |a_k| is the number of i in [0, p) with d(i) = k.
ExtremeCoefficients extreme_coefficients(std::int64_t p, std::int64_t q_even);

struct MonicSweep {
  std::uint64_t checked = 0;
  std::vector<PlatNormalForm> monic;  // sorted by (p, q)

  friend bool operator==(const MonicSweep&, const MonicSweep&) = default;
};

/// Serial reference: ribbon type -> sparse Alexander polynomial -> is_monic.
MonicSweep sweep_monic_reference(std::int64_t max_p);

/// OpenMP kernel over extreme_coefficients. jobs <= 0 uses the runtime default.
MonicSweep sweep_monic_parallel(std::int64_t max_p, int jobs);

/// Worker count the runtime would use by default.
int default_parallelism();

}  // namespace platkit
