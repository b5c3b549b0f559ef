#include "platkit/sweep.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace platkit {

std::vector<PlatNormalForm> nontrivial_even_forms(std::int64_t max_p) {
  std::vector<PlatNormalForm> out;
  for (std::int64_t p = 3; p <= max_p; p += 2) {
    for (std::int64_t q = 2; q < p; q += 2) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

ExtremeCoefficients extreme_coefficients(std::int64_t p, std::int64_t q_even) {
  std::int64_t d = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t lo_hits = 1;  // d(0) = 0 is the constant term
  std::int64_t hi_hits = 1;
  std::int64_t quotient = 0;  // floor(i q / p), advanced incrementally
  std::int64_t rem = 0;
  const std::int64_t step_quot = q_even / p;
  const std::int64_t step_rem = q_even % p;
  for (std::int64_t i = 1; i < p; ++i) {
    quotient += step_quot;
    rem += step_rem;
    if (rem >= p) {
      rem -= p;
      ++quotient;
    }
    d += (quotient & 1) ? -1 : 1;
    if (d < lo) {
      lo = d;
      lo_hits = 1;
    } else if (d == lo) {
      ++lo_hits;
    }
    if (d > hi) {
      hi = d;
      hi_hits = 1;
    } else if (d == hi) {
      ++hi_hits;
    }
  }
  auto sign = [](std::int64_t k) { return (k & 1) ? -1 : 1; };
  return {sign(lo) * lo_hits, sign(hi) * hi_hits};
}

MonicSweep sweep_monic_reference(std::int64_t max_p) {
  MonicSweep out;
  for (const auto& nf : nontrivial_even_forms(max_p)) {
    ++out.checked;
    if (is_monic(alexander_from_ribbon_type(ribbon_type(nf)))) out.monic.push_back(nf);
  }
  return out;
}

MonicSweep sweep_monic_parallel(std::int64_t max_p, int jobs) {
  const auto forms = nontrivial_even_forms(max_p);
  const auto n = static_cast<std::int64_t>(forms.size());
  if (jobs <= 0) jobs = default_parallelism();
  std::vector<std::uint8_t> monic(forms.size(), 0);
  std::uint64_t checked = 0;

#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs) reduction(+ : checked)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& nf = forms[static_cast<std::size_t>(i)];
    const auto ext = extreme_coefficients(nf.p(), nf.q());
    monic[static_cast<std::size_t>(i)] = (ext.lowest == 1 || ext.lowest == -1) && (ext.highest == 1 || ext.highest == -1);
    ++checked;
  }

  MonicSweep out;
  out.checked = checked;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (monic[i]) out.monic.push_back(forms[i]);
  }
  return out;
}

int default_parallelism() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace platkit
