#include <numeric>
#include <gtest/gtest.h>

#include "platkit/sweep.hpp"

using namespace platkit;

TEST(Sweep, NontrivialEvenForms) {
  EXPECT_TRUE(nontrivial_even_forms(1).empty());
  const auto forms = nontrivial_even_forms(19);
  EXPECT_EQ(forms.size(), 41u);
  EXPECT_EQ(forms.front(), PlatNormalForm(3, 2));
  EXPECT_EQ(forms.back(), PlatNormalForm(19, 18));
  // 15 keeps only 2, 4, 8, 14.
  std::vector<std::int64_t> q15;
  for (const auto& nf : forms) {
    if (nf.p() == 15) q15.push_back(nf.q());
  }
  EXPECT_EQ(q15, (std::vector<std::int64_t>{2, 4, 8, 14}));
}

TEST(Sweep, ExtremeCoefficientsMatchSparsePolynomial) {
  for (std::int64_t p = 1; p < 160; p += 2) {
    for (std::int64_t q = 0; q < 2 * p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const auto delta = alexander_closed(p, q);
      const auto ext = extreme_coefficients(p, q);
      EXPECT_EQ(Integer(ext.lowest), delta.lowest_coefficient()) << p << "," << q;
      EXPECT_EQ(Integer(ext.highest), delta.highest_coefficient()) << p << "," << q;
    }
  }
}

TEST(Sweep, SmallestCase) {
  const auto r = sweep_monic_parallel(3, 1);
  EXPECT_EQ(r.checked, 1u);
  EXPECT_TRUE(r.monic.empty());
  EXPECT_EQ(sweep_monic_reference(3), r);
}

TEST(Sweep, ParallelKernelMatchesSerialReference) {
  const auto reference = sweep_monic_reference(251);
  EXPECT_EQ(reference.checked, nontrivial_even_forms(251).size());
  EXPECT_TRUE(reference.monic.empty());
  for (int jobs : {1, 2, 3, 8}) EXPECT_EQ(sweep_monic_parallel(251, jobs), reference) << jobs;
  EXPECT_EQ(sweep_monic_parallel(251, 0), reference);
}

TEST(Sweep, DefaultParallelismIsPositive) { EXPECT_GE(default_parallelism(), 1); }
