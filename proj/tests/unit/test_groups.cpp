#include <random>

#include <gtest/gtest.h>

#include <tubealg/errors.hpp>
#include <tubealg/fusion.hpp>
#include <tubealg/groups.hpp>

#include "oracles.hpp"

using namespace tubealg;

TEST(Groups, NamedGroupsAreGroups) {
  for (const char* name : {"z1", "z2", "z3", "z5", "z12", "z2xz2", "s3"}) {
    const FiniteGroup g = group_by_name(name);
    EXPECT_NO_THROW(validate_group(g)) << name;
  }
  EXPECT_THROW(group_by_name("z13"), Error);
  EXPECT_THROW(group_by_name("a4"), Error);
}

TEST(Groups, S3IsNonAbelianWithSixElements) {
  const FiniteGroup s3 = symmetric_group_3();
  EXPECT_EQ(s3.order(), 6);
  EXPECT_FALSE(s3.is_abelian());
  int involutions = 0;
  for (int g = 1; g < 6; ++g) involutions += s3.mul(g, g) == 0;
  EXPECT_EQ(involutions, 3);
}

TEST(Groups, BrokenTableRejected) {
  FiniteGroup g = cyclic_group(3);
  g.table[1][1] = 1;
  EXPECT_THROW(validate_group(g), Error);
}

TEST(Cocycles, CyclicCocyclesSatisfyCocycleCondition) {
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup g = cyclic_group(n);
    for (int p = 0; p < n; ++p) EXPECT_LT(cocycle_residual(g, cyclic_cocycle(g, p)), 1e-12) << n << " " << p;
  }
}

TEST(Cocycles, KleinTrilinearCocycles) {
  const FiniteGroup v4 = klein_group();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) EXPECT_LT(cocycle_residual(v4, klein_trilinear_cocycle(v4, i, j, k)), 1e-12);
}

TEST(Cocycles, RandomPhasePerturbationDetected) {
  const FiniteGroup g = cyclic_group(3);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.1, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    Cocycle3 w = cyclic_cocycle(g, 1);
    w.at(1, 2, 1) *= std::polar(1.0, angle(rng));
    EXPECT_GT(cocycle_residual(g, w), 1e-3);
  }
}

TEST(Cocycles, PointedZ2NontrivialPassesBruteForcePentagon) {
  const FiniteGroup z2 = cyclic_group(2);
  const Cocycle3 w = cyclic_cocycle(z2, 1);
  EXPECT_NEAR(w(1, 1, 1).real(), -1.0, 1e-15);
  EXPECT_LT(oracle::pentagon_bruteforce(build_pointed(z2, w)), 1e-12);
}

TEST(Bicharacters, Properties) {
  const FiniteGroup z3 = cyclic_group(3), v4 = klein_group();
  for (const auto& [g, chi] : {std::pair{z3, cyclic_bicharacter(z3, 1)}, std::pair{z3, cyclic_bicharacter(z3, 2)},
                               std::pair{v4, klein_hyperbolic_bicharacter(v4)},
                               std::pair{v4, klein_diagonal_bicharacter(v4)}}) {
    EXPECT_LT(bicharacter_residual(g, chi), 1e-12);
    EXPECT_TRUE(is_symmetric(chi, 1e-12));
    EXPECT_TRUE(is_nondegenerate(g, chi, 1e-12));
  }
  const FiniteGroup z4 = cyclic_group(4);
  EXPECT_FALSE(is_nondegenerate(z4, cyclic_bicharacter(z4, 2), 1e-12));
}
