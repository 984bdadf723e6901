#include <gtest/gtest.h>

#include <tubealg/builtins.hpp>
#include <tubealg/errors.hpp>

#include "oracles.hpp"

using namespace tubealg;
using oracle::phi;

namespace {

std::vector<FusionCategoryData> all_fusion_builtins() {
  std::vector<FusionCategoryData> out;
  for (const auto& id : builtin_ids()) {
    auto b = load_builtin(id);
    if (b.fusion) out.push_back(*b.fusion);
  }
  return out;
}

}  // namespace

TEST(Fusion, PentagonBruteForceAllBuiltins) {
  for (const auto& cat : all_fusion_builtins()) {
    const double oracle_residual = oracle::pentagon_bruteforce(cat);
    EXPECT_LT(oracle_residual, 1e-9) << cat.name;
    const auto rep = validate_pentagon(cat);
    EXPECT_TRUE(rep.pass) << cat.name << " " << rep.detail;
    EXPECT_NEAR(rep.residual, oracle_residual, 1e-12) << cat.name;
  }
}

TEST(Fusion, FibonacciData) {
  const auto fib = build_fib();
  EXPECT_LT(oracle::pentagon_bruteforce(fib), 1e-12);
  EXPECT_NEAR(fib.dims[1], phi, 1e-15);
  const int t = fib.label_index("tau");
  const ComplexMatrix f = fib.f_matrix(t, t, t, t);
  EXPECT_NEAR(f(0, 0).real(), 1.0 / phi, 1e-15);
  EXPECT_NEAR(f(0, 1).real(), 1.0 / std::sqrt(phi), 1e-15);
  EXPECT_NEAR(f(1, 0).real(), 1.0 / std::sqrt(phi), 1e-15);
  EXPECT_NEAR(f(1, 1).real(), -1.0 / phi, 1e-15);
  EXPECT_TRUE(validate_unitarity(fib).pass);
  EXPECT_TRUE(validate_ring(fib).pass);
}

TEST(Fusion, YangLeeIsValidButNotUnitary) {
  const auto yl = build_yang_lee();
  EXPECT_LT(oracle::pentagon_bruteforce(yl), 1e-12);
  EXPECT_TRUE(validate_pentagon(yl).pass);
  EXPECT_NEAR(yl.dims[1], -1.0 / phi, 1e-15);
  EXPECT_FALSE(validate_unitarity(yl).pass);
  EXPECT_FALSE(yl.unitary);
}

TEST(Fusion, RepS3Data) {
  const auto rs = build_rep_s3();
  EXPECT_EQ(rs.dims, (std::vector<double>{1.0, 1.0, 2.0}));
  const int pi = rs.label_index("pi");
  EXPECT_EQ(rs.ring(pi, pi, pi), 1);
  EXPECT_LT(oracle::f_matrix_unitarity_bruteforce(rs), 1e-12);
  EXPECT_TRUE(validate_unitarity(rs).pass);
}

TEST(Fusion, PerronFrobeniusMatchesDims) {
  for (const auto& cat : all_fusion_builtins()) {
    if (!cat.unitary) continue;  // Yang-Lee carries the Galois-conjugate dimension
    const auto pf = perron_frobenius_dims(cat.ring);
    for (int i = 0; i < cat.size(); ++i) EXPECT_NEAR(pf[i], std::abs(cat.dims[i]), 1e-9) << cat.name;
  }
}

TEST(Fusion, IsingFromTambaraYamagami) {
  const FiniteGroup z2 = cyclic_group(2);
  const auto plus = build_ty(z2, cyclic_bicharacter(z2, 1), 1.0 / std::sqrt(2.0));
  const auto minus = build_ty(z2, cyclic_bicharacter(z2, 1), -1.0 / std::sqrt(2.0));
  const int m = plus.label_index("m");
  EXPECT_EQ(plus.ring.fuse(m, m), (std::vector<int>{0, 1}));
  EXPECT_NEAR(plus.dims[m], std::sqrt(2.0), 1e-15);
  EXPECT_LT(oracle::pentagon_bruteforce(plus), 1e-12);
  EXPECT_LT(oracle::pentagon_bruteforce(minus), 1e-12);
  EXPECT_NEAR(std::abs(plus.F(m, m, m, m, 0, 0) - minus.F(m, m, m, m, 0, 0)), std::sqrt(2.0), 1e-12);
}

TEST(Fusion, TambaraYamagamiRejectsBadInput) {
  const FiniteGroup z4 = cyclic_group(4);
  EXPECT_THROW(build_ty(z4, cyclic_bicharacter(z4, 2), 0.5), Error);
  const FiniteGroup z3 = cyclic_group(3);
  EXPECT_THROW(build_ty(z3, cyclic_bicharacter(z3, 1), 0.5), Error);
  EXPECT_THROW(build_ty(symmetric_group_3(), Bicharacter{6, std::vector<Complex>(36, 1.0)}, 1.0 / std::sqrt(6.0)),
               Error);
}

TEST(Fusion, CorruptedFSymbolFailsPentagon) {
  auto fib = build_fib();
  const int t = fib.label_index("tau");
  (*fib.f_symbols)[FKey{t, t, t, t, t, t}] *= 1.01;
  const auto rep = validate_pentagon(fib);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(oracle::pentagon_bruteforce(fib), 1e-3);
}

TEST(Fusion, MissingFSymbols) {
  auto fib = build_fib();
  fib.f_symbols.reset();
  try {
    validate_pentagon(fib);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingFSymbols);
  }
  EXPECT_THROW(derive_tube(fib), Error);
}

TEST(Fusion, BrokenRingDetected) {
  auto fib = build_fib();
  fib.ring.at(1, 1, 0) = 2;
  EXPECT_FALSE(validate_ring(fib).pass);
}
