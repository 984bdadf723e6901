#include <random>

#include <gtest/gtest.h>

#include <tubealg/errors.hpp>
#include <tubealg/numerics.hpp>

#include "draws.hpp"

using namespace tubealg;

namespace {

ComplexMatrix random_matrix(int r, int c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

}  // namespace

TEST(Numerics, ToleranceRejectsNonPositive) {
  Tolerance t{0.0, 1e-9};
  EXPECT_THROW(t.validate(), Error);
  EXPECT_TRUE(Tolerance{}.close(1.0, 1.0 + 1e-12));
  EXPECT_FALSE(Tolerance{}.close(1.0, 1.0 + 1e-6));
}

TEST(Numerics, IsometryColumnVectors) {
  ComplexMatrix v(2, 1);
  v << -0.5, std::sqrt(3.0) / 2.0;
  EXPECT_TRUE(is_isometry(v));
  ComplexMatrix w(2, 1);
  w << 0.0, 1.0;
  EXPECT_TRUE(is_isometry(w));
  ComplexMatrix wide(1, 2);
  wide << 1.0, 0.0;
  EXPECT_THROW(is_isometry(wide), Error);
}

TEST(Numerics, HermitianEigenbasisRejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  try {
    hermitian_eigenbasis(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
}

TEST(Numerics, EigenbasisReconstructsRandomHermitian) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ComplexMatrix a = random_matrix(5, 5, seed);
    const ComplexMatrix h = a + a.adjoint();
    const Eigensystem es = hermitian_eigenbasis(h);
    for (int i = 1; i < es.values.size(); ++i) EXPECT_LE(es.values(i - 1), es.values(i));
    const ComplexMatrix back = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    EXPECT_LT(max_abs(back - h), 1e-10);
  }
}

TEST(Numerics, OrthonormalizeKeepsFirstDirection) {
  const ComplexMatrix a = random_matrix(6, 3, 3);
  const ComplexMatrix q = orthonormalize(a);
  EXPECT_LT(max_abs(q.adjoint() * q - ComplexMatrix::Identity(3, 3)), 1e-12);
  EXPECT_LT(max_abs(q.col(0) - a.col(0) / a.col(0).norm()), 1e-12);
  ComplexMatrix dependent(3, 2);
  dependent.col(0) = a.col(0).head(3);
  dependent.col(1) = 2.0 * a.col(0).head(3);
  EXPECT_THROW(orthonormalize(dependent), Error);
}

TEST(Numerics, NullSpace) {
  const ComplexMatrix a = random_matrix(2, 5, 9);
  const ComplexMatrix n = null_space(a);
  EXPECT_EQ(n.cols(), 3);
  EXPECT_LT(max_abs(a * n), 1e-10);
  RealMatrix r(1, 3);
  r << 1.0, 1.0, 1.0;
  EXPECT_EQ(null_space(r).cols(), 2);
}

TEST(Numerics, SquareRoots) {
  const ComplexMatrix a = random_matrix(4, 4, 11);
  const ComplexMatrix pd = a * a.adjoint() + ComplexMatrix::Identity(4, 4);
  const ComplexMatrix r = sqrt_psd(pd);
  EXPECT_LT(max_abs(r * r - pd), 1e-10);
  EXPECT_LT(max_abs(inv_sqrt_pd(pd) * r - ComplexMatrix::Identity(4, 4)), 1e-10);
}

TEST(Numerics, KronVecIdentity) {
  const ComplexMatrix a = random_matrix(2, 3, 1), x = random_matrix(3, 4, 2), b = random_matrix(4, 2, 3);
  const ComplexMatrix axb = a * x * b;
  const ComplexVector lhs = Eigen::Map<const ComplexVector>(axb.data(), axb.size());
  const ComplexVector vx = Eigen::Map<const ComplexVector>(x.data(), x.size());
  EXPECT_LT(max_abs(kron(b.transpose(), a) * vx - lhs), 1e-12);
}

TEST(Numerics, RandomUnitaryHelper) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_unitary(draws::random_unitary(n, 100 + n)));
}
