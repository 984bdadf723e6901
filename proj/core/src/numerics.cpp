#include "tubealg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tubealg/errors.hpp"

namespace tubealg {

bool Tolerance::close(Complex a, Complex b) const {
  return std::abs(a - b) <= abs_eps + rel_eps * std::max(std::abs(a), std::abs(b));
}

void Tolerance::validate() const {
  if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) return std::numeric_limits<double>::infinity();
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_isometry(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.cols() == 0) return true;
  if (m.rows() < m.cols()) {
    throw Error(ErrorCode::ShapeError, "isometry needs rows >= cols, got " +
                                           std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()));
  }
  const ComplexMatrix d = m.adjoint() * m - ComplexMatrix::Identity(m.cols(), m.cols());
  return max_abs(d) <= tol.abs_eps;
}

bool is_unitary(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  return is_isometry(m, tol) && max_abs(m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.rows())) <= tol.abs_eps;
}

Eigensystem hermitian_eigenbasis(const ComplexMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeError, "eigenbasis of a non-square matrix");
  if (max_abs(m - m.adjoint()) > tol.abs_eps) {
    throw Error(ErrorCode::NotHermitian, "matrix deviates from its adjoint by " +
                                             std::to_string(max_abs(m - m.adjoint())));
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  return {es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix orthonormalize(const ComplexMatrix& columns, const Tolerance& tol) {
  ComplexMatrix q = columns;
  const double scale = std::max(1.0, max_abs(columns));
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const Complex proj = q.col(i).dot(q.col(j));
        q.col(j) -= proj * q.col(i);
      }
    }
    const double norm = q.col(j).norm();
    if (norm <= tol.abs_eps * scale) {
      throw Error(ErrorCode::RankDeficient,
                  "column " + std::to_string(j) + " is dependent on the previous ones");
    }
    q.col(j) /= norm;
  }
  return q;
}

namespace {

template <typename Matrix>
// JacobiSVD: the divide-and-conquer solver in Eigen 3.4.0 returns NaN vectors on some
// exactly rank-deficient inputs (e.g. the Z4 regular-representation commutant).
Matrix null_space_impl(const Matrix& m, double rel_threshold) {
  const Eigen::Index n = m.cols();
  if (n == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = rel_threshold * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

}  // namespace

ComplexMatrix null_space(const ComplexMatrix& m, double rel_threshold) {
  return null_space_impl(m, rel_threshold);
}

RealMatrix null_space(const RealMatrix& m, double rel_threshold) {
  return null_space_impl(m, rel_threshold);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  const RealVector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix inv_sqrt_pd(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  const RealVector w = es.eigenvalues().cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace tubealg
