#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace tubealg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  // |a - b| <= abs_eps + rel_eps * max(|a|, |b|)
  bool close(Complex a, Complex b) const;
  // Throws InvalidArgument unless both epsilons are positive.
  void validate() const;
};

ComplexMatrix conjugate_transpose(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

// Throws ShapeError when rows < cols (unless cols == 0).
bool is_isometry(const ComplexMatrix& m, const Tolerance& tol = {});
bool is_unitary(const ComplexMatrix& m, const Tolerance& tol = {});

struct Eigensystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns, unitary
};

// Throws NotHermitian when ||m - m^dagger||_max > abs_eps.
Eigensystem hermitian_eigenbasis(const ComplexMatrix& m, const Tolerance& tol = {});

// Modified Gram-Schmidt with one re-orthogonalisation pass. Column order is
// kept, so the first output column is the normalised first input column.
// Throws RankDeficient.
ComplexMatrix orthonormalize(const ComplexMatrix& columns, const Tolerance& tol = {});

// Orthonormal basis of the right null space, singular values below
// rel_threshold * max(1, sigma_max) count as zero.
ComplexMatrix null_space(const ComplexMatrix& m, double rel_threshold = 1e-9);
RealMatrix null_space(const RealMatrix& m, double rel_threshold = 1e-9);

// Hermitian square root and inverse square root of a positive definite matrix.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);
ComplexMatrix inv_sqrt_pd(const ComplexMatrix& m);

// Column-stacked vec(): vec(A X B) = (B^T kron A) vec(X).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace tubealg
