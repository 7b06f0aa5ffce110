#pragma once

#include <Eigen/Dense>

#include "trimer/spin_algebra.hpp"

namespace trimer {

/// Eigenvalues ascending; column k of `vectors` belongs to values(k).
template <typename Scalar>
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
};

/// Cyclic Jacobi for a dense Hermitian (or real symmetric) matrix.
///
/// Throws std::invalid_argument when the input is not square or not Hermitian
/// to `hermitian_tol * max(1, max|a_ij|)`.
EigenDecomposition<double> jacobi_eigh(const Eigen::MatrixXd& a, bool want_vectors = true,
                                       double hermitian_tol = 1e-10);
EigenDecomposition<Complex> jacobi_eigh(const Operator& a, bool want_vectors = true,
                                        double hermitian_tol = 1e-10);

/// True when every imaginary part is exactly zero.
bool is_real(const Operator& a);

}  // namespace trimer
