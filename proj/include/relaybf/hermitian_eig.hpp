#pragma once

#include <Eigen/Dense>
#include <complex>

namespace relaybf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Full eigendecomposition of a Hermitian matrix, eigenvalues in
/// descending order, unit-norm eigenvectors as columns.
struct HermitianEig {
    RVector values;
    CMatrix vectors;
};

/// Cyclic Jacobi eigensolver for small dense Hermitian matrices.
/// Intended for dimensions up to ~16; throws std::invalid_argument if the
/// input deviates from Hermitian symmetry by more than `herm_tol` (relative
/// to the largest entry magnitude).
HermitianEig jacobi_eig(const CMatrix& m, double herm_tol = 1e-10);

/// Principal eigenpair with a deterministic phase convention: the
/// largest-magnitude entry of the returned vector is real and positive.
/// Ties between equal eigenvalues resolve to the first column produced by
/// the (deterministic) Jacobi sweep order.
std::pair<CVector, double> principal_eigvec(const CMatrix& m,
                                            double herm_tol = 1e-10);

/// Fixes the global phase of v so its largest-magnitude entry is real
/// positive. Zero vectors are returned unchanged.
CVector canonical_phase(const CVector& v);

struct ComplexSvd {
    CMatrix u;       // left singular vectors (columns)
    RVector sigma;   // singular values, descending
    CMatrix v;       // right singular vectors (columns)
};

/// SVD of a square complex matrix via the Hermitian embedding
/// [[0, A^H], [A, 0]], reusing the Jacobi kernel. Adequate for the tiny
/// matrices used by the cone scalings.
ComplexSvd complex_svd(const CMatrix& a);

/// Hermitian square root / inverse square root from the eigensystem.
/// Requires eigenvalues > floor; throws std::domain_error otherwise.
CMatrix hermitian_sqrt(const CMatrix& m, double floor = 0.0);
CMatrix hermitian_inv_sqrt(const CMatrix& m, double floor = 0.0);

}  // namespace relaybf
