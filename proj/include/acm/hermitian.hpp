#pragma once

// Dense Hermitian matrices with the normalized Hilbert-Schmidt norm
//
//     hs_norm(A) = sqrt( (1/n) * sum_ij |a_ij|^2 )
//
// and the operator norm (largest |eigenvalue|). The normalization makes
// the identity a unit vector, hs_norm(I) = 1, so commutator sizes are
// dimension-free. Everything downstream measures error in hs_norm and
// constrains inputs in op_norm.

#include <complex>

#include <Eigen/Dense>

#include "acm/config.hpp"

namespace acm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Dense Hermitian matrix. Stores the full square array; `check` verifies
// conjugate symmetry up to tol.herm(n) entrywise.
struct HermitianMatrix {
    Matrix data;

    HermitianMatrix() = default;
    explicit HermitianMatrix(Matrix m) : data(std::move(m)) {}

    Index n() const { return data.rows(); }

    bool is_hermitian(double tol) const;
    void check(const Tolerances& tol = {}) const;

    static HermitianMatrix Zero(Index n) { return HermitianMatrix(Matrix::Zero(n, n)); }
    static HermitianMatrix Identity(Index n) { return HermitianMatrix(Matrix::Identity(n, n)); }
};

// Eigenvalues in ascending order.
struct Spectrum {
    RealVector values;

    Index n() const { return values.size(); }
};

// A unitary change of basis (columns are the new basis vectors).
// `check` verifies Q*Q = I up to tol.unit(n) in max entry magnitude.
struct UnitaryBasis {
    Matrix q;

    UnitaryBasis() = default;
    explicit UnitaryBasis(Matrix m) : q(std::move(m)) {}

    Index n() const { return q.rows(); }

    bool is_unitary(double tol) const;
    void check(const Tolerances& tol = {}) const;

    static UnitaryBasis Identity(Index n) { return UnitaryBasis(Matrix::Identity(n, n)); }
};

// Eigendecomposition result: H = Q diag(values) Q^*.
struct Eigensystem {
    Spectrum spectrum;
    UnitaryBasis basis;
};

// ---- norms ----

// Normalized Hilbert-Schmidt norm of a square matrix.
double hs_norm(const Matrix& a);
inline double hs_norm(const HermitianMatrix& a) { return hs_norm(a.data); }

// Operator norm of a Hermitian matrix: max |eigenvalue|.
double op_norm(const HermitianMatrix& a);

// ---- algebra ----

// Commutator AB - BA. Anti-Hermitian when both inputs are Hermitian.
Matrix commutator(const Matrix& a, const Matrix& b);
inline Matrix commutator(const HermitianMatrix& a, const HermitianMatrix& b) {
    return commutator(a.data, b.data);
}

// Size of the commutator in the normalized Hilbert-Schmidt norm.
inline double commutator_norm(const HermitianMatrix& a, const HermitianMatrix& b) {
    return hs_norm(commutator(a, b));
}

// Change of basis Q^* H Q.
Matrix conjugate(const Matrix& h, const UnitaryBasis& q);
inline Matrix conjugate(const HermitianMatrix& h, const UnitaryBasis& q) {
    return conjugate(h.data, q);
}

// Nearest Hermitian matrix (A + A^*)/2, built by mirroring the averaged
// upper triangle so the result is bitwise conjugate-symmetric and the
// diagonal imaginary parts are exactly zero. Idempotent at the bit level.
HermitianMatrix hermitize(const Matrix& a);

// ---- spectra ----

// Full eigendecomposition, values ascending. Throws numeric_error if the
// solver fails to converge.
Eigensystem eigh(const HermitianMatrix& h);

// Max entry magnitude of Q^* H Q - diag(values): how far the claimed
// eigensystem is from diagonalizing H.
double diag_residual(const HermitianMatrix& h, const Eigensystem& es);

}  // namespace acm
