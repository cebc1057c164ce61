#include "acm/hermitian.hpp"

#include <cmath>

namespace acm {

bool HermitianMatrix::is_hermitian(double tol) const {
    const Index m = n();
    if (data.cols() != m) return false;
    for (Index j = 0; j < m; ++j)
        for (Index i = 0; i <= j; ++i)
            if (std::abs(data(i, j) - std::conj(data(j, i))) > tol) return false;
    return true;
}

void HermitianMatrix::check(const Tolerances& tol) const {
    if (data.rows() != data.cols())
        throw dimension_error("matrix is not square");
    if (n() < 1)
        throw dimension_error("matrix is empty");
    if (!is_hermitian(tol.herm(n())))
        throw domain_error("matrix is not Hermitian within tolerance");
}

bool UnitaryBasis::is_unitary(double tol) const {
    const Index m = n();
    if (q.cols() != m) return false;
    Matrix g = q.adjoint() * q;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff() <= tol;
}

void UnitaryBasis::check(const Tolerances& tol) const {
    if (q.rows() != q.cols())
        throw dimension_error("basis matrix is not square");
    if (n() < 1)
        throw dimension_error("basis matrix is empty");
    if (!is_unitary(tol.unit(n())))
        throw domain_error("basis matrix is not unitary within tolerance");
}

double hs_norm(const Matrix& a) {
    if (a.rows() != a.cols())
        throw dimension_error("hs_norm requires a square matrix");
    if (a.rows() < 1)
        throw dimension_error("hs_norm requires a nonempty matrix");
    return a.norm() / std::sqrt(static_cast<double>(a.rows()));
}

double op_norm(const HermitianMatrix& a) {
    Eigensystem es = eigh(a);
    const RealVector& w = es.spectrum.values;
    return std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw dimension_error("commutator requires equal square dimensions");
    return a * b - b * a;
}

Matrix conjugate(const Matrix& h, const UnitaryBasis& q) {
    if (h.rows() != q.n() || h.cols() != q.n())
        throw dimension_error("conjugate requires matching dimensions");
    return q.q.adjoint() * h * q.q;
}

HermitianMatrix hermitize(const Matrix& a) {
    if (a.rows() != a.cols())
        throw dimension_error("hermitize requires a square matrix");
    const Index m = a.rows();
    Matrix out(m, m);
    for (Index j = 0; j < m; ++j) {
        out(j, j) = Complex(a(j, j).real(), 0.0);
        for (Index i = 0; i < j; ++i) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(out));
}

Eigensystem eigh(const HermitianMatrix& h) {
    if (h.data.rows() != h.data.cols())
        throw dimension_error("eigh requires a square matrix");
    if (h.n() < 1)
        throw dimension_error("eigh requires a nonempty matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.data);
    if (solver.info() != Eigen::Success)
        throw numeric_error("eigensolver failed to converge (n=" +
                            std::to_string(h.n()) + ")");
    return Eigensystem{Spectrum{solver.eigenvalues()}, UnitaryBasis(solver.eigenvectors())};
}

double diag_residual(const HermitianMatrix& h, const Eigensystem& es) {
    if (h.n() != es.basis.n() || es.spectrum.n() != h.n())
        throw dimension_error("diag_residual requires matching dimensions");
    Matrix rotated = conjugate(h, es.basis);
    rotated -= Matrix(es.spectrum.values.cast<Complex>().asDiagonal());
    return rotated.cwiseAbs().maxCoeff();
}

}  // namespace acm
