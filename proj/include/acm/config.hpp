#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace acm {

using Index = Eigen::Index;

// Thrown when matrix dimensions do not line up.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an input value lies outside an operation's domain
// (unsorted spectra, eigenvalues outside [-1,1], invalid parameters).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an input violates a pipeline precondition (operator norm
// above 1, commutator norm outside the guaranteed regime without force).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown on eigensolver non-convergence or loss of exact representability.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a matrix violates an expected block structure.
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on unreadable, unparsable, or schema-violating files.
struct file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical tolerances. The n-scaled ones grow linearly with the matrix
// dimension; defaults sit at n-scaled machine-epsilon magnitude.
struct Tolerances {
    double herm_scale = 1e-12;  // conjugate-symmetry slack per dimension
    double eig = 1e-10;         // eigenvalue / operator-norm slack
    double unit_scale = 1e-10;  // unitarity slack per dimension
    double diag_scale = 1e-10;  // diagonalization residual slack per dimension

    double herm(Index n) const { return herm_scale * static_cast<double>(n); }
    double unit(Index n) const { return unit_scale * static_cast<double>(n); }
    double diag(Index n) const { return diag_scale * static_cast<double>(n); }
};

}  // namespace acm
