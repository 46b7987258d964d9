#pragma once

#include "pcab/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace pcab {

/// Thrown when an iterative routine fails to converge.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues (descending) with paired eigenvector columns.
struct SpectralResult {
    std::vector<double> eigenvalues;
    Matrix eigenvectors; // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Columns are sign-canonicalized: the largest-magnitude component of each
/// eigenvector is made positive, ties broken by lowest index.
SpectralResult eigen_symmetric(const Matrix& m);

/// Same, but clamps eigenvalues in [-1e-9, 0) to exact 0 (covariance input
/// is positive semidefinite up to roundoff).
SpectralResult eigen_symmetric(const CovarianceMatrix& m);

} // namespace pcab
