#pragma once

#include "pcab/matrix.hpp"

#include <vector>

namespace pcab {

/// Thin SVD of a tall (n >= m) matrix: Y = U diag(l) V^T.
struct SvdResult {
    Matrix u;                           // n x m
    std::vector<double> singular_values; // descending, >= 0
    Matrix v;                           // m x m

    std::size_t rank(double rel_tol = 1e-10) const;
};

/// Thin SVD via the eigendecomposition of Y^T Y; adequate for the small
/// feature counts targeted here. V follows the eigensolver's sign canon,
/// U is flipped jointly so U diag(l) V^T reconstructs the input.
SvdResult svd(const Matrix& y);
SvdResult svd(const DataMatrix& y);

/// l_k = sqrt((n-1) * lambda_k); lambda from an (n-1)-divisor covariance.
std::vector<double> singular_values_from_eigen(const std::vector<double>& eigenvalues,
                                               std::size_t n_obs);

} // namespace pcab
