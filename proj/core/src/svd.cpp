#include "pcab/svd.hpp"

#include "pcab/eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace pcab {

std::size_t SvdResult::rank(double rel_tol) const {
    if (singular_values.empty() || singular_values.front() == 0.0) return 0;
    const double cutoff = rel_tol * singular_values.front();
    std::size_t r = 0;
    while (r < singular_values.size() && singular_values[r] > cutoff) ++r;
    return r;
}

namespace {

// Fills column k of u with a unit vector orthogonal to columns [0, k).
// Takes the canonical basis vector whose residual is largest; ties by
// lowest index keep the choice deterministic.
void complete_orthonormal_column(Matrix& u, std::size_t k) {
    const std::size_t n = u.rows();
    std::vector<double> best;
    double best_norm = 0.0;
    for (std::size_t basis = 0; basis < n; ++basis) {
        std::vector<double> cand(n, 0.0);
        cand[basis] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t j = 0; j < k; ++j) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += cand[i] * u(i, j);
                for (std::size_t i = 0; i < n; ++i) cand[i] -= dot * u(i, j);
            }
        double norm = 0.0;
        for (double c : cand) norm += c * c;
        norm = std::sqrt(norm);
        if (norm > best_norm) {
            best_norm = norm;
            best = std::move(cand);
        }
    }
    if (best_norm < 1e-8) throw numeric_error("could not complete orthonormal basis");
    // Sign canon: largest-magnitude component positive.
    double lead = 0.0;
    for (double c : best)
        if (std::abs(c) > std::abs(lead)) lead = c;
    const double flip = lead < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) u(i, k) = flip * best[i] / best_norm;
}

} // namespace

SvdResult svd(const Matrix& y) {
    const std::size_t n = y.rows(), m = y.cols();
    if (n < m) throw std::invalid_argument("transpose input: thin SVD expects n >= m");
    if (!y.all_finite()) throw std::invalid_argument("non-finite value in SVD input");

    // Gram matrix Y^T Y; its eigenvalues are squared singular values.
    Matrix gram(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += y(i, a) * y(i, b);
            gram(a, b) = gram(b, a) = acc;
        }
    SpectralResult spec = eigen_symmetric(CovarianceMatrix(std::move(gram), Divisor::One));

    SvdResult out;
    out.v = spec.eigenvectors;
    out.singular_values.resize(m);
    out.u = Matrix(n, m);
    for (std::size_t k = 0; k < m; ++k)
        out.singular_values[k] = std::sqrt(std::max(spec.eigenvalues[k], 0.0));

    const double cutoff = 1e-10 * (out.singular_values.empty() ? 0.0 : out.singular_values[0]);
    for (std::size_t k = 0; k < m; ++k) {
        const double l = out.singular_values[k];
        if (k > 0 && l <= cutoff) {
            out.singular_values[k] = 0.0;
            complete_orthonormal_column(out.u, k);
            continue;
        }
        if (l == 0.0) {
            complete_orthonormal_column(out.u, k);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += y(i, j) * out.v(j, k);
            out.u(i, k) = acc / l;
        }
    }
    return out;
}

SvdResult svd(const DataMatrix& y) { return svd(y.values()); }

std::vector<double> singular_values_from_eigen(const std::vector<double>& eigenvalues,
                                               std::size_t n_obs) {
    if (n_obs < 2) throw std::invalid_argument("insufficient observations");
    std::vector<double> sv;
    sv.reserve(eigenvalues.size());
    for (double lam : eigenvalues) {
        if (lam < -1e-9) throw std::invalid_argument("negative eigenvalue");
        sv.push_back(std::sqrt(static_cast<double>(n_obs - 1) * std::max(lam, 0.0)));
    }
    return sv;
}

} // namespace pcab
