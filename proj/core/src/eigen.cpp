#include "pcab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcab {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
}

void canonicalize_column_sign(Matrix& v, std::size_t col) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double a = std::abs(v(i, col));
        if (a > best) { // strict: ties keep the lowest index
            best = a;
            arg = i;
        }
    }
    if (v(arg, col) < 0.0)
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, col) = -v(i, col);
}

} // namespace

SpectralResult eigen_symmetric(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix not symmetric");
    const std::size_t n = m.rows();
    const double sym_tol = 1e-9 * (1.0 + m.max_abs());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > sym_tol)
                throw std::invalid_argument("matrix not symmetric");

    Matrix a = m;
    // Work on the symmetrized copy so tiny asymmetries cannot drift.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
    Matrix v = Matrix::identity(n);

    const double norm = a.frobenius_norm();
    const double target = 1e-12 * norm;
    bool converged = (n < 2) || off_diagonal_norm(a) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        converged = off_diagonal_norm(a) <= target;
    }
    if (!converged) throw numeric_error("eigensolver did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SpectralResult out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
        canonicalize_column_sign(out.eigenvectors, k);
    }
    return out;
}

SpectralResult eigen_symmetric(const CovarianceMatrix& m) {
    SpectralResult r = eigen_symmetric(m.values);
    for (double& lam : r.eigenvalues)
        if (lam < 0.0 && lam >= -1e-9) lam = 0.0;
    return r;
}

} // namespace pcab
