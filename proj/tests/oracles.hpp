#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "pcab/matrix.hpp"

// Closed-form eigenvalue oracles, independent of the Jacobi solver.

namespace oracles {

// Roots of the 2x2 characteristic polynomial, descending.
inline std::array<double, 2> eigenvalues_2x2(const pcab::Matrix& m) {
    const double tr = m(0, 0) + m(1, 1);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

// Trigonometric solution of the symmetric 3x3 characteristic cubic,
// descending. Standard shift-and-scale reduction to 2 cos(theta).
inline std::array<double, 3> eigenvalues_3x3(const pcab::Matrix& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> diag = {a(0, 0), a(1, 1), a(2, 2)};
        std::sort(diag.begin(), diag.end(), std::greater<>());
        return diag;
    }
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);

    // det((1/p)(A - q I)) / 2, clamped into acos range.
    pcab::Matrix b(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;

    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    return {e1, e2, e3};
}

// Singular values of an n x 2 matrix via the 2x2 Gram eigenroots.
inline std::array<double, 2> singular_values_nx2(const pcab::Matrix& y) {
    pcab::Matrix gram = y.transposed() * y;
    const auto ev = eigenvalues_2x2(gram);
    return {std::sqrt(std::max(ev[0], 0.0)), std::sqrt(std::max(ev[1], 0.0))};
}

} // namespace oracles
