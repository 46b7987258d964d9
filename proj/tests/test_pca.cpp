#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcab/pca.hpp"

using namespace pcab;

TEST_CASE("both routes recover the fixture eigenvalues") {
    const auto y = center(fixtures::t2());
    ConventionProfile eigen_p = find_profile("eigen-n");
    eigen_p.divisor = Divisor::NMinusOne;
    const auto re = pca_eigen(y, eigen_p);
    const auto rs = pca_svd(y, find_profile("svd-reference"));

    CHECK(re.eigenvalues[0] == doctest::Approx(21.28401224).epsilon(1e-7));
    CHECK(re.eigenvalues[1] == doctest::Approx(0.80932109).epsilon(1e-7));
    CHECK(rs.eigenvalues[0] == doctest::Approx(21.28401224).epsilon(1e-7));
    CHECK(rs.eigenvalues[1] == doctest::Approx(0.80932109).epsilon(1e-7));
    CHECK(rs.singular_values[0] == doctest::Approx(10.31600995).epsilon(1e-8));
}

TEST_CASE("score magnitudes match the fixture") {
    const auto y = center(fixtures::t2());
    const auto r = pca_svd(y, find_profile("svd-reference"));
    const double expected[] = {4.72, 4.9889, 2.5002, 2.8812, 3.8902, 5.4375};
    for (int i = 0; i < 6; ++i)
        CHECK(std::abs(r.scores(i, 0)) == doctest::Approx(expected[i]).epsilon(5e-4));
}

TEST_CASE("routes agree in absolute value") {
    const auto y = center(fixtures::t5());
    ConventionProfile eigen_p = find_profile("eigen-n");
    eigen_p.divisor = Divisor::NMinusOne;
    const auto re = pca_eigen(y, eigen_p);
    const auto rs = pca_svd(y, find_profile("svd-reference"));
    CHECK(mean_relative_difference(abs(rs.scores), abs(re.scores)) < 1e-8);
}

TEST_CASE("profile registry and lookup") {
    CHECK(profile_registry().size() == 6);
    CHECK(find_profile("gsvd-n").divisor == Divisor::N);
    CHECK_THROWS_WITH_AS(find_profile("nope"), doctest::Contains("available"),
                         std::invalid_argument);
}

TEST_CASE("divisor-n profile shrinks eigenvalues by (n-1)/n") {
    const auto y = center(fixtures::t5());
    const auto rn = analyze(y, find_profile("eigen-n"));
    const auto rs = analyze(y, find_profile("svd-reference"));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(rn.eigenvalues[k] == doctest::Approx(rs.eigenvalues[k] * 5.0 / 6.0));
}

TEST_CASE("rescaled profile inverts its own scalings") {
    const auto y = center(fixtures::t5());
    const auto r = analyze(y, find_profile("eigen-rescaled"));
    // loadings * sqrt(lambda), scores / sqrt(lambda): the product of the
    // scalings cancels, so scores * loadings^T still reconstructs Y.
    Matrix recon = r.scores * r.loadings.transposed();
    CHECK(subtract(recon, y.values()).frobenius_norm() <
          1e-8 * y.values().frobenius_norm());
}

TEST_CASE("explained variance ratios sum to one") {
    const auto y = center(fixtures::t5());
    const auto r = analyze(y, find_profile("svd-reference"));
    double sum = 0.0;
    for (double v : r.explained_variance_ratio) sum += v;
    CHECK(sum == doctest::Approx(1.0));
    CHECK(r.explained_variance_ratio[0] > r.explained_variance_ratio[1]);
}

TEST_CASE("rank-k reconstruction") {
    const auto y = center(fixtures::t5());
    const auto r = analyze(y, find_profile("svd-reference"));
    Matrix full = reconstruct_rank_k(r, 4);
    CHECK(subtract(full, y.values()).frobenius_norm() <
          1e-9 * y.values().frobenius_norm());
    Matrix truncated = reconstruct_rank_k(r, 2);
    const double residual = subtract(truncated, y.values()).frobenius_norm();
    const double expected = std::sqrt(r.singular_values[2] * r.singular_values[2] +
                                      r.singular_values[3] * r.singular_values[3]);
    CHECK(residual == doctest::Approx(expected).epsilon(1e-8));
    CHECK_THROWS_AS(reconstruct_rank_k(r, 0), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_rank_k(analyze(y, find_profile("eigen-rescaled")), 2),
                    std::invalid_argument);
}

TEST_CASE("route mismatches are rejected") {
    const auto y = center(fixtures::t2());
    CHECK_THROWS_AS(pca_eigen(y, find_profile("svd-reference")), std::invalid_argument);
    CHECK_THROWS_AS(pca_svd(y, find_profile("eigen-n")), std::invalid_argument);
    CHECK_THROWS_WITH_AS(pca_svd(fixtures::t2(), find_profile("svd-reference")),
                         doctest::Contains("not centered"), std::invalid_argument);
}
