#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcab/biplot.hpp"

using namespace pcab;

TEST_CASE("alpha 0 feature coordinates match the fixture") {
    const auto y = center(fixtures::t2());
    const auto s = svd(y);
    const auto coords = biplot_coordinates(s, 0.0, 2, y.row_labels(), y.col_labels());
    // B^T from the worked 6x2 example, up to consistent column sign.
    const double expected[2][2] = {{-9.7147, -0.6768}, {-3.4706, 1.8944}};
    for (int j = 0; j < 2; ++j) {
        const double sign =
            (coords.features(0, j) * expected[0][j] >= 0.0) ? 1.0 : -1.0;
        for (int f = 0; f < 2; ++f)
            CHECK(coords.features(f, j) * sign ==
                  doctest::Approx(expected[f][j]).epsilon(5e-4));
    }
}

TEST_CASE("split identity holds for every alpha") {
    const auto y = center(fixtures::t5());
    const auto s = svd(y);
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto coords = biplot_coordinates(s, alpha, 4);
        Matrix recon = coords.observations * coords.features.transposed();
        CHECK(subtract(recon, y.values()).frobenius_norm() <
              1e-9 * y.values().frobenius_norm());
    }
}

TEST_CASE("alpha bounds and component range") {
    const auto s = svd(center(fixtures::t2()));
    CHECK_THROWS_WITH_AS(biplot_coordinates(s, 1.5, 2),
                         doctest::Contains("alpha must be in [0,1]"),
                         std::invalid_argument);
    CHECK_THROWS_AS(biplot_coordinates(s, -0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(biplot_coordinates(s, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(biplot_coordinates(s, 0.0, 3), std::invalid_argument);
}

TEST_CASE("geometry reads off sds and correlations") {
    const auto y = center(fixtures::t2());
    const auto coords = biplot_coordinates(svd(y), 0.0, 2);
    const auto g = feature_geometry(coords, y);
    CHECK(g.vector_lengths[0] == doctest::Approx(4.35507367).epsilon(1e-7));
    CHECK(g.vector_lengths[1] == doctest::Approx(1.76823829).epsilon(1e-7));
    CHECK(g.pairwise_cosines(0, 1) == doctest::Approx(0.84233585).epsilon(1e-7));
    CHECK(g.pairwise_correlations(0, 1) == doctest::Approx(0.84233585).epsilon(1e-7));
    CHECK(std::abs(g.pairwise_cosines(0, 1) - g.pairwise_correlations(0, 1)) < 1e-9);
    CHECK_FALSE(g.has_flagged_pairs());
}

TEST_CASE("truncated geometry breaks the correlation reading") {
    const auto y = center(fixtures::t5());
    const auto coords = biplot_coordinates(svd(y), 0.0, 2);
    const auto g = feature_geometry(coords, y);
    // Rank-2 truncation: cosines no longer equal correlations exactly.
    CHECK(mean_relative_difference(g.pairwise_correlations, g.pairwise_cosines) > 1e-3);
}

TEST_CASE("alpha 1 required to be 0 for geometry") {
    const auto y = center(fixtures::t2());
    const auto coords = biplot_coordinates(svd(y), 1.0, 2);
    CHECK_THROWS_AS(feature_geometry(coords, y), std::invalid_argument);
}

TEST_CASE("zero singular values obey the 0^0 convention") {
    Matrix y(4, 2, {1, 2, -1, -2, 2, 4, -2, -4}); // rank 1
    const auto s = svd(Matrix(y));
    const auto coords = biplot_coordinates(s, 0.0, 2);
    // l = 0 contributes 0 at every exponent, so A B^T still equals Y.
    Matrix recon = coords.observations * coords.features.transposed();
    CHECK(subtract(recon, y).frobenius_norm() < 1e-9 * y.frobenius_norm());
    for (std::size_t i = 0; i < 2; ++i) CHECK(coords.features(i, 1) == 0.0);
}

TEST_CASE("axis calibration") {
    const auto y = center(fixtures::t2());
    const auto coords = biplot_coordinates(svd(y), 0.0, 2);
    const auto cal = scale_calibration(coords);
    CHECK(cal.ratio > 0.0);
    CHECK_FALSE(cal.degenerate);
    CHECK(cal.observation_min[0] < 0.0);
    CHECK(cal.feature_max[0] > cal.feature_min[0]);
    const auto c5 = biplot_coordinates(svd(center(fixtures::t5())), 0.0, 4);
    CHECK_THROWS_AS(scale_calibration(c5), std::invalid_argument);
}
