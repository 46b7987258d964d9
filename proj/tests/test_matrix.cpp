#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fixtures.hpp"
#include "pcab/matrix.hpp"

using namespace pcab;

TEST_CASE("divisor values") {
    CHECK(divisor_value(Divisor::NMinusOne, 6) == 5.0);
    CHECK(divisor_value(Divisor::N, 6) == 6.0);
    CHECK(divisor_value(Divisor::One, 6) == 1.0);
    CHECK_THROWS_WITH_AS(divisor_value(Divisor::NMinusOne, 1),
                         doctest::Contains("insufficient observations"),
                         std::invalid_argument);
}

TEST_CASE("centering removes column means") {
    const auto x = fixtures::t2();
    CHECK_FALSE(x.is_centered());
    const auto y = center(x);
    CHECK(y.is_centered());
    const auto means = column_means(y);
    for (double m : means) CHECK(std::abs(m) < 1e-12);
    CHECK(y.values()(0, 0) == doctest::Approx(10.0 - 35.0 / 6.0));
    CHECK(y.row_labels() == x.row_labels());
}

TEST_CASE("covariance divisors scale consistently") {
    const auto y = center(fixtures::t2());
    const auto c1 = covariance(y, Divisor::NMinusOne);
    const auto cn = covariance(y, Divisor::N);
    const auto cg = covariance(y, Divisor::One);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(cn.values(i, j) * 6.0 == doctest::Approx(cg.values(i, j)));
            CHECK(c1.values(i, j) * 5.0 == doctest::Approx(cg.values(i, j)));
        }
    CHECK_THROWS_WITH_AS(covariance(fixtures::t2(), Divisor::NMinusOne),
                         doctest::Contains("not centered"), std::invalid_argument);
}

TEST_CASE("column variances of the 6x2 fixture") {
    const auto y = center(fixtures::t2());
    const auto v = column_variances(y, Divisor::NMinusOne);
    // Sum of variances equals the total eigenvalue mass 22.09333...
    CHECK(v[0] + v[1] == doctest::Approx(21.28401224 + 0.80932109).epsilon(1e-6));
}

TEST_CASE("mean relative difference is order sensitive") {
    std::vector<double> target = {2.0, 4.0};
    std::vector<double> current = {1.0, 2.0};
    CHECK(mean_relative_difference(target, current) == doctest::Approx(0.5));
    CHECK(mean_relative_difference(current, target) == doctest::Approx(1.0));
    std::vector<double> zeros = {0.0, 0.0};
    CHECK_THROWS_WITH_AS(mean_relative_difference(zeros, current),
                         doctest::Contains("relative difference undefined"),
                         std::invalid_argument);
}

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(DataMatrix(Matrix(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(DataMatrix(Matrix(3, 2, {1, 2, 3, 4, 5,
                                             std::numeric_limits<double>::quiet_NaN()})),
                    std::invalid_argument);
    CHECK_THROWS_AS(DataMatrix(Matrix(2, 2), {"a", "a"}, {"x", "y"}),
                    std::invalid_argument);
    Matrix asym(2, 2, {1, 2, 3, 4});
    CHECK_THROWS_WITH_AS(CovarianceMatrix(asym, Divisor::NMinusOne),
                         doctest::Contains("not symmetric"), std::invalid_argument);
}

TEST_CASE("matrix multiply and transpose") {
    Matrix a(2, 3, {1, 2, 3, 4, 5, 6});
    Matrix b = a.transposed();
    Matrix p = a * b;
    CHECK(p(0, 0) == 14.0);
    CHECK(p(0, 1) == 32.0);
    CHECK(p(1, 1) == 77.0);
    CHECK(p(1, 0) == p(0, 1));
    CHECK(a.left_columns(2).cols() == 2);
    CHECK(a.column_scaled({2.0, 1.0, 0.0})(0, 0) == 2.0);
}
