#include "pcab/biplot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcab {

namespace {

// diag(l)^e with the rank-deficient convention l = 0 -> 0 for every
// exponent, so A B^T reconstructs rank-deficient input even at alpha = 0.
double split_power(double l, double e) {
    if (l == 0.0) return 0.0;
    if (e == 0.0) return 1.0;
    return std::pow(l, e);
}

} // namespace

bool FeatureGeometry::has_flagged_pairs() const {
    return std::any_of(zero_length_feature.begin(), zero_length_feature.end(),
                       [](std::uint8_t f) { return f != 0; });
}

BiplotCoordinates biplot_coordinates(const SvdResult& svd_result, double alpha,
                                     std::size_t k,
                                     std::vector<std::string> observation_labels,
                                     std::vector<std::string> feature_labels) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("alpha must be in [0,1]");
    const std::size_t m = svd_result.singular_values.size();
    if (k < 1 || k > m) throw std::invalid_argument("component count out of range");

    BiplotCoordinates out;
    out.alpha = alpha;
    out.retained_components = k;
    out.source_rank = m;
    out.observation_labels = std::move(observation_labels);
    out.feature_labels = std::move(feature_labels);

    const std::size_t n = svd_result.u.rows();
    out.observations = Matrix(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.observations(i, j) =
                svd_result.u(i, j) * split_power(svd_result.singular_values[j], alpha);

    out.features = Matrix(m, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.features(i, j) =
                svd_result.v(i, j) * split_power(svd_result.singular_values[j], 1.0 - alpha);
    return out;
}

FeatureGeometry feature_geometry(const BiplotCoordinates& coords, const DataMatrix& y) {
    if (coords.alpha != 0.0)
        throw std::invalid_argument(
            "feature geometry is defined for the alpha = 0 biplot");
    const Matrix& b = coords.features;
    const std::size_t m = b.rows();
    if (y.n_cols() != m)
        throw std::invalid_argument("feature count mismatch between coordinates and data");
    const double n_minus_one = static_cast<double>(y.n_rows() - 1);

    FeatureGeometry g;
    g.vector_lengths.resize(m);
    g.zero_length_feature.assign(m, 0);
    std::vector<double> norms(m);
    for (std::size_t j = 0; j < m; ++j) {
        double acc = 0.0;
        for (std::size_t c = 0; c < b.cols(); ++c) acc += b(j, c) * b(j, c);
        norms[j] = std::sqrt(acc);
        g.vector_lengths[j] = norms[j] / std::sqrt(n_minus_one);
        if (norms[j] == 0.0) g.zero_length_feature[j] = 1;
    }

    g.pairwise_cosines = Matrix(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a; c < m; ++c) {
            double val = 0.0;
            if (a == c) {
                val = g.zero_length_feature[a] ? 0.0 : 1.0;
            } else if (!g.zero_length_feature[a] && !g.zero_length_feature[c]) {
                double dot = 0.0;
                for (std::size_t k = 0; k < b.cols(); ++k) dot += b(a, k) * b(c, k);
                val = std::clamp(dot / (norms[a] * norms[c]), -1.0, 1.0);
            }
            g.pairwise_cosines(a, c) = g.pairwise_cosines(c, a) = val;
        }

    // Pearson correlation straight from the data columns.
    const auto means = column_means(y);
    const Matrix& yv = y.values();
    std::vector<double> col_norm(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < yv.rows(); ++i) {
            const double dev = yv(i, j) - means[j];
            acc += dev * dev;
        }
        col_norm[j] = std::sqrt(acc);
    }
    g.pairwise_correlations = Matrix(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a; c < m; ++c) {
            double val = 0.0;
            if (a == c) {
                val = col_norm[a] > 0.0 ? 1.0 : 0.0;
            } else if (col_norm[a] > 0.0 && col_norm[c] > 0.0) {
                double dot = 0.0;
                for (std::size_t i = 0; i < yv.rows(); ++i)
                    dot += (yv(i, a) - means[a]) * (yv(i, c) - means[c]);
                val = std::clamp(dot / (col_norm[a] * col_norm[c]), -1.0, 1.0);
            }
            g.pairwise_correlations(a, c) = g.pairwise_correlations(c, a) = val;
        }
    return g;
}

AxisCalibration scale_calibration(const BiplotCoordinates& coords) {
    if (coords.retained_components != 2)
        throw std::invalid_argument("axis calibration requires exactly 2 components");
    AxisCalibration cal;
    auto layer_extent = [](const Matrix& layer, double* mins, double* maxs) {
        for (std::size_t axis = 0; axis < 2; ++axis) {
            double lo = layer(0, axis), hi = layer(0, axis);
            for (std::size_t i = 1; i < layer.rows(); ++i) {
                lo = std::min(lo, layer(i, axis));
                hi = std::max(hi, layer(i, axis));
            }
            mins[axis] = lo;
            maxs[axis] = hi;
        }
        double extent = 0.0;
        for (std::size_t axis = 0; axis < 2; ++axis)
            extent = std::max(extent, std::max(std::abs(mins[axis]), std::abs(maxs[axis])));
        return extent;
    };
    double obs_extent = layer_extent(coords.observations, cal.observation_min,
                                     cal.observation_max);
    double feat_extent = layer_extent(coords.features, cal.feature_min, cal.feature_max);
    if (obs_extent == 0.0 || feat_extent == 0.0) {
        cal.degenerate = true;
        if (obs_extent == 0.0) obs_extent = 1.0;
        if (feat_extent == 0.0) feat_extent = 1.0;
    }
    cal.ratio = feat_extent / obs_extent;
    return cal;
}

} // namespace pcab
