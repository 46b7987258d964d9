#pragma once

#include "pcab/matrix.hpp"
#include "pcab/svd.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pcab {

/// alpha-split biplot coordinates: A = U L^alpha, B = V L^(1-alpha),
/// each truncated to the first k components. Row j of `features` holds the
/// coordinates of feature j.
struct BiplotCoordinates {
    double alpha = 0.0;
    Matrix observations; // n x k
    Matrix features;     // m x k
    std::size_t retained_components = 0;
    std::size_t source_rank = 0;
    std::vector<std::string> observation_labels;
    std::vector<std::string> feature_labels;
};

/// Feature-vector geometry of a principal-component (alpha = 0) biplot.
/// Pairs involving a zero-length feature vector are flagged rather than NaN.
struct FeatureGeometry {
    std::vector<double> vector_lengths;     // ||b_j|| / sqrt(n-1)
    Matrix pairwise_cosines;                // m x m, flagged entries are 0
    Matrix pairwise_correlations;           // m x m
    std::vector<std::uint8_t> zero_length_feature; // per-feature flag
    bool has_flagged_pairs() const;
};

/// Min/max of each coordinate layer plus the ratio used to superpose the
/// feature layer on the observation canvas with dual axes.
struct AxisCalibration {
    double observation_min[2], observation_max[2];
    double feature_min[2], feature_max[2];
    double ratio = 1.0; // feature extent / observation extent
    bool degenerate = false;
};

BiplotCoordinates biplot_coordinates(const SvdResult& svd_result, double alpha,
                                     std::size_t k,
                                     std::vector<std::string> observation_labels = {},
                                     std::vector<std::string> feature_labels = {});

FeatureGeometry feature_geometry(const BiplotCoordinates& coords, const DataMatrix& y);

AxisCalibration scale_calibration(const BiplotCoordinates& coords);

} // namespace pcab
