#pragma once

#include "pcab/biplot.hpp"
#include "pcab/pca.hpp"

#include <optional>
#include <string>

namespace pcab {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::string input_path;
    std::string profile_name = "svd-reference";
    double alpha = 0.0;
    std::size_t components = 2;
    bool center = true;
    bool scale_unit_variance = false;
    OutputFormat output_format = OutputFormat::Csv;
    std::optional<std::string> svg_path;
    double tolerance = 1.5e-8;
    std::string output_dir = ".";
};

/// Writes scores.csv, loadings.csv, and summary.json into config.output_dir.
/// Numbers carry 15 significant digits so a write/read round trip is lossless
/// to within 1e-12.
void write_results(const PcaResult& result, const std::optional<BiplotCoordinates>& coords,
                   const RunConfig& config);

std::string summary_json(const PcaResult& result, const RunConfig& config);

} // namespace pcab
