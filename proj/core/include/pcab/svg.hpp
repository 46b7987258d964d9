#pragma once

#include "pcab/biplot.hpp"

#include <string>

namespace pcab {

/// 800 x 800 viewport with a 10% margin. Observation points use the
/// bottom/left axis scale; feature arrows are superposed with the
/// scale_calibration ratio and read off the grey top/right scale.
std::string render_svg_string(const BiplotCoordinates& coords,
                              const FeatureGeometry& geometry);

void render_svg(const BiplotCoordinates& coords, const FeatureGeometry& geometry,
                const std::string& path);

} // namespace pcab
