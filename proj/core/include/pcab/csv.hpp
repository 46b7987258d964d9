#pragma once

#include "pcab/matrix.hpp"

#include <string>

namespace pcab {

/// First row is the column-header line; when has_row_labels is set the first
/// column holds observation labels. Every cell must parse as a finite real.
DataMatrix read_csv(const std::string& path, bool has_row_labels = true);
DataMatrix parse_csv(const std::string& text, bool has_row_labels = true);

/// Header row plus one labeled row per matrix row, 15 significant digits.
std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels);

std::string format_double(double v);

} // namespace pcab
