#include "pcab/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcab {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r'))
            cell.pop_back();
        std::size_t start = 0;
        while (start < cell.size() && cell[start] == ' ') ++start;
        cells.push_back(cell.substr(start));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw std::invalid_argument("non-numeric cell \"" + cell + "\" at row " +
                                    std::to_string(row) + ", column " +
                                    std::to_string(col));
    return value;
}

} // namespace

DataMatrix parse_csv(const std::string& text, bool has_row_labels) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_line(line));
    }
    if (rows.size() < 2) throw std::invalid_argument("no observations");

    std::vector<std::string> col_labels = rows[0];
    if (has_row_labels) {
        if (col_labels.empty()) throw std::invalid_argument("empty header row");
        col_labels.erase(col_labels.begin());
    }
    const std::size_t m = col_labels.size();
    if (m == 0) throw std::invalid_argument("no feature columns");

    const std::size_t n = rows.size() - 1;
    Matrix values(n, m);
    std::vector<std::string> row_labels;
    row_labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& cells = rows[i + 1];
        const std::size_t expected = m + (has_row_labels ? 1 : 0);
        if (cells.size() != expected)
            throw std::invalid_argument(
                "ragged row " + std::to_string(i + 2) + ": expected " +
                std::to_string(expected) + " cells, found " +
                std::to_string(cells.size()));
        const std::size_t offset = has_row_labels ? 1 : 0;
        if (has_row_labels) row_labels.push_back(cells[0]);
        for (std::size_t j = 0; j < m; ++j)
            values(i, j) = parse_cell(cells[j + offset], i + 2, j + offset + 1);
    }
    if (!has_row_labels)
        for (std::size_t i = 0; i < n; ++i)
            row_labels.push_back("obs" + std::to_string(i + 1));
    return DataMatrix(std::move(values), std::move(row_labels), std::move(col_labels));
}

DataMatrix read_csv(const std::string& path, bool has_row_labels) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_csv(buf.str(), has_row_labels);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels) {
    if (row_labels.size() != m.rows() || col_labels.size() != m.cols())
        throw std::invalid_argument("label count mismatch");
    std::ostringstream os;
    for (const auto& c : col_labels) os << ',' << c;
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << row_labels[i];
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << ',' << format_double(m(i, j));
        os << '\n';
    }
    return os.str();
}

} // namespace pcab
