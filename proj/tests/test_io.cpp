#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pcab/csv.hpp"
#include "pcab/results.hpp"
#include "pcab/svg.hpp"

using namespace pcab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "pcab_io_test";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("csv fixture parses with labels") {
    const auto x = read_csv(std::string(PCAB_DATA_DIR) + "/t2.csv");
    CHECK(x.n_rows() == 6);
    CHECK(x.n_cols() == 2);
    CHECK(x.row_labels()[0] == "A");
    CHECK(x.row_labels()[5] == "F");
    CHECK(x.col_labels()[0] == "feat1");
    CHECK(x.values()(4, 1) == 2.8);
}

TEST_CASE("csv parse errors name the problem") {
    CHECK_THROWS_WITH_AS(parse_csv(",feat1\n"), doctest::Contains("no observations"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_csv(",f1,f2\na,1,NaN\nb,2,3\n"),
                         doctest::Contains("row 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_csv(",f1,f2\na,1\nb,2,3\n"),
                         doctest::Contains("ragged"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv(",f1,f2\na,1,2\na,2,3\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_csv("/nonexistent/file.csv"), std::invalid_argument);
}

TEST_CASE("csv without row labels") {
    const auto x = parse_csv("f1,f2\n1,2\n3,4\n", false);
    CHECK(x.n_rows() == 2);
    CHECK(x.row_labels()[0] == "obs1");
    CHECK(x.values()(1, 0) == 3.0);
}

TEST_CASE("matrix csv round trip within 1e-12") {
    const auto y = center(fixtures::t5());
    const std::string csv = matrix_to_csv(y.values(), y.row_labels(), y.col_labels());
    const auto back = parse_csv(csv);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(back.values()(i, j) - y.values()(i, j)) < 1e-12);
}

TEST_CASE("write_results produces the three files") {
    const auto dir = temp_dir();
    RunConfig cfg;
    cfg.input_path = "t2.csv";
    cfg.output_dir = dir.string();
    const auto y = center(fixtures::t2());
    const auto result = analyze(y, find_profile("svd-reference"));
    write_results(result, std::nullopt, cfg);

    const auto scores = parse_csv(read_file((dir / "scores.csv").string()));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(scores.values()(i, j) - result.scores(i, j)) < 1e-12);

    const std::string summary = read_file((dir / "summary.json").string());
    CHECK(summary.find("21.28401") != std::string::npos);
    CHECK(summary.find("0.8093210") != std::string::npos);
    CHECK(summary.find("svd-reference") != std::string::npos);
    // Deterministic on rerun.
    write_results(result, std::nullopt, cfg);
    CHECK(read_file((dir / "summary.json").string()) == summary);
}

TEST_CASE("svg output") {
    const auto y = center(fixtures::t5());
    const auto coords = biplot_coordinates(svd(y), 0.0, 2, y.row_labels(), y.col_labels());
    const auto g = feature_geometry(coords, y);
    const std::string svg = render_svg_string(coords, g);

    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t points = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++points;
        pos += 7;
    }
    CHECK(points == 6);
    std::size_t arrows = 0;
    pos = 0;
    while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
        ++arrows;
        pos += 8;
    }
    CHECK(arrows == 4);
    CHECK(svg.find("feat4") != std::string::npos);
    CHECK(svg.find("#888888") != std::string::npos); // grey feature axis labels
    CHECK(svg == render_svg_string(coords, g));
}

TEST_CASE("svg requires exactly two components") {
    const auto y = center(fixtures::t5());
    const auto coords = biplot_coordinates(svd(y), 0.0, 3);
    FeatureGeometry g;
    g.vector_lengths.assign(4, 0.0);
    CHECK_THROWS_WITH_AS(render_svg_string(coords, g),
                         doctest::Contains("requires exactly 2 components"),
                         std::invalid_argument);
}
