#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pcab/biplot.hpp"
#include "pcab/conformance.hpp"
#include "pcab/csv.hpp"
#include "pcab/eigen.hpp"
#include "pcab/pca.hpp"
#include "pcab/results.hpp"
#include "pcab/svg.hpp"

namespace {

pcab::DataMatrix load_input(const pcab::RunConfig& cfg, bool has_row_labels) {
    pcab::DataMatrix x = pcab::read_csv(cfg.input_path, has_row_labels);
    pcab::DataMatrix y = cfg.center ? pcab::center(x) : std::move(x);
    if (!y.is_centered())
        throw std::invalid_argument(
            "input not centered; rerun without --no-center or center the file");
    if (cfg.scale_unit_variance) {
        const auto vars = pcab::column_variances(y, pcab::Divisor::NMinusOne);
        pcab::Matrix scaled = y.values();
        for (std::size_t j = 0; j < scaled.cols(); ++j) {
            if (vars[j] <= 0.0)
                throw std::invalid_argument("cannot scale constant column " +
                                            y.col_labels()[j]);
            const double inv = 1.0 / std::sqrt(vars[j]);
            for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= inv;
        }
        return pcab::DataMatrix(std::move(scaled), y.row_labels(), y.col_labels());
    }
    return y;
}

void add_common(CLI::App* cmd, pcab::RunConfig& cfg, bool& no_row_labels) {
    cmd->add_option("--input", cfg.input_path, "input CSV file")->required();
    cmd->add_flag("!--no-center", cfg.center, "input is already centered");
    cmd->add_flag("--scale", cfg.scale_unit_variance,
                  "scale centered columns to unit variance");
    cmd->add_flag("--no-row-labels", no_row_labels,
                  "first CSV column is data, not labels");
    cmd->add_option("--output-dir", cfg.output_dir, "directory for result files");
}

int run_pca(const pcab::RunConfig& cfg, bool has_row_labels) {
    const pcab::DataMatrix y = load_input(cfg, has_row_labels);
    const auto& profile = pcab::find_profile(cfg.profile_name);
    const pcab::PcaResult result = pcab::analyze(y, profile);
    pcab::write_results(result, std::nullopt, cfg);
    if (cfg.output_format == pcab::OutputFormat::Json) {
        std::cout << pcab::summary_json(result, cfg);
    } else {
        std::cout << "eigenvalues:";
        for (double l : result.eigenvalues) std::cout << ' ' << pcab::format_double(l);
        std::cout << "\nsdev:";
        for (double s : result.sdev) std::cout << ' ' << pcab::format_double(s);
        std::cout << "\nsingular values:";
        for (double s : result.singular_values)
            std::cout << ' ' << pcab::format_double(s);
        std::cout << '\n';
    }
    return 0;
}

int run_biplot(const pcab::RunConfig& cfg, bool has_row_labels) {
    const pcab::DataMatrix y = load_input(cfg, has_row_labels);
    const pcab::SvdResult s = pcab::svd(y);
    const auto coords = pcab::biplot_coordinates(s, cfg.alpha, cfg.components,
                                                 y.row_labels(), y.col_labels());

    const auto& profile = pcab::find_profile(cfg.profile_name);
    const pcab::PcaResult result = pcab::analyze(y, profile);
    pcab::write_results(result, coords, cfg);

    if (cfg.svg_path) {
        pcab::FeatureGeometry geometry;
        if (cfg.alpha == 0.0) {
            geometry = pcab::feature_geometry(coords, y);
        } else {
            // Raw row geometry of the feature layer; the sd/correlation
            // readings only apply at alpha = 0.
            geometry.vector_lengths.assign(coords.features.rows(), 0.0);
            geometry.zero_length_feature.assign(coords.features.rows(), 0);
            geometry.pairwise_cosines =
                pcab::Matrix(coords.features.rows(), coords.features.rows());
            geometry.pairwise_correlations = geometry.pairwise_cosines;
        }
        pcab::render_svg(coords, geometry, *cfg.svg_path);
    }
    std::cout << "biplot alpha=" << pcab::format_double(cfg.alpha) << ", "
              << coords.retained_components << " of " << coords.source_rank
              << " components retained\n";
    return 0;
}

int run_check(const pcab::RunConfig& cfg, bool has_row_labels) {
    const pcab::DataMatrix y = load_input(cfg, has_row_labels);
    const double n_minus_one = static_cast<double>(y.n_rows() - 1);
    bool all_ok = true;
    auto verdict = [&](const std::string& name, double disc, double tol) {
        const bool ok = disc <= tol;
        all_ok = all_ok && ok;
        std::printf("%-42s %s  (mrd %.3e, tol %.0e)\n", name.c_str(),
                    ok ? "PASS" : "FAIL", disc, tol);
    };

    const auto& eigen_profile = pcab::find_profile("eigen-n");
    const auto& svd_profile = pcab::find_profile("svd-reference");
    pcab::ConventionProfile ref = svd_profile;

    const pcab::PcaResult rs = pcab::pca_svd(y, ref);
    pcab::ConventionProfile en = eigen_profile;
    en.divisor = pcab::Divisor::NMinusOne;
    en.name = "eigen-nminus1";
    const pcab::PcaResult re = pcab::pca_eigen(y, en);

    // Var(z_j) = lambda_j under the n-1 divisor.
    std::vector<double> vars(rs.scores.cols());
    for (std::size_t j = 0; j < vars.size(); ++j) {
        const auto col = rs.scores.column(j);
        double mean = 0.0;
        for (double v : col) mean += v;
        mean /= static_cast<double>(col.size());
        double acc = 0.0;
        for (double v : col) acc += (v - mean) * (v - mean);
        vars[j] = acc / n_minus_one;
    }
    verdict("Var(score) = eigenvalue",
            pcab::mean_relative_difference(rs.eigenvalues, vars), 1e-9);

    // ell = sqrt((n-1) lambda).
    std::vector<double> implied(re.eigenvalues.size());
    for (std::size_t k = 0; k < implied.size(); ++k)
        implied[k] = std::sqrt(n_minus_one * std::max(re.eigenvalues[k], 0.0));
    verdict("singular value = sqrt((n-1) eigenvalue)",
            pcab::mean_relative_difference(rs.singular_values, implied), 1e-8);

    verdict("|scores| agree across routes",
            pcab::mean_relative_difference(pcab::abs(re.scores), pcab::abs(rs.scores)),
            1e-8);

    const pcab::SvdResult s = pcab::svd(y);
    for (double alpha : {0.0, 0.5, 1.0}) {
        const auto coords = pcab::biplot_coordinates(s, alpha, s.v.cols());
        const pcab::Matrix recon =
            coords.observations * coords.features.transposed();
        const double denom = y.values().frobenius_norm();
        const double disc =
            pcab::subtract(recon, y.values()).frobenius_norm() / denom;
        char name[64];
        std::snprintf(name, sizeof(name), "A B^T = Y at alpha = %.1f", alpha);
        verdict(name, disc, 1e-8);
    }

    const auto coords0 = pcab::biplot_coordinates(s, 0.0, s.v.cols());
    const auto g = pcab::feature_geometry(coords0, y);
    std::vector<double> sds;
    for (double v : pcab::column_variances(y, pcab::Divisor::NMinusOne))
        sds.push_back(std::sqrt(v));
    verdict("feature length = feature sd",
            pcab::mean_relative_difference(sds, g.vector_lengths), 1e-9);
    verdict("cosine = correlation",
            pcab::mean_relative_difference(g.pairwise_correlations, g.pairwise_cosines),
            1e-9);

    return all_ok ? 0 : 2;
}

int run_conformance_cmd(const pcab::RunConfig& cfg, bool has_row_labels,
                        bool as_json) {
    const pcab::DataMatrix y = load_input(cfg, has_row_labels);
    const auto report =
        pcab::run_conformance(y, pcab::profile_registry(), cfg.tolerance);
    std::cout << (as_json ? pcab::report_to_json(report) : pcab::render_grid(report));
    return 0;
}

int run_profiles() {
    for (const auto& p : pcab::profile_registry())
        std::printf("%-16s %s\n", p.name.c_str(), p.description.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"principal component analysis and biplot toolkit"};
    app.require_subcommand(1);

    pcab::RunConfig cfg;
    bool no_row_labels = false;
    std::string format = "csv";
    std::string svg_path;
    bool conf_json = false;

    auto* pca_cmd = app.add_subcommand("pca", "run a PCA under a convention profile");
    add_common(pca_cmd, cfg, no_row_labels);
    pca_cmd->add_option("--profile", cfg.profile_name, "convention profile name");
    pca_cmd->add_option("--format", format, "stdout format: csv or json");

    auto* biplot_cmd = app.add_subcommand("biplot", "compute alpha-split biplot coordinates");
    add_common(biplot_cmd, cfg, no_row_labels);
    biplot_cmd->add_option("--profile", cfg.profile_name, "convention profile name");
    biplot_cmd->add_option("--alpha", cfg.alpha, "split exponent in [0,1]");
    biplot_cmd->add_option("--components", cfg.components, "components to retain");
    biplot_cmd->add_option("--svg", svg_path, "write an SVG biplot to this path");

    auto* check_cmd = app.add_subcommand("check", "verify the core identities on a dataset");
    add_common(check_cmd, cfg, no_row_labels);

    auto* conf_cmd = app.add_subcommand("conformance", "conformance grid over all profiles");
    add_common(conf_cmd, cfg, no_row_labels);
    conf_cmd->add_option("--tolerance", cfg.tolerance, "equivalence tolerance");
    conf_cmd->add_flag("--json", conf_json, "emit the report as JSON");

    auto* profiles_cmd = app.add_subcommand("profiles", "list the convention profiles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (!svg_path.empty()) cfg.svg_path = svg_path;
    if (format == "json") cfg.output_format = pcab::OutputFormat::Json;

    try {
        if (pca_cmd->parsed()) return run_pca(cfg, !no_row_labels);
        if (biplot_cmd->parsed()) return run_biplot(cfg, !no_row_labels);
        if (check_cmd->parsed()) return run_check(cfg, !no_row_labels);
        if (conf_cmd->parsed()) return run_conformance_cmd(cfg, !no_row_labels, conf_json);
        if (profiles_cmd->parsed()) return run_profiles();
    } catch (const pcab::numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
