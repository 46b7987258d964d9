#include "pcab/results.hpp"

#include "pcab/csv.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace pcab {

namespace {

std::vector<std::string> component_labels(std::size_t k) {
    std::vector<std::string> labels(k);
    for (std::size_t j = 0; j < k; ++j) labels[j] = "PC" + std::to_string(j + 1);
    return labels;
}

std::vector<std::string> indexed_labels(const std::string& stem, std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = stem + std::to_string(i + 1);
    return labels;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

// Round-trips exactly at 15 significant digits without dragging printf
// formatting differences into the JSON output.
nlohmann::ordered_json json_number(double v) {
    return nlohmann::ordered_json::parse(format_double(v));
}

nlohmann::ordered_json json_vector(const std::vector<double>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (double x : v) arr.push_back(json_number(x));
    return arr;
}

} // namespace

std::string summary_json(const PcaResult& result, const RunConfig& config) {
    nlohmann::ordered_json j;
    j["profile"] = {
        {"name", result.profile.name},
        {"description", result.profile.description},
        {"divisor", divisor_name(result.profile.divisor)},
        {"route", result.profile.route == Route::Eigen ? "eigen" : "svd"},
    };
    j["n_observations"] = result.n_obs;
    j["n_features"] = result.loadings.rows();
    j["eigenvalues"] = json_vector(result.eigenvalues);
    j["sdev"] = json_vector(result.sdev);
    j["singular_values"] = json_vector(result.singular_values);
    j["explained_variance_ratio"] = json_vector(result.explained_variance_ratio);
    j["config"] = {
        {"input_path", config.input_path},
        {"alpha", json_number(config.alpha)},
        {"components", config.components},
        {"center", config.center},
        {"scale_unit_variance", config.scale_unit_variance},
        {"tolerance", json_number(config.tolerance)},
    };
    return j.dump(2) + "\n";
}

void write_results(const PcaResult& result, const std::optional<BiplotCoordinates>& coords,
                   const RunConfig& config) {
    const std::string dir = config.output_dir.empty() ? "." : config.output_dir;
    const auto pcs = component_labels(result.scores.cols());

    write_file(dir + "/scores.csv",
               matrix_to_csv(result.scores, indexed_labels("obs", result.scores.rows()),
                             pcs));
    write_file(dir + "/loadings.csv",
               matrix_to_csv(result.loadings,
                             indexed_labels("feat", result.loadings.rows()), pcs));
    write_file(dir + "/summary.json", summary_json(result, config));

    if (coords) {
        const auto k = component_labels(coords->retained_components);
        auto labels_or = [](const std::vector<std::string>& given,
                            const std::string& stem, std::size_t n) {
            return given.size() == n ? given : indexed_labels(stem, n);
        };
        write_file(dir + "/biplot_observations.csv",
                   matrix_to_csv(coords->observations,
                                 labels_or(coords->observation_labels, "obs",
                                           coords->observations.rows()),
                                 k));
        write_file(dir + "/biplot_features.csv",
                   matrix_to_csv(coords->features,
                                 labels_or(coords->feature_labels, "feat",
                                           coords->features.rows()),
                                 k));
    }
}

} // namespace pcab
