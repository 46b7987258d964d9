#pragma once

#include "pcab/matrix.hpp"
#include "pcab/svd.hpp"

#include <string>
#include <vector>

namespace pcab {

enum class Route { Eigen, Svd };
enum class SdevDefinition { SqrtEigen, SingularOverSqrtNMinusOne, SingularOverSqrtN, ScoreSd };
enum class LoadingScaling { Unit, TimesSqrtEigen };
enum class ScoreScaling { Plain, OverSqrtEigen };
enum class SignPolicy { Canonical, AsComputed };

/// How an implementation derives biplot coordinates from its PCA output.
/// Drives the biplot columns of the conformance grid.
enum class BiplotStyle {
    ReferenceEq9,    // split-singular-value coordinates, the ground truth
    PrcompBiplot,    // rescale scores/loadings by sdev-derived singular values
    GgbiplotBiplot,  // scores shrunk by sqrt(n-1)/sqrt(n), loadings times sdev
    ScoresLoadings,  // overlay raw scores and raw loadings
    GsvdCoord,       // scores as-is, loadings times its own singular values
};

/// A named bundle of arithmetic conventions characterizing one PCA
/// implementation: covariance divisor, route, and output scalings.
struct ConventionProfile {
    std::string name;
    std::string description;
    Divisor divisor = Divisor::NMinusOne;
    Route route = Route::Svd;
    SdevDefinition sdev_definition = SdevDefinition::SingularOverSqrtNMinusOne;
    LoadingScaling loading_scaling = LoadingScaling::Unit;
    ScoreScaling score_scaling = ScoreScaling::Plain;
    SignPolicy sign_policy = SignPolicy::Canonical;
    BiplotStyle biplot_style = BiplotStyle::ReferenceEq9;
};

/// Built-in presets mirroring the implementations under comparison.
const std::vector<ConventionProfile>& profile_registry();
const ConventionProfile& find_profile(const std::string& name);

struct PcaResult {
    Matrix scores;                  // n x m
    Matrix loadings;                // m x m
    std::vector<double> sdev;
    std::vector<double> eigenvalues; // from the profile-divisor covariance
    std::vector<double> explained_variance_ratio;
    std::vector<double> singular_values; // of the centered input
    ConventionProfile profile;
    std::size_t n_obs = 0;
};

PcaResult pca_eigen(const DataMatrix& y, const ConventionProfile& profile);
PcaResult pca_svd(const DataMatrix& y, const ConventionProfile& profile);
/// Dispatches on profile.route.
PcaResult analyze(const DataMatrix& y, const ConventionProfile& profile);

/// lambda_k / sum(lambda); divisor-invariant.
std::vector<double> explained_variance(const PcaResult& result);

/// Sum of the first k score/loading outer products. Requires Plain scores
/// and Unit loadings; reproduces the input at k = m.
Matrix reconstruct_rank_k(const PcaResult& result, std::size_t k);

} // namespace pcab
