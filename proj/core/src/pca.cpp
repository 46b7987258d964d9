#include "pcab/pca.hpp"

#include "pcab/eigen.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pcab {

const std::vector<ConventionProfile>& profile_registry() {
    static const std::vector<ConventionProfile> registry = {
        {"svd-reference",
         "SVD route, n-1 divisor; sdev = singular values / sqrt(n-1); "
         "biplot rescales scores by sdev-derived singular values",
         Divisor::NMinusOne, Route::Svd, SdevDefinition::SingularOverSqrtNMinusOne,
         LoadingScaling::Unit, ScoreScaling::Plain, SignPolicy::Canonical,
         BiplotStyle::PrcompBiplot},
        {"svd-ggbiplot",
         "SVD route, n-1 divisor; biplot shrinks scores by sqrt(n-1)/sqrt(n) "
         "and scales loadings by sdev instead of singular values",
         Divisor::NMinusOne, Route::Svd, SdevDefinition::SingularOverSqrtNMinusOne,
         LoadingScaling::Unit, ScoreScaling::Plain, SignPolicy::Canonical,
         BiplotStyle::GgbiplotBiplot},
        {"eigen-n",
         "eigendecomposition of the divisor-n covariance; sdev = sqrt(eigenvalue); "
         "biplot overlays raw scores and loadings",
         Divisor::N, Route::Eigen, SdevDefinition::SqrtEigen,
         LoadingScaling::Unit, ScoreScaling::Plain, SignPolicy::Canonical,
         BiplotStyle::ScoresLoadings},
        {"eigen-gram",
         "eigendecomposition of Y^T Y (divisor 1); reports sqrt(eigenvalues), "
         "sdev taken directly as the score standard deviations",
         Divisor::One, Route::Eigen, SdevDefinition::ScoreSd,
         LoadingScaling::Unit, ScoreScaling::Plain, SignPolicy::Canonical,
         BiplotStyle::ScoresLoadings},
        {"eigen-rescaled",
         "eigendecomposition of the n-1 covariance with loadings times "
         "sqrt(eigenvalue) and scores divided by sqrt(eigenvalue)",
         Divisor::NMinusOne, Route::Eigen, SdevDefinition::SqrtEigen,
         LoadingScaling::TimesSqrtEigen, ScoreScaling::OverSqrtEigen,
         SignPolicy::Canonical, BiplotStyle::ScoresLoadings},
        {"gsvd-n",
         "generalised-SVD flavor: n divisor, sdev = singular values / sqrt(n); "
         "feature coordinates scaled by its own singular values",
         Divisor::N, Route::Svd, SdevDefinition::SingularOverSqrtN,
         LoadingScaling::Unit, ScoreScaling::Plain, SignPolicy::Canonical,
         BiplotStyle::GsvdCoord},
    };
    return registry;
}

const ConventionProfile& find_profile(const std::string& name) {
    for (const auto& p : profile_registry())
        if (p.name == name) return p;
    std::string msg = "unknown profile \"" + name + "\"; available:";
    for (const auto& p : profile_registry()) msg += " " + p.name;
    throw std::invalid_argument(msg);
}

namespace {

std::vector<double> sample_sd(const Matrix& scores) {
    const std::size_t n = scores.rows(), m = scores.cols();
    std::vector<double> sd(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += scores(i, j);
        mean /= static_cast<double>(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = scores(i, j) - mean;
            acc += dev * dev;
        }
        sd[j] = std::sqrt(acc / static_cast<double>(n - 1));
    }
    return sd;
}

PcaResult assemble(Matrix plain_scores, Matrix unit_loadings,
                   std::vector<double> eigenvalues, std::vector<double> singular_values,
                   const DataMatrix& y, const ConventionProfile& profile) {
    const std::size_t n = y.n_rows();
    PcaResult r;
    r.profile = profile;
    r.n_obs = n;
    r.eigenvalues = std::move(eigenvalues);
    r.singular_values = std::move(singular_values);

    const double total =
        std::accumulate(r.eigenvalues.begin(), r.eigenvalues.end(), 0.0);
    if (total <= 0.0) throw std::invalid_argument("no variance");
    r.explained_variance_ratio.resize(r.eigenvalues.size());
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
        r.explained_variance_ratio[k] = r.eigenvalues[k] / total;

    r.scores = std::move(plain_scores);
    if (profile.score_scaling == ScoreScaling::OverSqrtEigen) {
        std::vector<double> inv(r.eigenvalues.size(), 1.0);
        for (std::size_t k = 0; k < inv.size(); ++k)
            if (r.eigenvalues[k] > 0.0) inv[k] = 1.0 / std::sqrt(r.eigenvalues[k]);
        r.scores = r.scores.column_scaled(inv);
    }

    r.loadings = std::move(unit_loadings);
    if (profile.loading_scaling == LoadingScaling::TimesSqrtEigen) {
        std::vector<double> f(r.eigenvalues.size());
        for (std::size_t k = 0; k < f.size(); ++k)
            f[k] = std::sqrt(std::max(r.eigenvalues[k], 0.0));
        r.loadings = r.loadings.column_scaled(f);
    }

    switch (profile.sdev_definition) {
    case SdevDefinition::SqrtEigen:
        r.sdev.resize(r.eigenvalues.size());
        for (std::size_t k = 0; k < r.sdev.size(); ++k)
            r.sdev[k] = std::sqrt(std::max(r.eigenvalues[k], 0.0));
        break;
    case SdevDefinition::SingularOverSqrtNMinusOne:
        r.sdev.resize(r.singular_values.size());
        for (std::size_t k = 0; k < r.sdev.size(); ++k)
            r.sdev[k] = r.singular_values[k] / std::sqrt(static_cast<double>(n - 1));
        break;
    case SdevDefinition::SingularOverSqrtN:
        r.sdev.resize(r.singular_values.size());
        for (std::size_t k = 0; k < r.sdev.size(); ++k)
            r.sdev[k] = r.singular_values[k] / std::sqrt(static_cast<double>(n));
        break;
    case SdevDefinition::ScoreSd:
        r.sdev = sample_sd(r.scores);
        break;
    }
    return r;
}

} // namespace

PcaResult pca_eigen(const DataMatrix& y, const ConventionProfile& profile) {
    if (profile.route != Route::Eigen)
        throw std::invalid_argument("profile route is not Eigen");
    const CovarianceMatrix cov = covariance(y, profile.divisor);
    const SpectralResult spec = eigen_symmetric(cov);

    // ell^2 = lambda * divisor for whichever divisor produced lambda.
    const double d = divisor_value(profile.divisor, y.n_rows());
    std::vector<double> sv(spec.eigenvalues.size());
    for (std::size_t k = 0; k < sv.size(); ++k)
        sv[k] = std::sqrt(std::max(spec.eigenvalues[k], 0.0) * d);

    Matrix scores = y.values() * spec.eigenvectors;
    return assemble(std::move(scores), spec.eigenvectors, spec.eigenvalues,
                    std::move(sv), y, profile);
}

PcaResult pca_svd(const DataMatrix& y, const ConventionProfile& profile) {
    if (profile.route != Route::Svd)
        throw std::invalid_argument("profile route is not Svd");
    if (!y.is_centered()) throw std::invalid_argument("input not centered");
    const SvdResult s = svd(y);

    const double d = divisor_value(profile.divisor, y.n_rows());
    std::vector<double> eigenvalues(s.singular_values.size());
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
        eigenvalues[k] = s.singular_values[k] * s.singular_values[k] / d;

    Matrix scores = s.u.column_scaled(s.singular_values);
    return assemble(std::move(scores), s.v, std::move(eigenvalues),
                    s.singular_values, y, profile);
}

PcaResult analyze(const DataMatrix& y, const ConventionProfile& profile) {
    return profile.route == Route::Eigen ? pca_eigen(y, profile) : pca_svd(y, profile);
}

std::vector<double> explained_variance(const PcaResult& result) {
    const double total =
        std::accumulate(result.eigenvalues.begin(), result.eigenvalues.end(), 0.0);
    if (total <= 0.0) throw std::invalid_argument("no variance");
    std::vector<double> ratio(result.eigenvalues.size());
    for (std::size_t k = 0; k < ratio.size(); ++k)
        ratio[k] = result.eigenvalues[k] / total;
    return ratio;
}

Matrix reconstruct_rank_k(const PcaResult& result, std::size_t k) {
    if (result.profile.score_scaling != ScoreScaling::Plain ||
        result.profile.loading_scaling != LoadingScaling::Unit)
        throw std::invalid_argument(
            "reconstruction requires plain scores and unit loadings");
    const std::size_t m = result.loadings.cols();
    if (k < 1 || k > m) throw std::invalid_argument("rank k out of range");
    return result.scores.left_columns(k) * result.loadings.left_columns(k).transposed();
}

} // namespace pcab
