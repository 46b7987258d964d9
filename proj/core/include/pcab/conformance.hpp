#pragma once

#include "pcab/matrix.hpp"
#include "pcab/pca.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcab {

enum class CheckId {
    VarEqualsEigen,
    SingularValueRelation,
    AbsScoreAgreement,
    FeatureLengthEqualsSd,
    CosineEqualsCorrelation,
    ObsCoordsEqualU,
    FeatCoordsEqualDV,
};

struct EquivalenceCheck {
    CheckId id;
    std::string description;
};

const std::vector<EquivalenceCheck>& equivalence_checks();
std::string check_name(CheckId id);

enum class Status { Holds, HoldsWithCaveat, Fails };
std::string status_name(Status s);

struct ConformanceRow {
    std::string profile;
    CheckId check = CheckId::VarEqualsEigen;
    Status status = Status::Holds;
    std::optional<double> discrepancy; // present iff status != Holds
    std::string caveat_note;
};

struct ConformanceReport {
    double tolerance = 1.5e-8;
    std::vector<ConformanceRow> rows;
};

/// Biplot coordinates as a specific implementation style would derive them
/// from a PCA result, rather than from the split-singular-value identity.
struct BiplotEmulation {
    BiplotStyle emulation = BiplotStyle::ReferenceEq9;
    Matrix observations;
    Matrix features;
    std::vector<double> singular_values; // as assumed by the emulated code path
};

/// prcomp-style biplot arithmetic: singular values are taken as
/// sdev * sqrt(n) when pc_biplot_flag is false, or sdev itself when true.
/// Requires a result from the svd-reference family (n-1 divisor, SVD route).
BiplotEmulation emulate_biplot_prcomp(const PcaResult& pca, bool pc_biplot_flag);

/// ggbiplot-style arithmetic: observation coordinates revert to the scores
/// times sqrt(n-1)/sqrt(n); feature coordinates are loadings times sdev.
/// First two components only.
BiplotEmulation emulate_ggbiplot(const PcaResult& pca);

/// Evaluates every (profile, check) pair on centered data; a check Holds
/// iff its mean relative difference is within tolerance. Rows are sorted by
/// profile name, then check id.
ConformanceReport run_conformance(const DataMatrix& y,
                                  const std::vector<ConventionProfile>& profiles,
                                  double tolerance = 1.5e-8);

/// Fixed-width text table; deterministic for identical reports.
std::string render_grid(const ConformanceReport& report);

/// JSON serialization (profile, check, status, discrepancy, note per row).
std::string report_to_json(const ConformanceReport& report);

} // namespace pcab
