#pragma once

// Runs every acceptance check against the library and collects the tables
// behind them: mode comparison, Pekeris error and oracle convergence.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dunkl/oracle.hpp"

namespace dunkl {

struct ValidationConfig {
    MolecularParams params{};
    CentrifugalConvention convention = CentrifugalConvention::RadialEquation;
    NuOptions nu{};
    OracleGrid oracle_grid{};
    bool weighted = true;
    std::uint64_t seed = 1234567;
    std::vector<int> only;  ///< criterion ids to run; empty runs all

    /// Defaults with the oracle grid derived from `p`.
    static ValidationConfig standard(const MolecularParams& p);
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PekerisErrorRow {
    int n = 0;
    int ell = 0;
    double mu = 0.0;
    double exact = 0.0;
    double pekeris = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
};

struct ConvergenceRow {
    int n = 0;
    int ell = 0;
    double mu = 0.0;
    OracleVariant variant = OracleVariant::ExactCentrifugal;
    double h = 0.0;
    double e_h = 0.0;
    double e_h2 = 0.0;
    double e_h4 = 0.0;
    double richardson = 0.0;
    double order = 0.0;
    double r_min_shift = 0.0;  ///< change of the Richardson value when r_min is doubled
    std::string status;        ///< "ok" or the solver error
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    DiscrepancyReport comparison;
    std::vector<PekerisErrorRow> pekeris_errors;
    std::vector<ConvergenceRow> convergence;

    bool passed() const;
};

/// Grid shared by the mode comparison: n, l in {0,1,2}, mu in {0, 0.5, 1}.
inline constexpr int kComparisonMaxLevel = 2;
std::vector<double> comparison_mu_values();
/// mu in {0, 0.25, ..., 3}.
std::vector<double> trend_mu_values();

ValidationReport run_validation(const ValidationConfig& config);

std::string format_report(const ValidationReport& report);

/// comparison.csv, energies.csv, pekeris_error.csv, convergence.csv and
/// report.txt under `dir` (created if missing).
void write_validation(const ValidationReport& report, const std::filesystem::path& dir);

}  // namespace dunkl
