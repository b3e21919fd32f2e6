#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dunkl/oracle.hpp"
#include "dunkl/spectrum.hpp"

namespace dunkl::cli {

enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kConfigError = 2, kIoError = 3 };

/// Everything a subcommand needs, after flags, config file and defaults are merged.
struct RunConfig {
    MolecularParams params{};
    DunklParams dunkl{};
    int n = 0;
    int n_max = 2;
    int ell_max = 0;
    std::vector<SpectrumMode> modes{SpectrumMode::PaperVerbatim};
    NuOptions nu{};
    OracleVariant oracle_variant = OracleVariant::ExactCentrifugal;
    OracleGrid oracle_grid{};
    bool weighted = true;

    // potential
    double r_min = 0.0;   ///< 0 selects 0.05 r_e
    double r_max = 0.0;   ///< 0 selects 5 r_e (potential) or an automatic cutoff (wavefunction)
    int points = 0;       ///< 0 selects 496 (potential) or 4001 (wavefunction)
    double morse_range = 0.0;  ///< 0 selects the curvature-matched 1/r_e

    // sweep-mu and wavefunction
    double mu_min = 0.0;
    double mu_max = 3.0;
    double mu_step = 0.25;
    std::vector<double> mus{0.0, 1.5, 3.0};

    std::vector<int> criteria;
    std::filesystem::path out;

    /// Throws DomainError when a value violates a module invariant.
    void validate() const;
};

/// Parses argv and runs one subcommand; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace dunkl::cli
