#pragma once

#include <vector>

#include "dunkl/nu_engine.hpp"
#include "dunkl/oracle.hpp"

namespace dunkl {

struct SpectrumRow {
    int n = 0;
    int ell = 0;
    double mu = 0.0;
    SpectrumMode mode = SpectrumMode::PaperVerbatim;
    double eps = 0.0;
    double energy = 0.0;
    StateFlag flag = StateFlag::Bound;
};

/// Rows sorted by (ell, n, mu, mode).
using SpectrumTable = std::vector<SpectrumRow>;

struct SpectrumOptions {
    NuOptions nu{};
    OracleVariant oracle_variant = OracleVariant::ExactCentrifugal;
    OracleGrid oracle_grid{};
};

/// All (n <= n_max, l <= ell_max) levels in one mode at d.mu. d.ell is ignored.
SpectrumTable spectrum(const MolecularParams& p, const DunklParams& d, int n_max, int ell_max, SpectrumMode mode,
                       const SpectrumOptions& options = {});

/// Same, over several Dunkl parameters and modes.
SpectrumTable spectrum(const MolecularParams& p, const DunklParams& d, int n_max, int ell_max,
                       const std::vector<double>& mu_values, const std::vector<SpectrumMode>& modes,
                       const SpectrumOptions& options = {});

}  // namespace dunkl
