#include "dunkl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace dunkl {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append_levels(SpectrumTable& out, const MolecularParams& p, const DunklParams& d, int n_max,
                   SpectrumMode mode, const SpectrumOptions& options) {
    switch (mode) {
        case SpectrumMode::PaperVerbatim:
            for (int n = 0; n <= n_max; ++n) {
                const ClosedFormResult r = energy_closed_form(n, p, d, options.nu.pekeris);
                out.push_back({n, d.ell, d.mu, mode, r.eps, r.energy, r.flag});
            }
            break;
        case SpectrumMode::SelfConsistent:
            for (int n = 0; n <= n_max; ++n) {
                try {
                    const SelfConsistentResult r = energy_self_consistent(n, p, d, options.nu);
                    out.push_back({n, d.ell, d.mu, mode, r.eps, r.energy, r.flag});
                } catch (const NoBoundState&) {
                    out.push_back({n, d.ell, d.mu, mode, kNaN, kNaN, StateFlag::NoRoot});
                } catch (const DomainError&) {
                    out.push_back({n, d.ell, d.mu, mode, kNaN, kNaN, StateFlag::ComplexExponent});
                }
            }
            break;
        case SpectrumMode::Oracle: {
            const OracleProblem prob{p, d, options.oracle_variant, options.oracle_grid, options.nu.pekeris,
                                     OraclePotential::DengFan};
            try {
                const OracleResult r = fd_eigensolve(prob, n_max + 1);
                for (int n = 0; n <= n_max; ++n) {
                    const double e = r.eigenvalues[n];
                    out.push_back({n, d.ell, d.mu, mode, energy_to_eps(e, p), e,
                                   in_bound_window(e, p) ? StateFlag::Bound : StateFlag::Unbound});
                }
            } catch (const AccuracyError&) {
                for (int n = 0; n <= n_max; ++n)
                    out.push_back({n, d.ell, d.mu, mode, kNaN, kNaN, StateFlag::SolverFailed});
            }
            break;
        }
    }
}

}  // namespace

SpectrumTable spectrum(const MolecularParams& p, const DunklParams& d, int n_max, int ell_max, SpectrumMode mode,
                       const SpectrumOptions& options) {
    return spectrum(p, d, n_max, ell_max, {d.mu}, {mode}, options);
}

SpectrumTable spectrum(const MolecularParams& p, const DunklParams& d, int n_max, int ell_max,
                       const std::vector<double>& mu_values, const std::vector<SpectrumMode>& modes,
                       const SpectrumOptions& options) {
    if (n_max < 0 || ell_max < 0) throw std::invalid_argument("n_max and ell_max must be non-negative");
    SpectrumTable table;
    for (int ell = 0; ell <= ell_max; ++ell) {
        for (double mu : mu_values) {
            const DunklParams level{mu, ell, d.convention};
            for (SpectrumMode mode : modes) append_levels(table, p, level, n_max, mode, options);
        }
    }
    std::stable_sort(table.begin(), table.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
        return std::tuple(a.ell, a.n, a.mu, int(a.mode)) < std::tuple(b.ell, b.n, b.mu, int(b.mode));
    });
    return table;
}

}  // namespace dunkl
