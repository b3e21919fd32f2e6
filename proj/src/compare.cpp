#include <cmath>
#include <limits>

#include "dunkl/oracle.hpp"

namespace dunkl {

std::string_view to_string(ComparedMode mode) {
    switch (mode) {
        case ComparedMode::Paper: return "paper";
        case ComparedMode::SelfConsistent: return "self-consistent";
        case ComparedMode::OracleExact: return "oracle-exact";
        case ComparedMode::OraclePekeris: return "oracle-pekeris";
    }
    return "unknown";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void fill_oracle(std::vector<ModeEnergies>& block, const MolecularParams& p, const DunklParams& d,
                 OracleVariant variant, const OracleGrid& grid, const NuOptions& options, ComparedMode slot) {
    OracleProblem prob{p, d, variant, grid, options.pekeris, OraclePotential::DengFan};
    try {
        const OracleResult res = fd_eigensolve(prob, static_cast<int>(block.size()));
        for (std::size_t n = 0; n < block.size(); ++n) {
            const double e = res.eigenvalues[n];
            block[n].energy[int(slot)] = e;
            block[n].flag[int(slot)] = in_bound_window(e, p) ? StateFlag::Bound : StateFlag::Unbound;
        }
    } catch (const std::exception&) {
        for (auto& row : block) {
            row.energy[int(slot)] = kNaN;
            row.flag[int(slot)] = StateFlag::SolverFailed;
        }
    }
}

}  // namespace

DiscrepancyReport compare_modes(const MolecularParams& p, CentrifugalConvention convention, int n_max,
                                int ell_max, const std::vector<double>& mu_values, const NuOptions& options,
                                const OracleGrid& grid) {
    DiscrepancyReport report;
    for (int ell = 0; ell <= ell_max; ++ell) {
        for (int n = 0; n <= n_max; ++n) {
            for (double mu : mu_values) {
                ModeEnergies row;
                row.n = n;
                row.ell = ell;
                row.mu = mu;
                report.energies.push_back(row);
            }
        }
    }

    // Fill one (ell, mu) block at a time so each oracle solve serves every n.
    const std::size_t mus = mu_values.size();
    for (int ell = 0; ell <= ell_max; ++ell) {
        for (std::size_t m = 0; m < mus; ++m) {
            const DunklParams d{mu_values[m], ell, convention};
            std::vector<ModeEnergies> block(static_cast<std::size_t>(n_max) + 1);
            for (int n = 0; n <= n_max; ++n) {
                ModeEnergies& e = block[n];
                const ClosedFormResult closed = energy_closed_form(n, p, d, options.pekeris);
                e.energy[int(ComparedMode::Paper)] = closed.energy;
                e.flag[int(ComparedMode::Paper)] = closed.flag;
                try {
                    const SelfConsistentResult sc = energy_self_consistent(n, p, d, options);
                    e.energy[int(ComparedMode::SelfConsistent)] = sc.energy;
                    e.flag[int(ComparedMode::SelfConsistent)] = sc.flag;
                } catch (const NoBoundState&) {
                    e.energy[int(ComparedMode::SelfConsistent)] = kNaN;
                    e.flag[int(ComparedMode::SelfConsistent)] = StateFlag::NoRoot;
                } catch (const DomainError&) {
                    e.energy[int(ComparedMode::SelfConsistent)] = kNaN;
                    e.flag[int(ComparedMode::SelfConsistent)] = StateFlag::ComplexExponent;
                }
            }
            fill_oracle(block, p, d, OracleVariant::ExactCentrifugal, grid, options, ComparedMode::OracleExact);
            fill_oracle(block, p, d, OracleVariant::PekerisMapped, grid, options, ComparedMode::OraclePekeris);

            for (int n = 0; n <= n_max; ++n) {
                const std::size_t index = (static_cast<std::size_t>(ell) * (n_max + 1) + n) * mus + m;
                const ModeEnergies& src = block[n];
                ModeEnergies& dst = report.energies[index];
                for (int k = 0; k < 4; ++k) {
                    dst.energy[k] = src.energy[k];
                    dst.flag[k] = src.flag[k];
                }
            }
        }
    }

    // Reference (second) member of each pair is the more trusted one.
    static constexpr ComparedMode pairs[6][2] = {
        {ComparedMode::Paper, ComparedMode::SelfConsistent},
        {ComparedMode::Paper, ComparedMode::OracleExact},
        {ComparedMode::Paper, ComparedMode::OraclePekeris},
        {ComparedMode::SelfConsistent, ComparedMode::OracleExact},
        {ComparedMode::SelfConsistent, ComparedMode::OraclePekeris},
        {ComparedMode::OraclePekeris, ComparedMode::OracleExact},
    };
    for (const ModeEnergies& e : report.energies) {
        for (const auto& pair : pairs) {
            DiscrepancyRow row;
            row.n = e.n;
            row.ell = e.ell;
            row.mu = e.mu;
            row.mode_a = pair[0];
            row.mode_b = pair[1];
            row.energy_a = e.energy[int(pair[0])];
            row.energy_b = e.energy[int(pair[1])];
            row.flag_a = e.flag[int(pair[0])];
            row.flag_b = e.flag[int(pair[1])];
            row.abs_gap = std::abs(row.energy_a - row.energy_b);
            row.rel_gap = row.abs_gap / std::abs(row.energy_b);
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace dunkl
