#pragma once

// Finite-difference eigen-solver for the radial equation
//
//   R'' + (2mu+1)/r R' + [2m(E - V)/hbar^2 - gamma/r^2] R = 0,
//
// used as ground truth for the analytic modes. The substitution
// u = r^{(2mu+1)/2} R removes the first-derivative term, leaving
//
//   -hbar^2/(2m) u'' + [V + hbar^2/(2m) (gamma w(r) + (4mu^2 - 1)/(4 r^2))] u = E u,
//
// where w(r) is 1/r^2 or its Pekeris replacement.

#include <Eigen/Core>

#include <vector>

#include "dunkl/model.hpp"
#include "dunkl/nu_engine.hpp"
#include "dunkl/pekeris.hpp"

namespace dunkl {

enum class OracleVariant {
    ExactCentrifugal,  ///< gamma / r^2
    PekerisMapped,     ///< gamma times the Pekeris approximation of 1/r^2
};

enum class OraclePotential {
    DengFan,  ///< D_e (r_e/r - 1)^2
    Free,     ///< V = 0; with mu = 1/2 and gamma = 0 this is a particle in a box
};

std::string_view to_string(OracleVariant variant);

/// Dirichlet interval and the number of interior nodes of the coarsest grid.
struct OracleGrid {
    double r_min = 1e-4;
    double r_max = 41.0;
    int points = 4000;
};

/// r_min = 1e-4 r_e, r_max = r_e + 20/lambda, 4000 interior nodes.
OracleGrid default_oracle_grid(const MolecularParams& p);

struct OracleProblem {
    MolecularParams params;
    DunklParams dunkl;
    OracleVariant variant = OracleVariant::ExactCentrifugal;
    OracleGrid grid;
    PekerisCoefficients pekeris{};
    OraclePotential potential = OraclePotential::DengFan;

    /// Throws DomainError unless 0 < r_min < r_e < r_max and points >= 2000.
    void validate() const;
};

struct OracleResult {
    std::vector<double> eigenvalues;               ///< Richardson estimates, index n
    std::vector<double> grid_spacings;             ///< h, h/2, h/4
    std::vector<std::vector<double>> raw;          ///< raw[g][n] on grid g
    std::vector<double> convergence_order;         ///< log2 of successive difference ratio, per level
};

/// (4 mu^2 - 1)/4: inverse-square term generated by the Liouville substitution.
double liouville_transform_coefficient(const DunklParams& d);

/// Potential of the transformed (first-derivative-free) equation on grid r.
Eigen::ArrayXd effective_potential(const OracleProblem& prob, const Eigen::ArrayXd& r);

/// Lowest `count` eigenvalues on grids with M, 2M and 4M intervals, Richardson
/// extrapolated from the two finest. Throws AccuracyError when a level's
/// empirical order falls outside [1.5, 2.5].
OracleResult fd_eigensolve(const OracleProblem& prob, int count);

/// Energy label used by the mode comparison.
enum class ComparedMode { Paper, SelfConsistent, OracleExact, OraclePekeris };

std::string_view to_string(ComparedMode mode);

struct ModeEnergies {
    int n = 0;
    int ell = 0;
    double mu = 0.0;
    double energy[4]{};  ///< indexed by ComparedMode; NaN when unavailable
    StateFlag flag[4]{};
};

struct DiscrepancyRow {
    int n = 0;
    int ell = 0;
    double mu = 0.0;
    ComparedMode mode_a = ComparedMode::Paper;
    ComparedMode mode_b = ComparedMode::OracleExact;
    double energy_a = 0.0;
    double energy_b = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;  ///< relative to energy_b
    StateFlag flag_a = StateFlag::Bound;
    StateFlag flag_b = StateFlag::Bound;
};

struct DiscrepancyReport {
    std::vector<ModeEnergies> energies;
    std::vector<DiscrepancyRow> rows;  ///< six mode pairs per grid point
};

/// Every mode at every (n <= n_max, l <= ell_max, mu in mu_values) point,
/// with all pairwise gaps. Failures are flagged, never thrown.
DiscrepancyReport compare_modes(const MolecularParams& p, CentrifugalConvention convention, int n_max,
                                int ell_max, const std::vector<double>& mu_values, const NuOptions& options = {},
                                const OracleGrid& grid = {});

}  // namespace dunkl
