#pragma once

// Radial states R(s) = N s^{sqrt(a8)} (1-s)^{sqrt(a9)} P_n^{(2 sqrt(a8), 2 sqrt(a9))}(1 - 2s),
// s = exp(-lambda r).

#include "dunkl/model.hpp"
#include "dunkl/nu_engine.hpp"

namespace dunkl {

struct RadialState {
    int n = 0;
    int ell = 0;
    double mu = 0.0;
    double exp_s = 0.0;     ///< sqrt(alpha8); governs the r -> infinity tail
    double exp_1ms = 0.0;   ///< sqrt(alpha9); governs the r -> 0 behaviour
    double jacobi_a = 0.0;  ///< 2 sqrt(alpha8)
    double jacobi_b = 0.0;  ///< 2 sqrt(alpha9)
    double lambda = 0.0;
    double norm = 1.0;
};

enum class QuadratureScheme { CompositeGaussLegendre, AdaptiveSimpson };

struct QuadratureSpec {
    double r_max = 81.0;
    int node_count = 16384;
    QuadratureScheme scheme = QuadratureScheme::CompositeGaussLegendre;

    /// r_max = r_e + 40/lambda.
    static QuadratureSpec standard(const MolecularParams& p);
};

/// Builds the state for level n from the energy of an analytic mode.
/// Throws NoBoundState when an exponent would be complex or non-positive,
/// and std::invalid_argument for SpectrumMode::Oracle.
RadialState make_radial_state(int n, const MolecularParams& p, const DunklParams& d,
                              SpectrumMode mode = SpectrumMode::PaperVerbatim, const NuOptions& options = {});

double radial_unnormalized(const RadialState& st, double r);

/// norm * radial_unnormalized.
double radial_value(const RadialState& st, double r);

/// r^{2mu+1}: the weight making d^2/dr^2 + ((2mu+1)/r) d/dr symmetric.
inline double natural_weight_exponent(double mu) { return 2.0 * mu + 1.0; }

/// Integral of |N R|^2 r^w over [0, r_max], with r_max extended until the
/// integrand tail drops below 1e-14 of its maximum.
double norm_integral(const RadialState& st, const QuadratureSpec& quad, double weight_exponent);

RadialState normalize(const RadialState& st, const QuadratureSpec& quad, double weight_exponent);

/// |N R(r)|^2 r^{2mu+1} when weighted, |N R(r)|^2 otherwise.
double probability_density(const RadialState& st, double r, bool weighted);

/// Strict sign changes of R on a uniform grid of quad.node_count points in (0, r_max).
int node_count(const RadialState& st, const QuadratureSpec& grid);

/// Abscissa of the density maximum: grid scan refined by golden-section search.
double density_peak(const RadialState& st, bool weighted, const QuadratureSpec& grid);

}  // namespace dunkl
