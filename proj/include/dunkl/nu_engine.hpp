#pragma once

// Parametric Nikiforov-Uvarov machinery: auxiliary alpha parameters, the
// termination residual, the closed-form spectrum and a root-found spectrum.

#include <string_view>

#include "dunkl/model.hpp"
#include "dunkl/pekeris.hpp"

namespace dunkl {

struct AlphaChain {
    double alpha4 = 0.0;
    double alpha5 = 0.0;
    double alpha6 = 0.0;
    double alpha7 = 0.0;
    double alpha8 = 0.0;
    double alpha9 = 0.0;
};

/// alpha4..alpha9 at trial energy eps, computed from the mapped coefficients.
AlphaChain alpha_chain(const MappedCoefficients& mc, double eps);

/// The closed value 1/4 + beta quoted for alpha9. The chain itself evaluates
/// to (alpha4 + alpha5)^2 + xi1 - xi2 + xi3, which differs in the sign of beta.
inline double stated_alpha9(double beta) { return 0.25 + beta; }

/// Where the residual and the wavefunction take alpha9 from.
enum class Alpha9Source {
    Stated,  ///< 1/4 + beta
    Chain,   ///< c3 alpha7 + c3^2 alpha8 + alpha6
};

/// Selectors shared by every analytic mode.
struct NuOptions {
    PekerisCoefficients pekeris{};
    CoefficientSet coefficients = CoefficientSet::NuConstants;
    Alpha9Source alpha9 = Alpha9Source::Stated;
};

enum class SpectrumMode { PaperVerbatim, SelfConsistent, Oracle };

enum class StateFlag {
    Bound,            ///< energy inside [0, D_e)
    Unbound,          ///< finite energy outside the window, or K <= 0
    ComplexExponent,  ///< alpha8 or alpha9 negative
    NoRoot,           ///< termination condition has no root in the bracket
    SolverFailed,     ///< numerical oracle failed its convergence check
};

std::string_view to_string(SpectrumMode mode);
std::string_view to_string(StateFlag flag);

/// True for 0 <= E < D_e.
bool in_bound_window(double energy, const MolecularParams& p);

/// Left side of the termination condition
///   c2 n - (2n+1) a5 + (2n+1)(sqrt(a9) - c3 sqrt(a8)) + n(n-1) c3 + a7 + 2 c3 a8 + 2 sqrt(a8 a9),
/// exactly as printed. Throws DomainError when alpha8 or alpha9 is negative.
double quantization_residual(int n, double eps, const MappedCoefficients& mc,
                             Alpha9Source source = Alpha9Source::Stated);

struct ClosedFormResult {
    double eps = 0.0;
    double energy = 0.0;
    double k = 0.0;  ///< sqrt(mu^2 + gamma C0 - eps) as given by the closed form
    StateFlag flag = StateFlag::Unbound;
};

/// eps = (mu^2 + gamma C0) - K^2 with
/// K = [beta - (2n+1)(mu+1/2) - n(n+1)] / [2(n + mu + 1/2 + sqrt(mu^2 + gamma C0))].
ClosedFormResult energy_closed_form(int n, const MolecularParams& p, const DunklParams& d,
                                    const PekerisCoefficients& c = {});

struct SelfConsistentDiagnostics {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double residual = 0.0;
    double closed_form_eps = 0.0;
    double closed_form_gap = 0.0;     ///< E_self_consistent - E_closed_form, hartree
    double numerator_term_gap = 0.0;  ///< n(n+1) - n(n-1): the residual and the closed form disagree on this term
};

struct SelfConsistentResult {
    double eps = 0.0;
    double energy = 0.0;
    StateFlag flag = StateFlag::Unbound;
    SelfConsistentDiagnostics diagnostics;
};

/// Root of quantization_residual in eps on (-beta, alpha8-zero). Bisection to
/// |residual| < 1e-12 followed by three secant polish steps.
/// Throws NoBoundState when the residual does not change sign on the bracket.
SelfConsistentResult energy_self_consistent(int n, const MolecularParams& p, const DunklParams& d,
                                            const NuOptions& options = {});

/// Number of n with beta - (2n+1)(mu+1/2) - n(n+1) > 0.
int numerator_level_count(const MolecularParams& p, const DunklParams& d);

/// Largest N such that every n < N has a bound-flagged state in the given
/// analytic mode. Oracle mode is rejected (std::invalid_argument): the
/// Coulomb-like tail of the well supports infinitely many levels below D_e.
int bound_state_count(const MolecularParams& p, const DunklParams& d,
                      SpectrumMode mode = SpectrumMode::PaperVerbatim, const NuOptions& options = {});

}  // namespace dunkl
