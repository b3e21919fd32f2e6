#pragma once

// Physical parameters, the two molecular potentials and the Dunkl
// centrifugal barrier. Atomic units throughout (hbar = 1, m_e = 1).

#include <Eigen/Core>

#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

/// Molecular well D_e (r_e/r - 1)^2 together with the screening parameter
/// of the exponential mapping s = exp(-lambda r).
struct MolecularParams {
    double depth = 15.0;      ///< dissociation energy D_e, hartree
    double screening = 0.5;   ///< lambda, 1/bohr
    double r_eq = 1.0;        ///< equilibrium distance r_e, bohr
    double mass = 1.0;        ///< reduced mass, electron masses
    double hbar = 1.0;

    /// Throws DomainError unless every field is strictly positive.
    void validate() const;
};

/// Which barrier coefficient multiplies 1/r^2.
enum class CentrifugalConvention {
    RadialEquation,  ///< l(l + 2mu + 1), from the separated radial operator
    ResultsSection,  ///< mu(2l + 1) + l(l + 1), the form used to discuss results
};

struct DunklParams {
    double mu = 0.0;
    int ell = 0;
    CentrifugalConvention convention = CentrifugalConvention::RadialEquation;

    /// Throws DomainError for mu <= -1/2 or ell < 0.
    void validate() const;
};

struct QuantumNumbers {
    int n = 0;
    int ell = 0;
};

double centrifugal_eigenvalue(const DunklParams& d);

/// 2 m D_e / (hbar^2 lambda^2): the well depth in units of the mapping's energy scale.
double beta(const MolecularParams& p);

/// hbar^2 lambda^2 / (2m).
double energy_scale(const MolecularParams& p);
double eps_to_energy(double eps, const MolecularParams& p);
double energy_to_eps(double energy, const MolecularParams& p);

/// Morse range giving the same curvature at r_e as the Deng-Fan-form well.
inline double matched_morse_range(const MolecularParams& p) { return 1.0 / p.r_eq; }

double deng_fan_potential(double r, const MolecularParams& p);
double morse_potential(double r, const MolecularParams& p, double range);

/// Element-wise D_e (r_e/r - 1)^2. No domain check: callers pass r > 0.
template <typename Derived>
auto deng_fan_potential(const Eigen::ArrayBase<Derived>& r, const MolecularParams& p) {
    using Scalar = typename Derived::Scalar;
    return Scalar(p.depth) * (Scalar(p.r_eq) * r.inverse() - Scalar(1)).square();
}

template <typename Derived>
auto morse_potential(const Eigen::ArrayBase<Derived>& r, const MolecularParams& p, double range) {
    using Scalar = typename Derived::Scalar;
    return Scalar(p.depth) * (Scalar(1) - (Scalar(-range) * (r - Scalar(p.r_eq))).exp()).square();
}

}  // namespace dunkl
