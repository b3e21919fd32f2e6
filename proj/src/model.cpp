#include "dunkl/model.hpp"

namespace dunkl {

void MolecularParams::validate() const {
    // Zero depth is allowed as the free limit.
    if (!(depth >= 0.0)) throw DomainError("dissociation energy must be non-negative", depth);
    if (!(screening > 0.0)) throw DomainError("screening parameter must be positive", screening);
    if (!(r_eq > 0.0)) throw DomainError("equilibrium distance must be positive", r_eq);
    if (!(mass > 0.0)) throw DomainError("mass must be positive", mass);
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive", hbar);
}

void DunklParams::validate() const {
    if (!(mu > -0.5)) throw DomainError("Dunkl parameter must exceed -1/2", mu);
    if (ell < 0) throw DomainError("orbital quantum number must be non-negative", ell);
}

double centrifugal_eigenvalue(const DunklParams& d) {
    const double l = d.ell;
    switch (d.convention) {
        case CentrifugalConvention::ResultsSection:
            return d.mu * (2.0 * l + 1.0) + l * (l + 1.0);
        case CentrifugalConvention::RadialEquation:
        default:
            return l * (l + 2.0 * d.mu + 1.0);
    }
}

double beta(const MolecularParams& p) {
    return 2.0 * p.mass * p.depth / (p.hbar * p.hbar * p.screening * p.screening);
}

double energy_scale(const MolecularParams& p) {
    return p.hbar * p.hbar * p.screening * p.screening / (2.0 * p.mass);
}

double eps_to_energy(double eps, const MolecularParams& p) { return energy_scale(p) * eps; }

double energy_to_eps(double energy, const MolecularParams& p) { return energy / energy_scale(p); }

double deng_fan_potential(double r, const MolecularParams& p) {
    if (!(r > 0.0)) throw DomainError("Deng-Fan potential requires r > 0", r);
    const double x = p.r_eq / r - 1.0;
    return p.depth * x * x;
}

double morse_potential(double r, const MolecularParams& p, double range) {
    if (!(range > 0.0)) throw DomainError("Morse range parameter must be positive", range);
    const double x = -std::expm1(-range * (r - p.r_eq));
    return p.depth * x * x;
}

}  // namespace dunkl
