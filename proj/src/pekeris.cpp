#include "dunkl/pekeris.hpp"

namespace dunkl {

double inverse_square_approx(double r, double lambda, const PekerisCoefficients& c) {
    if (!(r > 0.0)) throw DomainError("Pekeris approximation requires r > 0", r);
    const double s = std::exp(-lambda * r);
    const double one_minus_s = -std::expm1(-lambda * r);
    return lambda * lambda * (c.c0 + c.c1 * s + c.c2 * s * s) / (one_minus_s * one_minus_s);
}

MappedCoefficients map_to_hypergeometric(const MolecularParams& p, const DunklParams& d,
                                         const PekerisCoefficients& c, CoefficientSet set) {
    p.validate();
    d.validate();
    const double b = dunkl::beta(p);
    const double g = centrifugal_eigenvalue(d);

    MappedCoefficients mc;
    switch (set) {
        case CoefficientSet::MappedOde:
            mc.c1 = 1.0;
            mc.c2 = 1.0 + 2.0 * d.mu;
            break;
        case CoefficientSet::NuConstants:
        default:
            mc.c1 = 1.0 - 2.0 * d.mu;
            mc.c2 = 1.0 - 2.0 * d.mu;
            break;
    }
    mc.c3 = 1.0;
    mc.xi_const = {b + g * (c.c1 + c.c2), 2.0 * b + g * (2.0 * c.c0 + c.c1), g * c.c0};
    mc.xi_slope = {-1.0, -2.0, -1.0};
    mc.beta = b;
    mc.gamma = g;
    return mc;
}

}  // namespace dunkl
