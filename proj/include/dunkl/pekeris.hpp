#pragma once

// Pekeris replacement of 1/r^2 and the coefficients of the resulting
// hypergeometric-type equation
//
//   psi'' + (c1 - c2 s)/(s (1 - c3 s)) psi' + (-xi1 s^2 + xi2 s - xi3)/(s^2 (1 - c3 s)^2) psi = 0,
//
// with s = exp(-lambda r).

#include <Eigen/Core>

#include <array>
#include <cmath>

#include "dunkl/model.hpp"

namespace dunkl {

struct PekerisCoefficients {
    double c0 = 1.0 / 12.0;
    double c1 = 10.0 / 12.0;
    double c2 = 1.0 / 12.0;
};

inline PekerisCoefficients pekeris_coefficients() { return {}; }

/// lambda^2 (C0 + C1 s + C2 s^2)/(1 - s)^2 with s = exp(-lambda r). Throws for r <= 0.
double inverse_square_approx(double r, double lambda, const PekerisCoefficients& c);

/// Element-wise variant for grids; r must be positive.
template <typename Derived>
auto inverse_square_approx(const Eigen::ArrayBase<Derived>& r, double lambda, const PekerisCoefficients& c) {
    using Scalar = typename Derived::Scalar;
    const auto s = (Scalar(-lambda) * r).exp();
    // 1 - s via expm1 keeps full precision as r -> 0.
    const auto one_minus_s = -(Scalar(-lambda) * r).unaryExpr([](Scalar x) { return std::expm1(x); });
    return Scalar(lambda * lambda) * (Scalar(c.c0) + Scalar(c.c1) * s + Scalar(c.c2) * s.square()) /
           one_minus_s.square();
}

/// Two readings of the drift coefficient of the mapped equation.
enum class CoefficientSet {
    NuConstants,  ///< c1 = c2 = 1 - 2mu, c3 = 1 (the constants fed into the closed-form spectrum)
    MappedOde,    ///< c1 = 1, c2 = 1 + 2mu, c3 = 1 (read off (1 - s(1 + 2mu))/(s(1 - s)))
};

/// ξ_i(ε) = xi_const[i] + xi_slope[i]·ε, stored zero-based (index 0 is ξ1).
struct MappedCoefficients {
    double c1 = 1.0;
    double c2 = 1.0;
    double c3 = 1.0;
    std::array<double, 3> xi_const{};
    std::array<double, 3> xi_slope{-1.0, -2.0, -1.0};
    double beta = 0.0;   ///< well depth parameter that generated the constants
    double gamma = 0.0;  ///< centrifugal eigenvalue used

    double xi1(double eps) const { return xi_const[0] + xi_slope[0] * eps; }
    double xi2(double eps) const { return xi_const[1] + xi_slope[1] * eps; }
    double xi3(double eps) const { return xi_const[2] + xi_slope[2] * eps; }
};

MappedCoefficients map_to_hypergeometric(const MolecularParams& p, const DunklParams& d,
                                         const PekerisCoefficients& c = {},
                                         CoefficientSet set = CoefficientSet::NuConstants);

}  // namespace dunkl
