#include "dunkl/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dunkl/tridiagonal.hpp"

namespace dunkl {

std::string_view to_string(OracleVariant variant) {
    return variant == OracleVariant::PekerisMapped ? "pekeris" : "exact";
}

OracleGrid default_oracle_grid(const MolecularParams& p) {
    return {1e-4 * p.r_eq, p.r_eq + 20.0 / p.screening, 4000};
}

void OracleProblem::validate() const {
    params.validate();
    dunkl.validate();
    if (!(grid.r_min > 0.0)) throw DomainError("oracle r_min must be positive", grid.r_min);
    if (!(grid.r_min < params.r_eq)) throw DomainError("oracle r_min must lie below r_e", grid.r_min);
    if (!(grid.r_max > params.r_eq)) throw DomainError("oracle r_max must lie above r_e", grid.r_max);
    if (grid.points < 2000) throw DomainError("oracle grid needs at least 2000 points", grid.points);
}

double liouville_transform_coefficient(const DunklParams& d) { return (4.0 * d.mu * d.mu - 1.0) / 4.0; }

Eigen::ArrayXd effective_potential(const OracleProblem& prob, const Eigen::ArrayXd& r) {
    const MolecularParams& p = prob.params;
    const double kinetic = p.hbar * p.hbar / (2.0 * p.mass);
    const double gamma = centrifugal_eigenvalue(prob.dunkl);

    Eigen::ArrayXd barrier = prob.variant == OracleVariant::PekerisMapped
                                 ? Eigen::ArrayXd(gamma * inverse_square_approx(r, p.screening, prob.pekeris))
                                 : Eigen::ArrayXd(gamma * r.square().inverse());
    barrier += liouville_transform_coefficient(prob.dunkl) * r.square().inverse();

    Eigen::ArrayXd v = kinetic * barrier;
    if (prob.potential == OraclePotential::DengFan) v += deng_fan_potential(r, p);
    return v;
}

namespace {

std::vector<double> solve_on_grid(const OracleProblem& prob, Eigen::Index intervals, int count, double& h) {
    using Wide = long double;
    const double r0 = prob.grid.r_min;
    const double r1 = prob.grid.r_max;
    h = (r1 - r0) / static_cast<double>(intervals);
    const Eigen::Index interior = intervals - 1;
    const Eigen::ArrayXd r = r0 + h * Eigen::ArrayXd::LinSpaced(interior, 1.0, static_cast<double>(interior));

    // The low levels sit ~h^2 below the kinetic diagonal; in double the
    // Sturm pivots lose the last grid doubling to roundoff.
    const Wide wide_h = (Wide(r1) - Wide(r0)) / Wide(intervals);
    const Wide kinetic = Wide(prob.params.hbar) * Wide(prob.params.hbar) / (2 * Wide(prob.params.mass));
    const Wide hop = kinetic / (wide_h * wide_h);
    const TridiagonalVector<Wide> diag = (2 * hop + effective_potential(prob, r).cast<Wide>()).matrix();
    const TridiagonalVector<Wide> off = TridiagonalVector<Wide>::Constant(interior - 1, -hop);
    const TridiagonalVector<Wide> values = lowest_eigenvalues(diag, off, count);
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) out[k] = static_cast<double>(values[k]);
    return out;
}

}  // namespace

OracleResult fd_eigensolve(const OracleProblem& prob, int count) {
    prob.validate();
    if (count < 1) throw std::invalid_argument("fd_eigensolve needs count >= 1");

    const Eigen::Index base = static_cast<Eigen::Index>(prob.grid.points) + 1;
    OracleResult out;
    for (int g = 0; g < 3; ++g) {
        double h = 0.0;
        out.raw.push_back(solve_on_grid(prob, base << g, count, h));
        out.grid_spacings.push_back(h);
    }

    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon();
    out.eigenvalues.resize(count);
    out.convergence_order.resize(count);
    for (int n = 0; n < count; ++n) {
        const double e0 = out.raw[0][n], e1 = out.raw[1][n], e2 = out.raw[2][n];
        out.eigenvalues[n] = (4.0 * e2 - e1) / 3.0;
        const double d01 = e0 - e1;
        const double d12 = e1 - e2;
        const double scale = roundoff * std::max(1.0, std::abs(e2));
        out.convergence_order[n] = (std::abs(d12) > scale && std::abs(d01) > scale && d01 / d12 > 0.0)
                                       ? std::log2(d01 / d12)
                                       : std::numeric_limits<double>::quiet_NaN();
        const double order = out.convergence_order[n];
        if (!(order >= 1.5 && order <= 2.5))
            throw AccuracyError("finite-difference level " + std::to_string(n) +
                                    " is not converging at second order; refine the grid",
                                order);
    }
    return out;
}

}  // namespace dunkl
