#include "dunkl/nu_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

std::string_view to_string(SpectrumMode mode) {
    switch (mode) {
        case SpectrumMode::PaperVerbatim: return "paper";
        case SpectrumMode::SelfConsistent: return "self-consistent";
        case SpectrumMode::Oracle: return "oracle";
    }
    return "unknown";
}

std::string_view to_string(StateFlag flag) {
    switch (flag) {
        case StateFlag::Bound: return "bound";
        case StateFlag::Unbound: return "unbound";
        case StateFlag::ComplexExponent: return "complex-exponent";
        case StateFlag::NoRoot: return "no-root";
        case StateFlag::SolverFailed: return "solver-failed";
    }
    return "unknown";
}

bool in_bound_window(double energy, const MolecularParams& p) {
    return std::isfinite(energy) && energy >= 0.0 && energy < p.depth;
}

AlphaChain alpha_chain(const MappedCoefficients& mc, double eps) {
    AlphaChain a;
    a.alpha4 = 0.5 * (1.0 - mc.c1);
    a.alpha5 = 0.5 * (mc.c2 - 2.0 * mc.c3);
    a.alpha6 = a.alpha5 * a.alpha5 + mc.xi1(eps);
    a.alpha7 = 2.0 * a.alpha4 * a.alpha5 - mc.xi2(eps);
    a.alpha8 = a.alpha4 * a.alpha4 + mc.xi3(eps);
    a.alpha9 = mc.c3 * a.alpha7 + mc.c3 * mc.c3 * a.alpha8 + a.alpha6;
    return a;
}

double quantization_residual(int n, double eps, const MappedCoefficients& mc, Alpha9Source source) {
    const AlphaChain a = alpha_chain(mc, eps);
    const double a9 = source == Alpha9Source::Stated ? stated_alpha9(mc.beta) : a.alpha9;
    if (a.alpha8 < 0.0) throw DomainError("alpha8 is negative, sqrt(alpha8) is complex", a.alpha8);
    if (a9 < 0.0) throw DomainError("alpha9 is negative, sqrt(alpha9) is complex", a9);

    const double nn = n;
    const double r8 = std::sqrt(a.alpha8);
    const double r9 = std::sqrt(a9);
    return mc.c2 * nn - (2.0 * nn + 1.0) * a.alpha5 + (2.0 * nn + 1.0) * (r9 - mc.c3 * r8) +
           nn * (nn - 1.0) * mc.c3 + a.alpha7 + 2.0 * mc.c3 * a.alpha8 + 2.0 * std::sqrt(a.alpha8 * a9);
}

ClosedFormResult energy_closed_form(int n, const MolecularParams& p, const DunklParams& d,
                                    const PekerisCoefficients& c) {
    p.validate();
    d.validate();
    if (n < 0) throw DomainError("radial quantum number must be non-negative", n);
    const double b = beta(p);
    const double g = centrifugal_eigenvalue(d);
    const double nn = n;
    const double shift = d.mu * d.mu + g * c.c0;
    const double numerator = b - (2.0 * nn + 1.0) * (d.mu + 0.5) - nn * (nn + 1.0);
    const double denominator = 2.0 * (nn + d.mu + 0.5 + std::sqrt(shift));

    ClosedFormResult out;
    out.k = numerator / denominator;
    out.eps = shift - out.k * out.k;
    out.energy = eps_to_energy(out.eps, p);
    out.flag = (out.k > 0.0 && in_bound_window(out.energy, p)) ? StateFlag::Bound : StateFlag::Unbound;
    return out;
}

SelfConsistentResult energy_self_consistent(int n, const MolecularParams& p, const DunklParams& d,
                                            const NuOptions& options) {
    if (n < 0) throw DomainError("radial quantum number must be non-negative", n);
    const MappedCoefficients mc = map_to_hypergeometric(p, d, options.pekeris, options.coefficients);
    const auto f = [&](double eps) { return quantization_residual(n, eps, mc, options.alpha9); };

    // alpha8 = alpha4^2 + xi3(eps) vanishes at eps_top.
    const double alpha4 = 0.5 * (1.0 - mc.c1);
    const double eps_top = (alpha4 * alpha4 + mc.xi_const[2]) / -mc.xi_slope[2];
    double lo = -mc.beta;
    double hi = eps_top - 1e-14 * std::max(1.0, std::abs(eps_top));
    if (!(lo < hi)) throw NoBoundState(n, d.ell, d.mu, "empty energy bracket");

    SelfConsistentResult out;
    out.diagnostics.bracket_lo = lo;
    out.diagnostics.bracket_hi = hi;

    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0 || f_hi == 0.0) {
        out.eps = f_lo == 0.0 ? lo : hi;
    } else {
        if ((f_lo > 0.0) == (f_hi > 0.0))
            throw NoBoundState(n, d.ell, d.mu, "termination residual has no sign change on the bracket");

        constexpr double tolerance = 1e-12;
        double mid = 0.5 * (lo + hi);
        double f_mid = f(mid);
        int iterations = 1;
        while (std::abs(f_mid) >= tolerance && iterations < 400) {
            if ((f_mid > 0.0) == (f_lo > 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
                f_hi = f_mid;
            }
            const double next = 0.5 * (lo + hi);
            if (next <= lo || next >= hi) break;
            mid = next;
            f_mid = f(mid);
            ++iterations;
        }

        // Secant polish, accepted only while it stays in the bracket and improves |f|.
        double x0 = lo, f0 = f_lo, x1 = mid, f1 = f_mid;
        if (x0 == x1) {
            x0 = hi;
            f0 = f_hi;
        }
        for (int step = 0; step < 3 && f1 != f0; ++step) {
            const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
            if (!(x2 > out.diagnostics.bracket_lo && x2 < out.diagnostics.bracket_hi)) break;
            const double f2 = f(x2);
            ++iterations;
            x0 = x1;
            f0 = f1;
            if (std::abs(f2) < std::abs(f_mid)) {
                mid = x2;
                f_mid = f2;
            }
            x1 = x2;
            f1 = f2;
        }
        out.eps = mid;
        out.diagnostics.iterations = iterations;
    }

    out.energy = eps_to_energy(out.eps, p);
    out.flag = in_bound_window(out.energy, p) ? StateFlag::Bound : StateFlag::Unbound;
    out.diagnostics.residual = f(out.eps);
    const ClosedFormResult closed = energy_closed_form(n, p, d, options.pekeris);
    out.diagnostics.closed_form_eps = closed.eps;
    out.diagnostics.closed_form_gap = out.energy - closed.energy;
    out.diagnostics.numerator_term_gap = 2.0 * n;
    return out;
}

int numerator_level_count(const MolecularParams& p, const DunklParams& d) {
    p.validate();
    d.validate();
    const double b = beta(p);
    int count = 0;
    for (;; ++count) {
        const double nn = count;
        if (!(b - (2.0 * nn + 1.0) * (d.mu + 0.5) - nn * (nn + 1.0) > 0.0)) break;
    }
    return count;
}

int bound_state_count(const MolecularParams& p, const DunklParams& d, SpectrumMode mode,
                      const NuOptions& options) {
    if (mode == SpectrumMode::Oracle)
        throw std::invalid_argument("bound_state_count is defined for the analytic modes only");
    // Closed form: K < 0 beyond the numerator count. Root-found levels run out
    // once the root would leave the (-beta, ...) bracket.
    const int limit = mode == SpectrumMode::PaperVerbatim ? numerator_level_count(p, d) : 100000;
    int count = 0;
    for (; count < limit; ++count) {
        if (mode == SpectrumMode::PaperVerbatim) {
            if (energy_closed_form(count, p, d, options.pekeris).flag != StateFlag::Bound) break;
        } else {
            try {
                if (energy_self_consistent(count, p, d, options).flag != StateFlag::Bound) break;
            } catch (const NoBoundState&) {
                break;
            } catch (const DomainError&) {
                break;
            }
        }
    }
    return count;
}

}  // namespace dunkl
