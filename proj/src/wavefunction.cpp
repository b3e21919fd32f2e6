#include "dunkl/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dunkl/jacobi.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

QuadratureSpec QuadratureSpec::standard(const MolecularParams& p) {
    QuadratureSpec q;
    q.r_max = p.r_eq + 40.0 / p.screening;
    return q;
}

RadialState make_radial_state(int n, const MolecularParams& p, const DunklParams& d, SpectrumMode mode,
                              const NuOptions& options) {
    double eps = 0.0;
    switch (mode) {
        case SpectrumMode::PaperVerbatim: {
            const ClosedFormResult closed = energy_closed_form(n, p, d, options.pekeris);
            if (!(closed.k > 0.0)) throw NoBoundState(n, d.ell, d.mu, "closed-form K is not positive");
            eps = closed.eps;
            break;
        }
        case SpectrumMode::SelfConsistent:
            eps = energy_self_consistent(n, p, d, options).eps;
            break;
        case SpectrumMode::Oracle:
            throw std::invalid_argument("radial states are built from the analytic modes only");
    }

    const MappedCoefficients mc = map_to_hypergeometric(p, d, options.pekeris, options.coefficients);
    const AlphaChain chain = alpha_chain(mc, eps);
    const double a8 = chain.alpha8;
    const double a9 = options.alpha9 == Alpha9Source::Stated ? stated_alpha9(mc.beta) : chain.alpha9;
    if (!(a8 > 0.0)) throw NoBoundState(n, d.ell, d.mu, "alpha8 = " + std::to_string(a8) + " gives no decaying tail");
    if (!(a9 >= 0.0)) throw NoBoundState(n, d.ell, d.mu, "alpha9 = " + std::to_string(a9) + " gives a complex exponent");

    RadialState st;
    st.n = n;
    st.ell = d.ell;
    st.mu = d.mu;
    st.exp_s = std::sqrt(a8);
    st.exp_1ms = std::sqrt(a9);
    st.jacobi_a = 2.0 * st.exp_s;
    st.jacobi_b = 2.0 * st.exp_1ms;
    st.lambda = p.screening;
    return st;
}

double radial_unnormalized(const RadialState& st, double r) {
    if (r <= 0.0) return st.exp_1ms > 0.0 ? 0.0 : jacobi(st.n, st.jacobi_a, st.jacobi_b, -1.0);
    const double x = -st.lambda * r;
    const double s = std::exp(x);
    const double one_minus_s = -std::expm1(x);
    // s^a (1-s)^b evaluated in log form to avoid intermediate underflow.
    const double envelope = std::exp(st.exp_s * x + st.exp_1ms * std::log(one_minus_s));
    return envelope * jacobi(st.n, st.jacobi_a, st.jacobi_b, 1.0 - 2.0 * s);
}

double radial_value(const RadialState& st, double r) { return st.norm * radial_unnormalized(st, r); }

double probability_density(const RadialState& st, double r, bool weighted) {
    const double v = radial_value(st, r);
    const double density = v * v;
    return weighted ? density * std::pow(r, natural_weight_exponent(st.mu)) : density;
}

namespace {

double integrand(const RadialState& st, double r, double w) {
    const double v = radial_value(st, r);
    return r > 0.0 ? v * v * std::pow(r, w) : 0.0;
}

// Largest integrand value on a uniform sample of [0, r_max].
double sampled_peak(const RadialState& st, double r_max, double w, int samples) {
    double peak = 0.0;
    for (int i = 1; i <= samples; ++i) peak = std::max(peak, integrand(st, r_max * i / samples, w));
    return peak;
}

}  // namespace

double norm_integral(const RadialState& st, const QuadratureSpec& quad, double weight_exponent) {
    if (!(st.exp_s > 0.0)) throw DomainError("norm integral diverges: tail exponent must be positive", st.exp_s);
    if (!(st.exp_1ms >= 0.0)) throw DomainError("behaviour at the origin is not real", st.exp_1ms);
    if (!(weight_exponent > -1.0)) throw DomainError("weight exponent must exceed -1", weight_exponent);
    if (quad.node_count < 64) throw DomainError("quadrature needs at least 64 nodes", quad.node_count);

    double r_max = quad.r_max;
    const double peak = sampled_peak(st, r_max, weight_exponent, quad.node_count);
    while (integrand(st, r_max, weight_exponent) > 1e-14 * peak) {
        r_max *= 2.0;
        if (r_max > 1e6 * quad.r_max) throw DomainError("norm integral tail does not decay", r_max);
    }

    const auto f = [&](double r) { return integrand(st, r, weight_exponent); };
    if (quad.scheme == QuadratureScheme::AdaptiveSimpson)
        return integrate_adaptive_simpson(f, 0.0, r_max, 1e-14 * std::max(peak, 1e-300) * r_max);

    constexpr int kOrder = 16;
    static const GaussRule rule = gauss_legendre(kOrder);
    const int panels = std::max(1, quad.node_count / kOrder);
    return integrate_composite(f, 0.0, r_max, panels, rule);
}

RadialState normalize(const RadialState& st, const QuadratureSpec& quad, double weight_exponent) {
    RadialState out = st;
    out.norm = 1.0;
    const double integral = norm_integral(out, quad, weight_exponent);
    if (!(integral > 0.0) || !std::isfinite(integral)) throw DomainError("norm integral is not positive", integral);
    out.norm = 1.0 / std::sqrt(integral);
    return out;
}

int node_count(const RadialState& st, const QuadratureSpec& grid) {
    int changes = 0;
    int last_sign = 0;
    const int points = std::max(grid.node_count, 2);
    for (int i = 1; i < points; ++i) {
        const double r = grid.r_max * i / points;
        const double v = radial_unnormalized(st, r);
        const int sign = (v > 0.0) - (v < 0.0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

double density_peak(const RadialState& st, bool weighted, const QuadratureSpec& grid) {
    const int points = std::max(grid.node_count, 16);
    const double h = grid.r_max / points;
    int best = 1;
    double best_value = -1.0;
    for (int i = 1; i < points; ++i) {
        const double v = probability_density(st, i * h, weighted);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    // Golden-section search on the bracketing cell pair.
    double a = (best - 1) * h;
    double b = (best + 1) * h;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = probability_density(st, c, weighted);
    double fd = probability_density(st, d, weighted);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, b); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = probability_density(st, c, weighted);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = probability_density(st, d, weighted);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace dunkl
