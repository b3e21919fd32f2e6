#include <doctest.h>

#include "dunkl/jacobi.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/wavefunction.hpp"

using namespace dunkl;

namespace {

const MolecularParams kParams{};

RadialState paper_state(int n, double mu, int ell = 0) {
    return normalize(make_radial_state(n, kParams, {mu, ell}), QuadratureSpec::standard(kParams),
                     natural_weight_exponent(mu));
}

}  // namespace

TEST_CASE("jacobi low degrees") {
    for (double a : {-0.5, 0.0, 2.0})
        for (double b : {-0.3, 1.0, 7.5})
            for (double x : {-1.0, 0.0, 1.0}) {
                CHECK(jacobi(0, a, b, x) == 1.0);
                CHECK(jacobi(1, a, b, x) == doctest::Approx((a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0));
            }
    CHECK(jacobi(3, 2.0, 1.0, 1.0) == doctest::Approx(10.0).epsilon(1e-14));
    for (int n = 0; n <= 10; ++n) {
        const double a = 1.7;
        const double expected = std::tgamma(n + a + 1.0) / (std::tgamma(a + 1.0) * std::tgamma(n + 1.0));
        CHECK(jacobi(n, a, 0.4, 1.0) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK_THROWS_AS(jacobi(2, -1.0, 0.0, 0.3), DomainError);
    CHECK_THROWS_AS(jacobi(2, 0.0, -1.5, 0.3), DomainError);
    CHECK_THROWS_AS(jacobi(-1, 0.0, 0.0, 0.3), DomainError);
}

TEST_CASE("jacobi array overload") {
    const Eigen::ArrayXd x = Eigen::ArrayXd::LinSpaced(21, -1.0, 1.0);
    const Eigen::ArrayXd v = jacobi(4, 0.5, 1.5, x);
    for (Eigen::Index i = 0; i < x.size(); ++i) CHECK(v[i] == doctest::Approx(jacobi(4, 0.5, 1.5, x[i])));
}

TEST_CASE("gauss-legendre rule") {
    for (int order : {2, 16, 256}) {
        const GaussRule g = gauss_legendre(order);
        CHECK(g.weights.sum() == doctest::Approx(2.0).epsilon(1e-13));
        for (int i = 0; i < order; ++i) CHECK(g.nodes[i] == doctest::Approx(-g.nodes[order - 1 - i]).epsilon(1e-14));
        // Exact through degree 2N - 1.
        const int deg = 2 * order - 2;
        const double integral = (g.weights.array() * g.nodes.array().pow(deg)).sum();
        CHECK(integral == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-12));
    }
    const GaussRule g = gauss_legendre(16);
    CHECK(integrate_composite([](double x) { return std::exp(x); }, 0.0, 3.0, 8, g) ==
          doctest::Approx(std::expm1(3.0)).epsilon(1e-14));
    CHECK(integrate_adaptive_simpson([](double x) { return std::sin(x); }, 0.0, 3.14159265358979, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("jacobi orthogonality with exponents from actual states") {
    const GaussRule g = gauss_legendre(256);
    for (double mu : {0.0, 0.5, 1.0})
        for (int ell : {0, 2}) {
            const RadialState st = make_radial_state(0, kParams, {mu, ell});
            const double a = st.jacobi_a, b = st.jacobi_b;
            const auto inner = [&](int i, int j) {
                double s = 0.0;
                for (int k = 0; k < 256; ++k) {
                    const double x = g.nodes[k];
                    s += g.weights[k] * std::exp(a * std::log1p(-x) + b * std::log1p(x)) * jacobi(i, a, b, x) *
                         jacobi(j, a, b, x);
                }
                return s;
            };
            for (int i = 0; i <= 5; ++i)
                for (int j = 0; j < i; ++j)
                    REQUIRE(std::abs(inner(i, j)) / std::sqrt(inner(i, i) * inner(j, j)) < 1e-10);
        }
}

TEST_CASE("state construction") {
    const RadialState st = make_radial_state(0, kParams, DunklParams{});
    CHECK(st.exp_s == doctest::Approx(119.5).epsilon(1e-12));
    CHECK(st.exp_1ms == doctest::Approx(std::sqrt(120.25)).epsilon(1e-15));
    CHECK(st.jacobi_a == 2.0 * st.exp_s);
    CHECK(st.jacobi_b == 2.0 * st.exp_1ms);
    CHECK_THROWS_AS(make_radial_state(10, kParams, DunklParams{}), NoBoundState);
    CHECK_THROWS_AS(make_radial_state(0, kParams, DunklParams{}, SpectrumMode::Oracle), std::invalid_argument);
    NuOptions chain;
    chain.alpha9 = Alpha9Source::Chain;
    CHECK_THROWS_AS(make_radial_state(0, kParams, DunklParams{}, SpectrumMode::PaperVerbatim, chain), NoBoundState);
    CHECK_NOTHROW(make_radial_state(0, kParams, DunklParams{}, SpectrumMode::SelfConsistent));
}

TEST_CASE("boundary behaviour and exponents") {
    const RadialState st = make_radial_state(0, kParams, {1.5, 0});
    CHECK(radial_unnormalized(st, 0.0) == 0.0);
    CHECK(radial_unnormalized(st, 500.0) == 0.0);
    CHECK(radial_unnormalized(st, 1.0) > 0.0);

    // Near the origin |R| ~ (1 - s)^exp_1ms.
    const double r1 = 1e-4 / st.lambda, r2 = 1e-5 / st.lambda;
    const double slope0 = std::log(radial_unnormalized(st, r1) / radial_unnormalized(st, r2)) /
                          std::log(-std::expm1(-st.lambda * r1) / -std::expm1(-st.lambda * r2));
    CHECK(slope0 == doctest::Approx(st.exp_1ms).epsilon(0.01));
    // The tail is controlled by s^exp_s.
    const double t1 = 30.0, t2 = 40.0;
    const double slope_inf = std::log(radial_unnormalized(st, t1) / radial_unnormalized(st, t2)) /
                             (st.lambda * (t2 - t1));
    CHECK(slope_inf == doctest::Approx(st.exp_s).epsilon(0.01));
}

TEST_CASE("normalization") {
    const QuadratureSpec quad = QuadratureSpec::standard(kParams);
    CHECK(quad.r_max == doctest::Approx(81.0));
    const RadialState st = paper_state(0, 0.0);
    CHECK(std::isfinite(st.norm));
    CHECK(st.norm > 0.0);

    const double w = natural_weight_exponent(0.0);
    CHECK(norm_integral(st, quad, w) == doctest::Approx(1.0).epsilon(1e-12));
    const RadialState again = normalize(st, quad, w);
    CHECK(std::abs(again.norm / st.norm - 1.0) < 1e-10);

    QuadratureSpec fine = quad;
    fine.node_count *= 2;
    CHECK(std::abs(normalize(st, fine, w).norm / st.norm - 1.0) < 1e-8);

    QuadratureSpec simpson = quad;
    simpson.scheme = QuadratureScheme::AdaptiveSimpson;
    for (double mu : {0.0, 1.5, 3.0})
        for (int n = 0; n <= 2; ++n) {
            const RadialState s = paper_state(n, mu);
            REQUIRE(std::abs(norm_integral(s, simpson, natural_weight_exponent(mu)) - 1.0) < 1e-8);
        }

    // Unweighted normalization stands on its own.
    const RadialState u = normalize(make_radial_state(1, kParams, {0.5, 1}), quad, 0.0);
    CHECK(norm_integral(u, simpson, 0.0) == doctest::Approx(1.0).epsilon(1e-8));

    RadialState flat = st;
    flat.exp_s = 0.0;
    CHECK_THROWS_AS(norm_integral(flat, quad, w), DomainError);
    QuadratureSpec tiny = quad;
    tiny.node_count = 32;
    CHECK_THROWS_AS(norm_integral(st, tiny, w), DomainError);
}

TEST_CASE("node counts follow n") {
    const QuadratureSpec quad = QuadratureSpec::standard(kParams);
    for (double mu : {0.0, 0.5, 1.0})
        for (int ell = 0; ell <= 2; ++ell)
            for (int n = 0; n <= 2; ++n) REQUIRE(node_count(paper_state(n, mu, ell), quad) == n);

    // Same as the sign changes of the Jacobi factor in s on (0, 1).
    for (int n = 0; n <= 5; ++n) {
        const RadialState st = make_radial_state(n, kParams, DunklParams{});
        int roots = 0;
        double prev = jacobi(n, st.jacobi_a, st.jacobi_b, 1.0 - 2.0 * 1e-9);
        for (int i = 1; i <= 20000; ++i) {
            const double s = (i + 0.5) / 20001.0;
            const double v = jacobi(n, st.jacobi_a, st.jacobi_b, 1.0 - 2.0 * s);
            if ((v > 0.0) != (prev > 0.0)) ++roots;
            prev = v;
        }
        CHECK(roots == n);
        CHECK(node_count(st, quad) == roots);
    }
}

TEST_CASE("density trends in mu") {
    const QuadratureSpec quad = QuadratureSpec::standard(kParams);
    for (bool weighted : {true, false}) {
        double prev_peak = 0.0;
        double prev_origin = std::numeric_limits<double>::infinity();
        for (double mu : {0.0, 1.5, 3.0}) {
            const RadialState st = normalize(make_radial_state(0, kParams, {mu, 0}), quad,
                                             weighted ? natural_weight_exponent(mu) : 0.0);
            const double peak = density_peak(st, weighted, quad);
            const double origin = probability_density(st, 1e-3 * kParams.r_eq, weighted);
            CHECK(peak > prev_peak);
            CHECK(origin < prev_origin);
            prev_peak = peak;
            prev_origin = origin;
        }
    }
    // Unweighted peak of s^a (1-s)^b sits at ln(1 + b/a)/lambda.
    const RadialState st = paper_state(0, 0.0);
    CHECK(density_peak(st, false, quad) ==
          doctest::Approx(std::log1p(st.exp_1ms / st.exp_s) / st.lambda).epsilon(1e-6));
}

TEST_CASE("weighted density integrates to one") {
    const RadialState st = paper_state(1, 1.5);
    const double total = integrate_adaptive_simpson([&](double r) { return probability_density(st, r, true); }, 0.0,
                                                    QuadratureSpec::standard(kParams).r_max, 1e-13);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
}
