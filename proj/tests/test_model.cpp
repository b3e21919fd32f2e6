#include <doctest.h>

#include <random>

#include "dunkl/model.hpp"

using namespace dunkl;

TEST_CASE("deng-fan potential at the minimum and limits") {
    const MolecularParams p;
    CHECK(deng_fan_potential(p.r_eq, p) == 0.0);
    CHECK(deng_fan_potential(1e9, p) == doctest::Approx(15.0).epsilon(1e-8));
    CHECK(deng_fan_potential(0.5, p) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK_THROWS_AS(deng_fan_potential(0.0, p), DomainError);
    CHECK_THROWS_AS(deng_fan_potential(-1.0, p), DomainError);
}

TEST_CASE("deng-fan potential is monotone on each side of r_e") {
    const MolecularParams p;
    const Eigen::ArrayXd left = Eigen::ArrayXd::LinSpaced(5000, 1e-3, 0.999);
    const Eigen::ArrayXd right = Eigen::ArrayXd::LinSpaced(5000, 1.001, 50.0);
    const Eigen::ArrayXd vl = deng_fan_potential(left, p);
    const Eigen::ArrayXd vr = deng_fan_potential(right, p);
    for (Eigen::Index i = 1; i < vl.size(); ++i) REQUIRE(vl[i] < vl[i - 1]);
    for (Eigen::Index i = 1; i < vr.size(); ++i) REQUIRE(vr[i] > vr[i - 1]);
}

TEST_CASE("array and scalar potentials agree") {
    const MolecularParams p{12.0, 0.7, 1.3, 2.0, 1.0};
    const Eigen::ArrayXd r = Eigen::ArrayXd::LinSpaced(50, 0.1, 9.0);
    const Eigen::ArrayXd v = deng_fan_potential(r, p);
    const Eigen::ArrayXd m = morse_potential(r, p, 0.9);
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        CHECK(v[i] == doctest::Approx(deng_fan_potential(r[i], p)).epsilon(1e-14));
        CHECK(m[i] == doctest::Approx(morse_potential(r[i], p, 0.9)).epsilon(1e-12));
    }
}

TEST_CASE("morse potential") {
    const MolecularParams p;
    const double a = matched_morse_range(p);
    CHECK(a == 1.0);
    CHECK(morse_potential(p.r_eq, p, a) == 0.0);
    CHECK(morse_potential(200.0, p, a) == doctest::Approx(15.0).epsilon(1e-14));
    CHECK(std::isfinite(morse_potential(0.0, p, a)));
    CHECK_THROWS_AS(morse_potential(1.0, p, 0.0), DomainError);
    CHECK_THROWS_AS(morse_potential(1.0, p, -1.0), DomainError);
}

TEST_CASE("matched morse curvature equals the deng-fan curvature at r_e") {
    const MolecularParams p{15.0, 0.5, 1.7, 1.0, 1.0};
    const double a = matched_morse_range(p);
    const double h = 1e-4;
    const auto second = [&](auto f) { return (f(p.r_eq + h) - 2.0 * f(p.r_eq) + f(p.r_eq - h)) / (h * h); };
    const double df = second([&](double r) { return deng_fan_potential(r, p); });
    const double mo = second([&](double r) { return morse_potential(r, p, a); });
    const double exact = 2.0 * p.depth / (p.r_eq * p.r_eq);
    CHECK(df == doctest::Approx(exact).epsilon(1e-6));
    CHECK(mo == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("deng-fan exceeds morse near the origin") {
    const MolecularParams p;
    const double r = 1e-6 * p.r_eq;
    CHECK(deng_fan_potential(r, p) > morse_potential(r, p, matched_morse_range(p)));
}

TEST_CASE("centrifugal eigenvalue conventions") {
    const DunklParams a{0.0, 1, CentrifugalConvention::RadialEquation};
    const DunklParams b{0.0, 1, CentrifugalConvention::ResultsSection};
    CHECK(centrifugal_eigenvalue(a) == 2.0);
    CHECK(centrifugal_eigenvalue(b) == 2.0);
    CHECK(centrifugal_eigenvalue({0.5, 0, CentrifugalConvention::RadialEquation}) == 0.0);
    CHECK(centrifugal_eigenvalue({0.5, 0, CentrifugalConvention::ResultsSection}) == 0.5);
    CHECK(centrifugal_eigenvalue({2.0, 3, CentrifugalConvention::ResultsSection}) == 26.0);
}

TEST_CASE("conventions differ by exactly mu") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> mu(-0.49, 5.0);
    std::uniform_int_distribution<int> ell(0, 8);
    for (int i = 0; i < 500; ++i) {
        const double m = mu(rng);
        const int l = ell(rng);
        const double gap = centrifugal_eigenvalue({m, l, CentrifugalConvention::ResultsSection}) -
                           centrifugal_eigenvalue({m, l, CentrifugalConvention::RadialEquation});
        REQUIRE(gap == doctest::Approx(m).epsilon(1e-12).scale(1.0));
    }
    for (int l = 0; l < 6; ++l) {
        CHECK(centrifugal_eigenvalue({0.0, l, CentrifugalConvention::RadialEquation}) == l * (l + 1));
        CHECK(centrifugal_eigenvalue({0.0, l, CentrifugalConvention::ResultsSection}) == l * (l + 1));
    }
}

TEST_CASE("beta") {
    CHECK(beta(MolecularParams{}) == 120.0);
    CHECK(beta(MolecularParams{1.0, 1.0, 1.0, 1.0, 1.0}) == 2.0);
    MolecularParams zero;
    zero.depth = 0.0;
    CHECK(beta(zero) == 0.0);
}

TEST_CASE("energy scale round trip") {
    const MolecularParams p;
    CHECK(eps_to_energy(0.0, p) == 0.0);
    CHECK(eps_to_energy(1.0, p) == 0.125);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> x(-1e4, 1e4);
    for (int i = 0; i < 100; ++i) {
        const double v = x(rng);
        REQUIRE(energy_to_eps(eps_to_energy(v, p), p) == doctest::Approx(v).epsilon(1e-15));
    }
}

TEST_CASE("parameter validation") {
    MolecularParams p;
    CHECK_NOTHROW(p.validate());
    p.screening = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.mass = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    CHECK_THROWS_AS((DunklParams{-0.5, 0}.validate()), DomainError);
    CHECK_THROWS_AS((DunklParams{0.0, -1}.validate()), DomainError);
    CHECK_NOTHROW((DunklParams{-0.49, 0}.validate()));
}
