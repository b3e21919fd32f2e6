#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <numbers>
#include <random>

#include "dunkl/oracle.hpp"
#include "dunkl/tridiagonal.hpp"

using namespace dunkl;

namespace {

const MolecularParams kParams{};

// Bound levels of D_e (r_e/r - 1)^2 with the exact centrifugal barrier,
// solved as a Kratzer (Coulomb plus inverse square) problem.
double kratzer_level(int n, const MolecularParams& p, const DunklParams& d) {
    const double g = 2.0 * p.mass * p.depth * p.r_eq * p.r_eq / (p.hbar * p.hbar) + centrifugal_eigenvalue(d) +
                     d.mu * d.mu - 0.25;
    const double nu = 0.5 + std::sqrt(0.25 + g);
    const double kappa = 2.0 * p.mass * p.depth * p.r_eq / (p.hbar * p.hbar * (n + nu));
    return p.depth - p.hbar * p.hbar * kappa * kappa / (2.0 * p.mass);
}

OracleProblem problem(double mu, int ell, OracleVariant v = OracleVariant::ExactCentrifugal) {
    return {kParams, DunklParams{mu, ell}, v, default_oracle_grid(kParams), {}, OraclePotential::DengFan};
}

}  // namespace

TEST_CASE("liouville coefficient") {
    CHECK(liouville_transform_coefficient({0.5, 0}) == 0.0);
    CHECK(liouville_transform_coefficient({0.0, 0}) == -0.25);
    CHECK(liouville_transform_coefficient({1.0, 3}) == 0.75);
}

TEST_CASE("liouville transform removes the first-derivative term") {
    // R = r^{-3/2} u for mu = 1. Compare R'' + (3/r) R' with r^{-3/2}(u'' - c u / r^2).
    const double mu = 1.0;
    const double c = liouville_transform_coefficient({mu, 0});
    const auto u = [](double r) { return std::sin(r) * std::exp(-0.3 * r); };
    const auto R = [&](double r) { return std::pow(r, -(2.0 * mu + 1.0) / 2.0) * u(r); };
    double prev_err = 0.0;
    for (double h : {1e-2, 5e-3}) {
        double worst = 0.0;
        for (double r = 0.5; r < 5.0; r += 0.37) {
            const double lhs = (R(r + h) - 2.0 * R(r) + R(r - h)) / (h * h) +
                               (2.0 * mu + 1.0) / r * (R(r + h) - R(r - h)) / (2.0 * h);
            const double upp = (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
            const double rhs = std::pow(r, -(2.0 * mu + 1.0) / 2.0) * (upp - c * u(r) / (r * r));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        if (prev_err > 0.0) CHECK(std::log2(prev_err / worst) == doctest::Approx(2.0).epsilon(0.05));
        prev_err = worst;
    }
    CHECK(prev_err < 1e-3);
}

TEST_CASE("sturm bisection agrees with a dense solver") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 200;
        Eigen::VectorXd diag(n), off(n - 1);
        for (int i = 0; i < n; ++i) diag[i] = u(rng);
        for (int i = 0; i < n - 1; ++i) off[i] = u(rng);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
        const Eigen::VectorXd mine = lowest_eigenvalues(diag, off, 20);
        for (int k = 0; k < 20; ++k) REQUIRE(mine[k] == doctest::Approx(es.eigenvalues()[k]).epsilon(1e-12).scale(1));
        for (int k = 1; k < 20; ++k) CHECK(mine[k] >= mine[k - 1]);

        const Eigen::VectorXd off_sq = off.array().square().matrix();
        CHECK(sturm_count<double>(diag, off_sq, es.eigenvalues()[10] + 1e-9) == 11);

        const TridiagonalVector<long double> wide =
            lowest_eigenvalues<long double>(diag.cast<long double>(), off.cast<long double>(), 5);
        for (int k = 0; k < 5; ++k) CHECK(double(wide[k]) == doctest::Approx(mine[k]).epsilon(1e-12).scale(1));
    }
    CHECK_THROWS_AS(lowest_eigenvalues<double>(Eigen::VectorXd::Ones(3), Eigen::VectorXd::Ones(1), 1),
                    std::invalid_argument);
}

TEST_CASE("particle in a box") {
    OracleProblem box = problem(0.5, 0);
    box.potential = OraclePotential::Free;
    const OracleResult r = fd_eigensolve(box, 4);
    const double length = box.grid.r_max - box.grid.r_min;
    for (int k = 0; k < 4; ++k) {
        const double q = k + 1.0;
        const double exact = q * q * std::numbers::pi * std::numbers::pi / (2.0 * length * length);
        CHECK(r.eigenvalues[k] == doctest::Approx(exact).epsilon(1e-6));
        CHECK(r.convergence_order[k] >= 1.8);
        CHECK(r.convergence_order[k] <= 2.2);
    }
    REQUIRE(r.grid_spacings.size() == 3);
    CHECK(r.grid_spacings[1] == doctest::Approx(r.grid_spacings[0] / 2.0));
    CHECK(r.raw.size() == 3);
}

TEST_CASE("exact-centrifugal oracle reproduces the kratzer levels") {
    for (double mu : {0.0, 0.5, 1.0, 2.0})
        for (int ell : {0, 1, 2}) {
            const OracleResult r = fd_eigensolve(problem(mu, ell), 3);
            for (int n = 0; n < 3; ++n) {
                CHECK(r.eigenvalues[n] == doctest::Approx(kratzer_level(n, kParams, {mu, ell})).epsilon(1e-6));
                CHECK(r.convergence_order[n] >= 1.8);
                CHECK(r.convergence_order[n] <= 2.2);
            }
            CHECK(r.eigenvalues[0] < r.eigenvalues[1]);
            CHECK(r.eigenvalues[1] < r.eigenvalues[2]);
        }
    CHECK(kratzer_level(0, kParams, {0.5, 0}) == doctest::Approx(2.5));
}

TEST_CASE("oracle levels increase with mu") {
    double prev[3] = {-1.0, -1.0, -1.0};
    for (int i = 0; i <= 12; ++i) {
        const OracleResult r = fd_eigensolve(problem(0.25 * i, 0), 3);
        for (int n = 0; n < 3; ++n) {
            CHECK(r.eigenvalues[n] > prev[n]);
            prev[n] = r.eigenvalues[n];
        }
    }
}

TEST_CASE("pekeris variant and r_min sensitivity") {
    const OracleResult exact = fd_eigensolve(problem(0.0, 1), 2);
    const OracleResult pek = fd_eigensolve(problem(0.0, 1, OracleVariant::PekerisMapped), 2);
    for (int n = 0; n < 2; ++n) {
        CHECK(std::abs(pek.eigenvalues[n] - exact.eigenvalues[n]) < 1e-2 * exact.eigenvalues[n]);
        CHECK(pek.eigenvalues[n] != exact.eigenvalues[n]);
    }
    // At l = 0 the two variants coincide.
    const OracleResult a = fd_eigensolve(problem(0.5, 0), 1);
    const OracleResult b = fd_eigensolve(problem(0.5, 0, OracleVariant::PekerisMapped), 1);
    CHECK(a.eigenvalues[0] == doctest::Approx(b.eigenvalues[0]).epsilon(1e-12));

    OracleProblem shifted = problem(0.0, 0);
    shifted.grid.r_min *= 2.0;
    const OracleResult c = fd_eigensolve(problem(0.0, 0), 1);
    const OracleResult d = fd_eigensolve(shifted, 1);
    CHECK(std::abs(c.eigenvalues[0] - d.eigenvalues[0]) < 1e-8);
}

TEST_CASE("coarse or invalid grids are rejected") {
    OracleProblem coarse = problem(0.0, 0);
    coarse.grid.points = 2000;
    coarse.grid.r_max = 4000.0;
    CHECK_THROWS_AS(fd_eigensolve(coarse, 1), AccuracyError);

    OracleProblem bad = problem(0.0, 0);
    bad.grid.points = 1999;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = problem(0.0, 0);
    bad.grid.r_min = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = problem(0.0, 0);
    bad.grid.r_max = 0.9;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(fd_eigensolve(problem(0.0, 0), 0), std::invalid_argument);
}

TEST_CASE("compare_modes emits six pairs per grid point") {
    const DiscrepancyReport a = compare_modes(kParams, CentrifugalConvention::RadialEquation, 1, 1, {0.0, 0.5});
    const DiscrepancyReport b = compare_modes(kParams, CentrifugalConvention::RadialEquation, 1, 1, {0.0, 0.5});
    REQUIRE(a.energies.size() == 8);
    REQUIRE(a.rows.size() == 48);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const DiscrepancyRow& r = a.rows[i];
        CHECK(r.mode_a != r.mode_b);
        CHECK(std::memcmp(&r.abs_gap, &b.rows[i].abs_gap, sizeof(double)) == 0);
        if (r.mode_a == ComparedMode::Paper) CHECK(r.flag_a == StateFlag::Unbound);
        if (std::isfinite(r.energy_a) && std::isfinite(r.energy_b))
            CHECK(r.abs_gap == doctest::Approx(std::abs(r.energy_a - r.energy_b)));
    }
    for (const ModeEnergies& e : a.energies) {
        const int exact = static_cast<int>(ComparedMode::OracleExact);
        CHECK(e.energy[exact] == doctest::Approx(kratzer_level(e.n, kParams, {e.mu, e.ell})).epsilon(1e-6));
    }
}
