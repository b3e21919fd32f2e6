#include "dunkl/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "dunkl/csv.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/jacobi.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/wavefunction.hpp"

namespace dunkl {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) { return csv_number(v); }

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return !v.empty();
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return !v.empty();
}

CriterionResult alpha9_constancy(const ValidationConfig& cfg) {
    CriterionResult out{1, "alpha9 constancy: |alpha9 - (1/4 + beta)| < 1e-12 over 1000 draws", false, {}};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> depth(0.5, 50.0), screening(0.1, 2.0), mass(0.5, 5.0), mu(-0.49, 3.0),
        eps(-200.0, 200.0);
    std::uniform_int_distribution<int> ell(0, 5);

    double worst_stated = 0.0;
    double worst_energy_dependence = 0.0;
    double chain_minus_beta = 0.0;
    for (int i = 0; i < 1000; ++i) {
        MolecularParams p;
        p.depth = depth(rng);
        p.screening = screening(rng);
        p.mass = mass(rng);
        const DunklParams d{mu(rng), ell(rng), cfg.convention};
        const double e = eps(rng);
        const MappedCoefficients mc = map_to_hypergeometric(p, d, cfg.nu.pekeris, cfg.nu.coefficients);
        const AlphaChain a = alpha_chain(mc, e);
        const AlphaChain a0 = alpha_chain(mc, 0.0);
        worst_stated = std::max(worst_stated, std::abs(a.alpha9 - stated_alpha9(mc.beta)));
        worst_energy_dependence = std::max(worst_energy_dependence, std::abs(a.alpha9 - a0.alpha9));
        chain_minus_beta = std::max(chain_minus_beta, std::abs(a.alpha9 - (0.25 - mc.beta)));
    }
    out.passed = worst_stated < 1e-12;
    std::ostringstream ss;
    ss << "max |alpha9 - (1/4 + beta)| = " << fmt(worst_stated)
       << "; max |alpha9(eps) - alpha9(0)| = " << fmt(worst_energy_dependence)
       << "; max |alpha9 - (1/4 - beta)| = " << fmt(chain_minus_beta);
    out.detail = ss.str();
    return out;
}

CriterionResult mu_zero_limit(const ValidationConfig& cfg) {
    CriterionResult out{2, "mu -> 0 reduction: closed form continuous at mu = 0, conventions coincide", true, {}};
    double worst = 0.0;
    double worst_convention = 0.0;
    for (int ell = 0; ell <= 3; ++ell) {
        const DunklParams zero{0.0, ell, cfg.convention};
        const DunklParams tiny{1e-12, ell, cfg.convention};
        DunklParams radial = zero, results = zero;
        radial.convention = CentrifugalConvention::RadialEquation;
        results.convention = CentrifugalConvention::ResultsSection;
        worst_convention =
            std::max(worst_convention, std::abs(centrifugal_eigenvalue(radial) - centrifugal_eigenvalue(results)));
        for (int n = 0; n <= 5; ++n) {
            const double e0 = energy_closed_form(n, cfg.params, zero, cfg.nu.pekeris).energy;
            const double e1 = energy_closed_form(n, cfg.params, tiny, cfg.nu.pekeris).energy;
            worst = std::max(worst, rel_diff(e1, e0));
            const double er = energy_closed_form(n, cfg.params, radial, cfg.nu.pekeris).energy;
            const double es = energy_closed_form(n, cfg.params, results, cfg.nu.pekeris).energy;
            worst_convention = std::max(worst_convention, rel_diff(er, es));
        }
    }
    out.passed = worst < 1e-8 && worst_convention == 0.0;
    out.detail = "max relative jump " + fmt(worst) + "; max convention difference " + fmt(worst_convention);
    return out;
}

std::vector<double> mode_sweep(const ValidationConfig& cfg, int n, SpectrumMode mode, OracleVariant variant) {
    std::vector<double> energies;
    for (double mu : trend_mu_values()) {
        const DunklParams d{mu, 0, cfg.convention};
        try {
            switch (mode) {
                case SpectrumMode::PaperVerbatim:
                    energies.push_back(energy_closed_form(n, cfg.params, d, cfg.nu.pekeris).energy);
                    break;
                case SpectrumMode::SelfConsistent:
                    energies.push_back(energy_self_consistent(n, cfg.params, d, cfg.nu).energy);
                    break;
                case SpectrumMode::Oracle: {
                    const OracleProblem prob{cfg.params, d, variant, cfg.oracle_grid, cfg.nu.pekeris,
                                             OraclePotential::DengFan};
                    energies.push_back(fd_eigensolve(prob, n + 1).eigenvalues[n]);
                    break;
                }
            }
        } catch (const std::exception&) {
            energies.push_back(kNaN);
        }
    }
    return energies;
}

CriterionResult mu_trend(const ValidationConfig& cfg) {
    CriterionResult out{3, "energy trend: E_n0 strictly increasing in mu on [0, 3] in every mode", true, {}};
    struct Mode {
        const char* name;
        SpectrumMode mode;
        OracleVariant variant;
    };
    const Mode modes[] = {{"paper", SpectrumMode::PaperVerbatim, OracleVariant::ExactCentrifugal},
                          {"self-consistent", SpectrumMode::SelfConsistent, OracleVariant::ExactCentrifugal},
                          {"oracle-exact", SpectrumMode::Oracle, OracleVariant::ExactCentrifugal},
                          {"oracle-pekeris", SpectrumMode::Oracle, OracleVariant::PekerisMapped}};
    std::ostringstream ss;
    for (const Mode& m : modes) {
        for (int n = 0; n <= 2; ++n) {
            const std::vector<double> e = mode_sweep(cfg, n, m.mode, m.variant);
            const bool ok = strictly_increasing(e);
            if (!ok) {
                out.passed = false;
                ss << m.name << " n=" << n << " not strictly increasing; ";
            }
        }
    }
    out.detail = out.passed ? "all 12 (mode, n) sweeps strictly increasing" : ss.str();
    return out;
}

CriterionResult density_trend(const ValidationConfig& cfg) {
    CriterionResult out{4, "density trend: ground-state peak moves out and origin density drops as mu grows", false, {}};
    const double mus[] = {0.0, 1.5, 3.0};
    std::vector<double> peaks, origin;
    const QuadratureSpec quad = QuadratureSpec::standard(cfg.params);
    try {
        for (double mu : mus) {
            const DunklParams d{mu, 0, cfg.convention};
            RadialState st = make_radial_state(0, cfg.params, d, SpectrumMode::PaperVerbatim, cfg.nu);
            st = normalize(st, quad, cfg.weighted ? natural_weight_exponent(mu) : 0.0);
            peaks.push_back(density_peak(st, cfg.weighted, quad));
            origin.push_back(probability_density(st, 1e-3 * cfg.params.r_eq, cfg.weighted));
        }
    } catch (const std::exception& e) {
        out.detail = e.what();
        return out;
    }
    out.passed = strictly_increasing(peaks) && strictly_decreasing(origin);
    std::ostringstream ss;
    ss << "peaks " << fmt(peaks[0]) << ", " << fmt(peaks[1]) << ", " << fmt(peaks[2]) << "; density at 1e-3 r_e "
       << fmt(origin[0]) << ", " << fmt(origin[1]) << ", " << fmt(origin[2]);
    out.detail = ss.str();
    return out;
}

CriterionResult consistency(const DiscrepancyReport& report) {
    CriterionResult out{5, "self-consistent vs oracle(pekeris) within 1e-6 relative", true, {}};
    double worst = 0.0;
    int failures = 0;
    for (const ModeEnergies& e : report.energies) {
        const double gap = rel_diff(e.energy[int(ComparedMode::SelfConsistent)],
                                    e.energy[int(ComparedMode::OraclePekeris)]);
        if (!(gap < 1e-6)) {
            ++failures;
            out.passed = false;
        }
        worst = std::isnan(gap) ? worst : std::max(worst, gap);
    }
    out.detail = std::to_string(failures) + " of " + std::to_string(report.energies.size()) +
                 " points outside tolerance; largest finite relative gap " + fmt(worst);
    return out;
}

CriterionResult zero_point_agreement(const ValidationConfig& cfg) {
    CriterionResult out{6, "paper vs self-consistent at mu = l = 0 within 1e-9 relative", true, {}};
    std::ostringstream ss;
    const DunklParams d{0.0, 0, cfg.convention};
    for (int n = 0; n <= 2; ++n) {
        const double paper = energy_closed_form(n, cfg.params, d, cfg.nu.pekeris).energy;
        double sc = kNaN;
        try {
            sc = energy_self_consistent(n, cfg.params, d, cfg.nu).energy;
        } catch (const std::exception&) {
        }
        const double gap = rel_diff(paper, sc);
        if (!(gap < 1e-9)) out.passed = false;
        ss << "n=" << n << ": paper " << fmt(paper) << ", self-consistent " << fmt(sc) << "; ";
    }
    out.detail = ss.str();
    return out;
}

CriterionResult oracle_sanity(const ValidationConfig& cfg, const std::vector<ConvergenceRow>& convergence) {
    CriterionResult out{7, "oracle sanity: box spectrum within 1e-6, convergence order in [1.8, 2.2]", true, {}};
    std::ostringstream ss;
    OracleProblem box{cfg.params, DunklParams{0.5, 0, CentrifugalConvention::RadialEquation},
                      OracleVariant::ExactCentrifugal, cfg.oracle_grid, cfg.nu.pekeris, OraclePotential::Free};
    try {
        const OracleResult res = fd_eigensolve(box, 3);
        const double length = cfg.oracle_grid.r_max - cfg.oracle_grid.r_min;
        const double pi = std::numbers::pi;
        double worst = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double q = k + 1;
            const double exact = q * q * pi * pi * cfg.params.hbar * cfg.params.hbar /
                                 (2.0 * cfg.params.mass * length * length);
            worst = std::max(worst, rel_diff(res.eigenvalues[k], exact));
            if (!(res.convergence_order[k] >= 1.8 && res.convergence_order[k] <= 2.2)) out.passed = false;
        }
        if (!(worst < 1e-6)) out.passed = false;
        ss << "box max relative error " << fmt(worst) << ", orders";
        for (int k = 0; k < 3; ++k) ss << " " << fmt(res.convergence_order[k]);
        ss << "; ";
    } catch (const std::exception& e) {
        out.passed = false;
        ss << "box solve failed: " << e.what() << "; ";
    }
    int bad = 0;
    for (const ConvergenceRow& row : convergence)
        if (!(row.order >= 1.8 && row.order <= 2.2)) ++bad;
    if (bad > 0) out.passed = false;
    ss << bad << " of " << convergence.size() << " Deng-Fan levels with order outside [1.8, 2.2]";
    out.detail = ss.str();
    return out;
}

CriterionResult wavefunction_properties(const ValidationConfig& cfg) {
    CriterionResult out{8, "wavefunctions: node count = n, unit norm within 1e-8, Jacobi orthogonality < 1e-10", true, {}};
    const QuadratureSpec quad = QuadratureSpec::standard(cfg.params);
    QuadratureSpec check = quad;
    check.scheme = QuadratureScheme::AdaptiveSimpson;
    const GaussRule rule = gauss_legendre(256);

    int states = 0, node_failures = 0, norm_failures = 0;
    double worst_norm = 0.0, worst_orth = 0.0;
    for (int ell = 0; ell <= kComparisonMaxLevel; ++ell) {
        for (double mu : comparison_mu_values()) {
            const DunklParams d{mu, ell, cfg.convention};
            for (int n = 0; n <= kComparisonMaxLevel; ++n) {
                RadialState st;
                try {
                    st = make_radial_state(n, cfg.params, d, SpectrumMode::PaperVerbatim, cfg.nu);
                } catch (const NoBoundState&) {
                    continue;
                }
                ++states;
                const double w = cfg.weighted ? natural_weight_exponent(mu) : 0.0;
                st = normalize(st, quad, w);
                if (node_count(st, quad) != n) ++node_failures;
                const double norm = norm_integral(st, check, w);
                worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
                if (!(std::abs(norm - 1.0) < 1e-8)) ++norm_failures;

                // Normalized overlaps of P_i, P_j (i != j <= 5) under this state's weight.
                const double a = st.jacobi_a, b = st.jacobi_b;
                const auto inner = [&](int i, int j) {
                    double sum = 0.0;
                    for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) {
                        const double x = rule.nodes[k];
                        sum += rule.weights[k] * std::pow(1.0 - x, a) * std::pow(1.0 + x, b) * jacobi(i, a, b, x) *
                               jacobi(j, a, b, x);
                    }
                    return sum;
                };
                for (int i = 0; i <= 5; ++i)
                    for (int j = i + 1; j <= 5; ++j)
                        worst_orth = std::max(worst_orth,
                                              std::abs(inner(i, j)) / std::sqrt(inner(i, i) * inner(j, j)));
            }
        }
    }
    out.passed = states > 0 && node_failures == 0 && norm_failures == 0 && worst_orth < 1e-10;
    std::ostringstream ss;
    ss << states << " states; " << node_failures << " node-count mismatches; max |norm - 1| " << fmt(worst_norm)
       << "; max normalized Jacobi overlap " << fmt(worst_orth);
    out.detail = ss.str();
    return out;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

CriterionResult ledger_completeness(const ValidationConfig& cfg, const DiscrepancyReport& report) {
    CriterionResult out{9, "discrepancy ledger: complete, flagged and deterministic", true, {}};
    std::ostringstream ss;
    const std::size_t points = report.energies.size();
    const std::size_t expected = 9 * comparison_mu_values().size();
    if (points != expected || report.rows.size() != 6 * points) {
        out.passed = false;
        ss << "expected " << expected << " points with 6 pairs each, got " << points << " / " << report.rows.size()
           << " rows; ";
    }
    int unexplained = 0, wrong_flags = 0, paper_oracle_rows = 0;
    for (const DiscrepancyRow& row : report.rows) {
        const bool numeric = std::isfinite(row.abs_gap);
        const bool flagged = row.flag_a != StateFlag::Bound || row.flag_b != StateFlag::Bound;
        if (!numeric && !flagged) ++unexplained;
        if (row.mode_a == ComparedMode::Paper && row.mode_b == ComparedMode::OracleExact) {
            ++paper_oracle_rows;
            if (!numeric) ++unexplained;
            const bool outside = !in_bound_window(row.energy_a, cfg.params);
            if (outside != (row.flag_a == StateFlag::Unbound)) ++wrong_flags;
        }
    }
    if (unexplained > 0 || wrong_flags > 0 || paper_oracle_rows != static_cast<int>(points)) out.passed = false;

    const DiscrepancyReport again = compare_modes(cfg.params, cfg.convention, kComparisonMaxLevel,
                                                  kComparisonMaxLevel, comparison_mu_values(), cfg.nu,
                                                  cfg.oracle_grid);
    bool deterministic = again.rows.size() == report.rows.size();
    for (std::size_t i = 0; deterministic && i < report.rows.size(); ++i) {
        const DiscrepancyRow& x = report.rows[i];
        const DiscrepancyRow& y = again.rows[i];
        deterministic = same_bits(x.energy_a, y.energy_a) && same_bits(x.energy_b, y.energy_b) &&
                        x.flag_a == y.flag_a && x.flag_b == y.flag_b;
    }
    if (!deterministic) out.passed = false;
    ss << report.rows.size() << " rows; " << unexplained << " without gap or flag; " << wrong_flags
       << " paper rows with an inconsistent window flag; rerun " << (deterministic ? "bit-identical" : "differs");
    out.detail = ss.str();
    return out;
}

std::vector<ConvergenceRow> convergence_table(const ValidationConfig& cfg) {
    std::vector<ConvergenceRow> rows;
    const OracleVariant variants[] = {OracleVariant::ExactCentrifugal, OracleVariant::PekerisMapped};
    for (int ell = 0; ell <= kComparisonMaxLevel; ++ell) {
        for (double mu : comparison_mu_values()) {
            for (OracleVariant v : variants) {
                OracleProblem prob{cfg.params, DunklParams{mu, ell, cfg.convention}, v, cfg.oracle_grid,
                                   cfg.nu.pekeris, OraclePotential::DengFan};
                const int count = kComparisonMaxLevel + 1;
                try {
                    const OracleResult res = fd_eigensolve(prob, count);
                    OracleProblem shifted = prob;
                    shifted.grid.r_min *= 2.0;
                    std::vector<double> moved(count, kNaN);
                    try {
                        moved = fd_eigensolve(shifted, count).eigenvalues;
                    } catch (const std::exception&) {
                    }
                    for (int n = 0; n < count; ++n)
                        rows.push_back({n, ell, mu, v, res.grid_spacings[0], res.raw[0][n], res.raw[1][n],
                                        res.raw[2][n], res.eigenvalues[n], res.convergence_order[n],
                                        moved[n] - res.eigenvalues[n], "ok"});
                } catch (const AccuracyError& e) {
                    for (int n = 0; n < count; ++n)
                        rows.push_back({n, ell, mu, v, kNaN, kNaN, kNaN, kNaN, kNaN, e.observed_order(), kNaN,
                                        "accuracy-error"});
                }
            }
        }
    }
    return rows;
}

std::vector<PekerisErrorRow> pekeris_table(const DiscrepancyReport& report) {
    std::vector<PekerisErrorRow> rows;
    for (const ModeEnergies& e : report.energies) {
        const double exact = e.energy[int(ComparedMode::OracleExact)];
        const double approx = e.energy[int(ComparedMode::OraclePekeris)];
        rows.push_back({e.n, e.ell, e.mu, exact, approx, std::abs(approx - exact), rel_diff(approx, exact)});
    }
    return rows;
}

bool selected(const ValidationConfig& cfg, int id) {
    return cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), id) != cfg.only.end();
}

}  // namespace

ValidationConfig ValidationConfig::standard(const MolecularParams& p) {
    ValidationConfig cfg;
    cfg.params = p;
    cfg.oracle_grid = default_oracle_grid(p);
    return cfg;
}

bool ValidationReport::passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

std::vector<double> comparison_mu_values() { return {0.0, 0.5, 1.0}; }

std::vector<double> trend_mu_values() {
    std::vector<double> mus;
    for (int i = 0; i <= 12; ++i) mus.push_back(0.25 * i);
    return mus;
}

ValidationReport run_validation(const ValidationConfig& cfg) {
    cfg.params.validate();
    ValidationReport report;
    report.comparison = compare_modes(cfg.params, cfg.convention, kComparisonMaxLevel, kComparisonMaxLevel,
                                      comparison_mu_values(), cfg.nu, cfg.oracle_grid);
    report.pekeris_errors = pekeris_table(report.comparison);
    report.convergence = convergence_table(cfg);

    using Check = std::function<CriterionResult()>;
    const std::pair<int, Check> checks[] = {
        {1, [&] { return alpha9_constancy(cfg); }},
        {2, [&] { return mu_zero_limit(cfg); }},
        {3, [&] { return mu_trend(cfg); }},
        {4, [&] { return density_trend(cfg); }},
        {5, [&] { return consistency(report.comparison); }},
        {6, [&] { return zero_point_agreement(cfg); }},
        {7, [&] { return oracle_sanity(cfg, report.convergence); }},
        {8, [&] { return wavefunction_properties(cfg); }},
        {9, [&] { return ledger_completeness(cfg, report.comparison); }},
    };
    for (const auto& [id, check] : checks)
        if (selected(cfg, id)) report.criteria.push_back(check());
    return report;
}

std::string format_report(const ValidationReport& report) {
    std::ostringstream ss;
    ss << "Validation report\n=================\n\n";
    for (const CriterionResult& c : report.criteria)
        ss << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << "\n       " << c.detail << "\n";

    ss << "\nMode comparison (hartree)\n";
    ss << "  n  l   mu        paper          self-consistent   oracle-exact      oracle-pekeris\n";
    for (const ModeEnergies& e : report.comparison.energies) {
        char line[256];
        std::snprintf(line, sizeof line, "  %d  %d  %4.2f  %16s %-8s %14s %-16s %14s %14s\n", e.n, e.ell, e.mu,
                      csv_number(e.energy[0]).c_str(), std::string(to_string(e.flag[0])).c_str(),
                      csv_number(e.energy[1]).c_str(), std::string(to_string(e.flag[1])).c_str(),
                      csv_number(e.energy[2]).c_str(), csv_number(e.energy[3]).c_str());
        ss << line;
    }

    double worst_pekeris = 0.0;
    for (const PekerisErrorRow& row : report.pekeris_errors)
        if (std::isfinite(row.rel_error)) worst_pekeris = std::max(worst_pekeris, row.rel_error);
    ss << "\nLargest relative Pekeris error on the comparison grid: " << csv_number(worst_pekeris) << "\n";

    int failed = 0;
    for (const CriterionResult& c : report.criteria) failed += c.passed ? 0 : 1;
    ss << "\nSummary: " << report.criteria.size() - failed << " passed, " << failed << " failed\n";
    return ss.str();
}

void write_validation(const ValidationReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    {
        CsvWriter csv(dir / "comparison.csv");
        csv.header({"n", "ell", "mu", "mode_a", "mode_b", "E_a", "E_b", "abs_gap", "rel_gap", "flag_a", "flag_b"});
        for (const DiscrepancyRow& r : report.comparison.rows)
            csv.row({std::to_string(r.n), std::to_string(r.ell), fmt(r.mu), std::string(to_string(r.mode_a)),
                     std::string(to_string(r.mode_b)), fmt(r.energy_a), fmt(r.energy_b), fmt(r.abs_gap),
                     fmt(r.rel_gap), std::string(to_string(r.flag_a)), std::string(to_string(r.flag_b))});
        csv.close();
    }
    {
        CsvWriter csv(dir / "energies.csv");
        csv.header({"n", "ell", "mu", "E_paper", "flag_paper", "E_self_consistent", "flag_self_consistent",
                    "E_oracle_exact", "flag_oracle_exact", "E_oracle_pekeris", "flag_oracle_pekeris"});
        for (const ModeEnergies& e : report.comparison.energies) {
            std::vector<std::string> cells{std::to_string(e.n), std::to_string(e.ell), fmt(e.mu)};
            for (int k = 0; k < 4; ++k) {
                cells.push_back(fmt(e.energy[k]));
                cells.emplace_back(to_string(e.flag[k]));
            }
            csv.row(cells);
        }
        csv.close();
    }
    {
        CsvWriter csv(dir / "pekeris_error.csv");
        csv.header({"n", "ell", "mu", "E_exact", "E_pekeris", "abs_error", "rel_error"});
        for (const PekerisErrorRow& r : report.pekeris_errors)
            csv.row({std::to_string(r.n), std::to_string(r.ell), fmt(r.mu), fmt(r.exact), fmt(r.pekeris),
                     fmt(r.abs_error), fmt(r.rel_error)});
        csv.close();
    }
    {
        CsvWriter csv(dir / "convergence.csv");
        csv.header({"n", "ell", "mu", "variant", "h", "E_h", "E_h2", "E_h4", "E_richardson", "order",
                    "r_min_doubled_shift", "status"});
        for (const ConvergenceRow& r : report.convergence)
            csv.row({std::to_string(r.n), std::to_string(r.ell), fmt(r.mu), std::string(to_string(r.variant)),
                     fmt(r.h), fmt(r.e_h), fmt(r.e_h2), fmt(r.e_h4), fmt(r.richardson), fmt(r.order),
                     fmt(r.r_min_shift), r.status});
        csv.close();
    }
    std::ofstream txt(dir / "report.txt", std::ios::binary | std::ios::trunc);
    if (!txt) throw IoError("cannot open " + (dir / "report.txt").string());
    txt << format_report(report);
    if (!txt) throw IoError("failed writing report.txt");
}

}  // namespace dunkl
