#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>

#include "dunkl/csv.hpp"
#include "dunkl/validation.hpp"
#include "dunkl/wavefunction.hpp"

namespace dunkl::cli {

void RunConfig::validate() const {
    params.validate();
    dunkl.validate();
    if (n < 0) throw DomainError("--n must be non-negative", n);
    if (n_max < 0) throw DomainError("--n-max must be non-negative", n_max);
    if (ell_max < 0) throw DomainError("--ell-max must be non-negative", ell_max);
    if (r_min < 0.0) throw DomainError("--r-min must be positive", r_min);
    if (r_max < 0.0) throw DomainError("--r-max must be positive", r_max);
    if (points < 0) throw DomainError("--points must be positive", points);
    if (morse_range < 0.0) throw DomainError("--morse-a must be positive", morse_range);
    if (!(mu_step > 0.0)) throw DomainError("--mu-step must be positive", mu_step);
    if (!(mu_max > mu_min)) throw DomainError("--mu-max must exceed --mu-min", mu_max);
    if (!(mu_min > -0.5)) throw DomainError("--mu-min must exceed -1/2", mu_min);
    for (double m : mus)
        if (!(m > -0.5)) throw DomainError("--mus entries must exceed -1/2", m);
    OracleProblem{params, dunkl, oracle_variant, oracle_grid, nu.pekeris, OraclePotential::DengFan}.validate();
}

namespace {

std::string label(double mu) {
    std::string s = csv_number(mu);
    std::replace(s.begin(), s.end(), '.', 'p');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
}

std::vector<double> mu_grid(const RunConfig& cfg) {
    const int steps = static_cast<int>(std::floor((cfg.mu_max - cfg.mu_min) / cfg.mu_step + 1e-9));
    std::vector<double> mus;
    for (int i = 0; i <= steps; ++i) mus.push_back(cfg.mu_min + i * cfg.mu_step);
    return mus;
}

SpectrumOptions spectrum_options(const RunConfig& cfg) { return {cfg.nu, cfg.oracle_variant, cfg.oracle_grid}; }

int cmd_potential(const RunConfig& cfg) {
    const MolecularParams& p = cfg.params;
    const double r0 = cfg.r_min > 0.0 ? cfg.r_min : 0.05 * p.r_eq;
    const double r1 = cfg.r_max > 0.0 ? cfg.r_max : 5.0 * p.r_eq;
    const int points = cfg.points > 0 ? cfg.points : 496;
    const double range = cfg.morse_range > 0.0 ? cfg.morse_range : matched_morse_range(p);
    if (!(r1 > r0) || points < 2) throw DomainError("potential grid needs r-max > r-min and two points", points);

    std::vector<double> r;
    for (int i = 0; i < points; ++i) r.push_back(r0 + (r1 - r0) * i / (points - 1));
    // The shared minimum is always tabulated.
    if (p.r_eq > r0 && p.r_eq < r1 && std::find(r.begin(), r.end(), p.r_eq) == r.end()) {
        r.push_back(p.r_eq);
        std::sort(r.begin(), r.end());
    }

    CsvWriter csv(cfg.out.empty() ? "potential.csv" : cfg.out);
    csv.header({"r", "V_deng_fan", "V_morse"});
    for (double x : r) csv.row({csv_number(x), csv_number(deng_fan_potential(x, p)), csv_number(morse_potential(x, p, range))});
    csv.close();
    return kSuccess;
}

int cmd_spectrum(const RunConfig& cfg) {
    const SpectrumTable table =
        spectrum(cfg.params, cfg.dunkl, cfg.n_max, cfg.ell_max, {cfg.dunkl.mu}, cfg.modes, spectrum_options(cfg));
    CsvWriter csv(cfg.out.empty() ? "spectrum.csv" : cfg.out);
    csv.header({"n", "ell", "mu", "mode", "eps", "E", "flag"});
    for (const SpectrumRow& row : table)
        csv.row({std::to_string(row.n), std::to_string(row.ell), csv_number(row.mu), std::string(to_string(row.mode)),
                 csv_number(row.eps), csv_number(row.energy), std::string(to_string(row.flag))});
    csv.close();
    return kSuccess;
}

int cmd_sweep_mu(const RunConfig& cfg) {
    const std::vector<double> mus = mu_grid(cfg);
    if (mus.size() < 2) throw DomainError("mu sweep needs at least two points", static_cast<double>(mus.size()));
    if (cfg.modes.size() != 1) throw DomainError("sweep-mu takes a single --mode", static_cast<double>(cfg.modes.size()));

    DunklParams d = cfg.dunkl;
    const SpectrumTable table =
        spectrum(cfg.params, d, cfg.n_max, d.ell, mus, cfg.modes, spectrum_options(cfg));

    std::vector<std::string> header{"mu"};
    for (int n = 0; n <= cfg.n_max; ++n) header.push_back("E_" + std::to_string(n) + std::to_string(d.ell));
    CsvWriter csv(cfg.out.empty() ? "sweep_mu.csv" : cfg.out);
    csv.header(header);
    for (std::size_t m = 0; m < mus.size(); ++m) {
        std::vector<std::string> cells{csv_number(mus[m])};
        for (int n = 0; n <= cfg.n_max; ++n) {
            const auto it = std::find_if(table.begin(), table.end(), [&](const SpectrumRow& r) {
                return r.ell == d.ell && r.n == n && r.mu == mus[m];
            });
            cells.push_back(csv_number(it == table.end() ? std::nan("") : it->energy));
        }
        csv.row(cells);
    }
    csv.close();
    return kSuccess;
}

int cmd_wavefunction(const RunConfig& cfg) {
    if (cfg.modes.size() != 1 || cfg.modes.front() == SpectrumMode::Oracle)
        throw DomainError("wavefunction needs --mode paper or self-consistent", 0.0);

    const QuadratureSpec quad = QuadratureSpec::standard(cfg.params);
    std::vector<RadialState> states;
    for (double mu : cfg.mus) {
        DunklParams d = cfg.dunkl;
        d.mu = mu;
        RadialState st = make_radial_state(cfg.n, cfg.params, d, cfg.modes.front(), cfg.nu);
        states.push_back(normalize(st, quad, cfg.weighted ? natural_weight_exponent(mu) : 0.0));
    }

    double r_end = cfg.r_max;
    if (r_end <= 0.0) {
        // Smallest r past every peak where each density is below 1e-14 of its maximum.
        for (const RadialState& st : states) {
            const double peak_r = density_peak(st, cfg.weighted, quad);
            const double peak = probability_density(st, peak_r, cfg.weighted);
            double r = peak_r;
            while (probability_density(st, r, cfg.weighted) > 1e-14 * peak && r < quad.r_max) r += 0.01 * cfg.params.r_eq;
            r_end = std::max(r_end, r);
        }
    }
    const int points = cfg.points > 0 ? cfg.points : 4001;

    std::vector<std::string> header{"r"};
    for (double mu : cfg.mus) header.push_back("density_mu" + label(mu));
    CsvWriter csv(cfg.out.empty() ? "wavefunction.csv" : cfg.out);
    csv.header(header);
    for (int i = 0; i < points; ++i) {
        // r = 0 is skipped; every density vanishes there.
        const double r = r_end * (i + 1) / points;
        std::vector<std::string> cells{csv_number(r)};
        for (const RadialState& st : states) cells.push_back(csv_number(probability_density(st, r, cfg.weighted)));
        csv.row(cells);
    }
    csv.close();
    return kSuccess;
}

int cmd_validate(const RunConfig& cfg) {
    ValidationConfig vc = ValidationConfig::standard(cfg.params);
    vc.convention = cfg.dunkl.convention;
    vc.nu = cfg.nu;
    vc.oracle_grid = cfg.oracle_grid;
    vc.weighted = cfg.weighted;
    vc.only = cfg.criteria;
    const ValidationReport report = run_validation(vc);
    write_validation(report, cfg.out.empty() ? "validation" : cfg.out);
    std::cout << format_report(report);
    for (const CriterionResult& c : report.criteria)
        if (!c.passed) std::cerr << "criterion " << c.id << " failed: " << c.name << "\n";
    return report.passed() ? kSuccess : kValidationFailure;
}

std::vector<SpectrumMode> parse_modes(const std::string& mode) {
    if (mode == "paper") return {SpectrumMode::PaperVerbatim};
    if (mode == "self-consistent") return {SpectrumMode::SelfConsistent};
    if (mode == "oracle") return {SpectrumMode::Oracle};
    if (mode == "all") return {SpectrumMode::PaperVerbatim, SpectrumMode::SelfConsistent, SpectrumMode::Oracle};
    throw CLI::ValidationError("--mode", "expected paper, self-consistent, oracle or all");
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Dunkl-deformed radial Schroedinger equation with a Deng-Fan-form well"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_config("--config", "", "flat key = value file; command-line flags take precedence");

    RunConfig cfg;
    cfg.oracle_grid = default_oracle_grid(cfg.params);
    std::string mode = "paper";
    std::string convention = "radial-eq";
    std::string coefficients = "nu";
    std::string alpha9 = "stated";
    std::string variant = "exact";
    double oracle_r_min = 0.0, oracle_r_max = 0.0;
    int oracle_points = 0;
    std::string out;

    app.add_option("--de", cfg.params.depth, "dissociation energy D_e (hartree)");
    app.add_option("--lambda", cfg.params.screening, "screening parameter lambda (1/bohr)");
    app.add_option("--re", cfg.params.r_eq, "equilibrium distance r_e (bohr)");
    app.add_option("--mass", cfg.params.mass, "reduced mass (electron masses)");
    app.add_option("--mu", cfg.dunkl.mu, "Dunkl parameter");
    app.add_option("--ell", cfg.dunkl.ell, "orbital quantum number");
    app.add_option("--n", cfg.n, "radial quantum number (wavefunction)");
    app.add_option("--n-max", cfg.n_max, "highest radial quantum number");
    app.add_option("--ell-max", cfg.ell_max, "highest orbital quantum number (spectrum)");
    app.add_option("--mode", mode, "paper | self-consistent | oracle | all");
    app.add_option("--convention", convention, "radial-eq | results-sec");
    app.add_option("--coefficients", coefficients, "nu | mapped-ode");
    app.add_option("--alpha9", alpha9, "stated | chain");
    app.add_option("--oracle-variant", variant, "exact | pekeris");
    app.add_option("--oracle-r-min", oracle_r_min, "oracle inner boundary (bohr)");
    app.add_option("--oracle-r-max", oracle_r_max, "oracle outer boundary (bohr)");
    app.add_option("--oracle-points", oracle_points, "interior nodes of the coarsest oracle grid");
    app.add_flag("--weighted,!--unweighted", cfg.weighted, "densities carry the r^(2mu+1) measure");
    app.add_option("--r-min", cfg.r_min, "first abscissa (potential)");
    app.add_option("--r-max", cfg.r_max, "last abscissa (potential, wavefunction)");
    app.add_option("--points", cfg.points, "number of abscissae (potential, wavefunction)");
    app.add_option("--morse-a", cfg.morse_range, "Morse range parameter; default 1/r_e");
    app.add_option("--mu-min", cfg.mu_min, "sweep start");
    app.add_option("--mu-max", cfg.mu_max, "sweep end");
    app.add_option("--mu-step", cfg.mu_step, "sweep step");
    app.add_option("--mus", cfg.mus, "Dunkl parameters for the wavefunction columns")->delimiter(',');
    app.add_option("--criteria", cfg.criteria, "validate only these criterion ids")->delimiter(',');
    app.add_option("--out", out, "output file (directory for validate)");

    std::map<std::string, int (*)(const RunConfig&)> commands{
        {"potential", cmd_potential},       {"spectrum", cmd_spectrum}, {"sweep-mu", cmd_sweep_mu},
        {"wavefunction", cmd_wavefunction}, {"validate", cmd_validate},
    };
    const std::map<std::string, std::string> help{
        {"potential", "Deng-Fan-form and Morse curves"},
        {"spectrum", "energy levels per mode"},
        {"sweep-mu", "E_n vs Dunkl parameter"},
        {"wavefunction", "ground-state radial densities"},
        {"validate", "mode comparison and acceptance checks"},
    };
    for (const auto& [name, fn] : commands) app.add_subcommand(name, help.at(name));

    try {
        app.parse(argc, argv);
        cfg.modes = parse_modes(mode);
        if (convention == "radial-eq")
            cfg.dunkl.convention = CentrifugalConvention::RadialEquation;
        else if (convention == "results-sec")
            cfg.dunkl.convention = CentrifugalConvention::ResultsSection;
        else
            throw CLI::ValidationError("--convention", "expected radial-eq or results-sec");
        if (coefficients == "nu")
            cfg.nu.coefficients = CoefficientSet::NuConstants;
        else if (coefficients == "mapped-ode")
            cfg.nu.coefficients = CoefficientSet::MappedOde;
        else
            throw CLI::ValidationError("--coefficients", "expected nu or mapped-ode");
        if (alpha9 == "stated")
            cfg.nu.alpha9 = Alpha9Source::Stated;
        else if (alpha9 == "chain")
            cfg.nu.alpha9 = Alpha9Source::Chain;
        else
            throw CLI::ValidationError("--alpha9", "expected stated or chain");
        if (variant == "exact")
            cfg.oracle_variant = OracleVariant::ExactCentrifugal;
        else if (variant == "pekeris")
            cfg.oracle_variant = OracleVariant::PekerisMapped;
        else
            throw CLI::ValidationError("--oracle-variant", "expected exact or pekeris");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kConfigError;
    }

    cfg.oracle_grid = default_oracle_grid(cfg.params);
    if (oracle_r_min > 0.0) cfg.oracle_grid.r_min = oracle_r_min;
    if (oracle_r_max > 0.0) cfg.oracle_grid.r_max = oracle_r_max;
    if (oracle_points > 0) cfg.oracle_grid.points = oracle_points;
    cfg.out = out;

    try {
        cfg.validate();
    } catch (const DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return commands.at(name)(cfg);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const NoBoundState& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const DomainError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}

}  // namespace dunkl::cli
