// Command-line front end: spectra, gap solutions, IPT corrections, oracle
// eigenvalues, side-by-side comparisons, reference-table regression, the
// partner-potential suite, vacuum diagnostics, and the field-theory tools.
// All output is deterministic: CSV with 17-significant-digit doubles, or JSON.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngas/ngas.hpp"

namespace {

using namespace ngas;
using nlohmann::json;

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
}

void write_output(const OutputOptions& opts, const io::CsvRow& header,
                  const io::CsvTable& rows) {
    std::string text;
    if (opts.format == "csv") {
        text = io::emit_csv(header, rows);
    } else {
        json array = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (size_t i = 0; i < header.size() && i < row.size(); ++i) {
                char* end = nullptr;
                const double v = std::strtod(row[i].c_str(), &end);
                if (end && *end == '\0' && end != row[i].c_str())
                    obj[header[i]] = v;
                else
                    obj[header[i]] = row[i];
            }
            array.push_back(obj);
        }
        text = array.dump(2);
        text += '\n';
    }
    if (opts.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + opts.out_path);
        out << text;
    }
}

std::string fd(double v) { return io::format_double(v); }

OscillatorKind parse_kind(const std::string& name) {
    if (name == "quartic-aho") return OscillatorKind::QuarticAho;
    if (name == "quartic-dwo") return OscillatorKind::QuarticDwo;
    if (name == "sextic-aho") return OscillatorKind::SexticAho;
    if (name == "sextic-dwo") return OscillatorKind::SexticDwo;
    if (name == "octic-aho") return OscillatorKind::OcticAho;
    throw CLI::ValidationError("--class", "unknown oscillator class " + name);
}

const std::vector<std::string> kKindNames = {"quartic-aho", "quartic-dwo", "sextic-aho",
                                             "sextic-dwo", "octic-aho"};

struct SpecFlags {
    std::string kind = "quartic-aho";
    double g = 1.0;
    double lambda = 1.0;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
    cmd->add_option("--class", flags.kind, "oscillator class")
        ->check(CLI::IsMember(kKindNames));
    cmd->add_option("--g", flags.g, "quadratic coupling (positive; sign comes from the class)");
    cmd->add_option("--lambda", flags.lambda, "anharmonic coupling");
}

OscillatorSpec make_spec(const SpecFlags& flags) {
    return OscillatorSpec(parse_kind(flags.kind), flags.g, flags.lambda);
}

int run(int argc, char** argv) {
    CLI::App app{"non-perturbative oscillator spectra, gap equations, and phi^4 tools"};
    app.require_subcommand(1);

    // ---- spectrum ----------------------------------------------------------
    SpecFlags spectrum_spec;
    int spectrum_n = 0, spectrum_nmax = -1, spectrum_order = 0;
    std::string spectrum_denom = "lo-levels";
    OutputOptions spectrum_out;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "leading-order levels with optional corrections");
    add_spec_flags(cmd_spectrum, spectrum_spec);
    cmd_spectrum->add_option("--n", spectrum_n, "level (or range start)");
    cmd_spectrum->add_option("--n-max", spectrum_nmax, "range end (inclusive)");
    cmd_spectrum->add_option("--order", spectrum_order, "correction order")
        ->check(CLI::IsMember({0, 2, 3}));
    cmd_spectrum->add_option("--ipt-denominator", spectrum_denom,
                             "unperturbed spectrum for the corrections")
        ->check(CLI::IsMember({"fixed", "lo-levels"}));
    add_output_flags(cmd_spectrum, spectrum_out);

    // ---- gap ---------------------------------------------------------------
    SpecFlags gap_spec;
    int gap_n = 0, gap_nmax = -1;
    OutputOptions gap_out;
    auto* cmd_gap = app.add_subcommand("gap", "gap-equation solutions");
    add_spec_flags(cmd_gap, gap_spec);
    cmd_gap->add_option("--n", gap_n, "level (or range start)");
    cmd_gap->add_option("--n-max", gap_nmax, "range end (inclusive)");
    add_output_flags(cmd_gap, gap_out);

    // ---- ipt ---------------------------------------------------------------
    SpecFlags ipt_spec;
    int ipt_n = 0, ipt_nmax = -1;
    std::string ipt_denom = "lo-levels";
    OutputOptions ipt_out;
    auto* cmd_ipt = app.add_subcommand("ipt", "second- and third-order corrections");
    add_spec_flags(cmd_ipt, ipt_spec);
    cmd_ipt->add_option("--n", ipt_n, "level (or range start)");
    cmd_ipt->add_option("--n-max", ipt_nmax, "range end (inclusive)");
    cmd_ipt->add_option("--ipt-denominator", ipt_denom, "denominator prescription")
        ->check(CLI::IsMember({"fixed", "lo-levels"}));
    add_output_flags(cmd_ipt, ipt_out);

    // ---- oracle ------------------------------------------------------------
    SpecFlags oracle_spec;
    int oracle_levels = 10;
    double oracle_tol = 1e-9;
    OutputOptions oracle_out;
    auto* cmd_oracle = app.add_subcommand("oracle", "truncated-basis eigenvalues");
    add_spec_flags(cmd_oracle, oracle_spec);
    cmd_oracle->add_option("--levels", oracle_levels, "number of levels");
    cmd_oracle->add_option("--tol", oracle_tol, "convergence tolerance")->check(CLI::PositiveNumber);
    add_output_flags(cmd_oracle, oracle_out);

    // ---- compare -----------------------------------------------------------
    SpecFlags compare_spec;
    int compare_levels = 5;
    double compare_tol = 1e-9;
    OutputOptions compare_out;
    auto* cmd_compare = app.add_subcommand("compare", "LO and corrected energies against the oracle");
    add_spec_flags(cmd_compare, compare_spec);
    cmd_compare->add_option("--levels", compare_levels, "number of levels");
    cmd_compare->add_option("--tol", compare_tol, "oracle tolerance")->check(CLI::PositiveNumber);
    add_output_flags(cmd_compare, compare_out);

    // ---- table -------------------------------------------------------------
    int table_id = 1;
    bool table_check = false;
    bool table_ipt = false;
    std::string table_data_dir = tables::default_data_dir();
    OutputOptions table_out;
    auto* cmd_table = app.add_subcommand("table", "reference-table regression");
    cmd_table->add_option("--id", table_id, "table 1..5")->required();
    cmd_table->add_flag("--check", table_check, "exit 1 if any gating comparison fails");
    cmd_table->add_flag("--report-ipt", table_ipt,
                        "include informational second-order columns (tables 1-2)");
    cmd_table->add_option("--data-dir", table_data_dir, "reference data directory");
    add_output_flags(cmd_table, table_out);

    // ---- susy --------------------------------------------------------------
    double susy_beta = 1.0;
    int susy_nmax = 10;
    bool susy_plot = false;
    OutputOptions susy_out;
    auto* cmd_susy = app.add_subcommand("susy", "partner-potential level pairing");
    cmd_susy->add_option("--beta", susy_beta, "superpotential strength")->check(CLI::PositiveNumber);
    cmd_susy->add_option("--n-max", susy_nmax, "pair rows up to n");
    cmd_susy->add_flag("--plot-data", susy_plot, "emit the two ground-state wavefunction curves");
    add_output_flags(cmd_susy, susy_out);

    // ---- vacuum ------------------------------------------------------------
    double vac_lmin = 1e-3, vac_lmax = 100.0, vac_sigma_max = 2.0, vac_lambda = 1.0;
    int vac_points = 13;
    bool vac_plot = false;
    OutputOptions vac_out;
    auto* cmd_vacuum = app.add_subcommand("vacuum", "vacuum structure and stability rows");
    cmd_vacuum->add_option("--lambda-min", vac_lmin)->check(CLI::PositiveNumber);
    cmd_vacuum->add_option("--lambda-max", vac_lmax)->check(CLI::PositiveNumber);
    cmd_vacuum->add_option("--points", vac_points)->check(CLI::PositiveNumber);
    cmd_vacuum->add_flag("--plot-data", vac_plot, "emit the effective-potential curve instead");
    cmd_vacuum->add_option("--lambda", vac_lambda, "coupling for --plot-data")
        ->check(CLI::PositiveNumber);
    cmd_vacuum->add_option("--sigma-max", vac_sigma_max, "curve half-width for --plot-data");
    add_output_flags(cmd_vacuum, vac_out);

    // ---- qft ---------------------------------------------------------------
    auto* cmd_qft = app.add_subcommand("qft", "phi^4 field-theory tools");
    cmd_qft->require_subcommand(1);

    double ep_eta = 1.0, ep_mr = 1.0;
    int ep_points = 41;
    OutputOptions ep_out;
    auto* cmd_ep = cmd_qft->add_subcommand("ep", "renormalized effective potential");
    cmd_ep->add_option("--eta", ep_eta)->required();
    cmd_ep->add_option("--mr", ep_mr)->check(CLI::PositiveNumber);
    cmd_ep->add_option("--points", ep_points)->check(CLI::PositiveNumber);
    add_output_flags(cmd_ep, ep_out);

    double qgap_eta = 1.0, qgap_sigma = 0.0, qgap_mr = 1.0;
    OutputOptions qgap_out;
    auto* cmd_qgap = cmd_qft->add_subcommand("gap", "renormalized gap equation");
    cmd_qgap->add_option("--eta", qgap_eta)->required();
    cmd_qgap->add_option("--sigma", qgap_sigma)->required();
    cmd_qgap->add_option("--mr", qgap_mr)->check(CLI::PositiveNumber);
    add_output_flags(cmd_qgap, qgap_out);

    double cond_mr = 1.0, cond_mbare = 2.0, cond_kmax = 5.0;
    int cond_points = 51;
    OutputOptions cond_out;
    auto* cmd_cond = cmd_qft->add_subcommand("condensate", "vacuum condensate momentum rows");
    cmd_cond->add_option("--mr", cond_mr)->required()->check(CLI::PositiveNumber);
    cmd_cond->add_option("--mbare", cond_mbare)->required();
    cmd_cond->add_option("--k-max", cond_kmax)->check(CLI::PositiveNumber);
    cmd_cond->add_option("--points", cond_points)->check(CLI::PositiveNumber);
    add_output_flags(cmd_cond, cond_out);

    double triv_lambda = -1e-3, triv_m2 = 1.0, triv_cutoff = 10.0;
    OutputOptions triv_out;
    auto* cmd_triv = cmd_qft->add_subcommand("triviality", "perturbative-vacuum report");
    cmd_triv->add_option("--lambda", triv_lambda)->required();
    cmd_triv->add_option("--m2", triv_m2)->required()->check(CLI::PositiveNumber);
    cmd_triv->add_option("--cutoff", triv_cutoff)->required()->check(CLI::PositiveNumber);
    add_output_flags(cmd_triv, triv_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    auto levels_range = [](int n, int n_max) {
        std::vector<int> levels;
        for (int i = n; i <= std::max(n, n_max); ++i) levels.push_back(i);
        return levels;
    };

    if (cmd_spectrum->parsed()) {
        const OscillatorSpec spec = make_spec(spectrum_spec);
        const IptDenominator denom = spectrum_denom == "fixed" ? IptDenominator::FixedH0
                                                               : IptDenominator::LoLevels;
        io::CsvTable rows;
        for (int n : levels_range(spectrum_n, spectrum_nmax)) {
            const Level level(n);
            const GapSolution sol = solve_gap(spec, level);
            const LevelEnergy e = level_energy(spec, level, spectrum_order, denom);
            rows.push_back({std::to_string(n), fd(sol.omega), fd(sol.sigma),
                            to_string(sol.phase), fd(e.e0),
                            e.de2 ? fd(*e.de2) : "", e.de3 ? fd(*e.de3) : "",
                            fd(e.total())});
        }
        write_output(spectrum_out,
                     {"n", "omega", "sigma", "phase", "e0", "de2", "de3", "total"}, rows);
        return 0;
    }

    if (cmd_gap->parsed()) {
        const OscillatorSpec spec = make_spec(gap_spec);
        io::CsvTable rows;
        for (int n : levels_range(gap_n, gap_nmax)) {
            const GapSolution sol = solve_gap(spec, Level(n));
            rows.push_back({std::to_string(n), fd(sol.omega), fd(sol.sigma),
                            to_string(sol.phase), fd(sol.residual),
                            sol.trig_rho ? fd(*sol.trig_rho) : "",
                            sol.trig_theta ? fd(*sol.trig_theta) : ""});
        }
        write_output(gap_out, {"n", "omega", "sigma", "phase", "residual", "rho", "theta"},
                     rows);
        return 0;
    }

    if (cmd_ipt->parsed()) {
        const OscillatorSpec spec = make_spec(ipt_spec);
        const IptDenominator denom =
            ipt_denom == "fixed" ? IptDenominator::FixedH0 : IptDenominator::LoLevels;
        io::CsvTable rows;
        for (int n : levels_range(ipt_n, ipt_nmax)) {
            const Level level(n);
            const LevelEnergy e = level_energy(spec, level, 3, denom);
            rows.push_back({std::to_string(n), fd(e.e0), fd(*e.de2), fd(*e.de3),
                            fd(e.total()), ipt_denom});
        }
        write_output(ipt_out, {"n", "e0", "de2", "de3", "total", "denominator"}, rows);
        return 0;
    }

    if (cmd_oracle->parsed()) {
        const OscillatorSpec spec = make_spec(oracle_spec);
        OracleResult res;
        try {
            res = converged_levels(spec, oracle_levels, oracle_tol);
        } catch (const NotConverged& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
        io::CsvTable rows;
        for (int n = 0; n < oracle_levels; ++n)
            rows.push_back({std::to_string(n), fd(res.eigenvalues[static_cast<size_t>(n)]),
                            std::to_string(res.basis_size), fd(res.basis_frequency),
                            fd(res.tail_estimate)});
        write_output(oracle_out,
                     {"n", "energy", "basis_size", "basis_frequency", "tail_estimate"}, rows);
        return 0;
    }

    if (cmd_compare->parsed()) {
        const OscillatorSpec spec = make_spec(compare_spec);
        OracleResult res;
        try {
            res = converged_levels(spec, compare_levels, compare_tol);
        } catch (const NotConverged& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
        io::CsvTable rows;
        for (int n = 0; n < compare_levels; ++n) {
            const Level level(n);
            const double e0 = energy_lo_value(spec, level);
            const double de2 = spec.lambda > 0.0 ? correction_order2(spec, level) : 0.0;
            const double exact = res.eigenvalues[static_cast<size_t>(n)];
            rows.push_back({std::to_string(n), fd(e0), fd(e0 + de2), fd(exact),
                            fd(std::abs(e0 - exact) / std::abs(exact)),
                            fd(std::abs(e0 + de2 - exact) / std::abs(exact))});
        }
        write_output(compare_out,
                     {"n", "e0", "e0_plus_de2", "oracle", "rel_err_lo", "rel_err_ipt"}, rows);
        return 0;
    }

    if (cmd_table->parsed()) {
        std::vector<tables::ComparisonRow> comparison;
        try {
            comparison = tables::compare_table(table_id, table_data_dir, table_ipt);
        } catch (const std::invalid_argument& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
        io::CsvTable rows;
        for (const auto& r : comparison)
            rows.push_back({std::to_string(r.table_id), fd(r.lambda), std::to_string(r.n),
                            r.quantity, fd(r.computed), fd(r.reference), fd(r.deviation),
                            fd(r.tolerance), r.pass ? "1" : "0", r.gating ? "1" : "0"});
        write_output(table_out,
                     {"table", "lambda", "n", "quantity", "computed", "reference",
                      "deviation", "tolerance", "pass", "gating"},
                     rows);
        if (table_check && !tables::all_gating_rows_pass(comparison)) return 1;
        return 0;
    }

    if (cmd_susy->parsed()) {
        if (susy_plot) {
            const susy::GroundstateComparison cmp = susy::groundstate_comparison(susy_beta);
            io::CsvTable rows;
            const double half_width = 4.0 / std::sqrt(cmp.ngas_state.width_exponent);
            const int points = 201;
            for (int i = 0; i < points; ++i) {
                const double phi = -half_width + 2.0 * half_width * i / (points - 1);
                rows.push_back({fd(phi), fd(susy::susy_groundstate(susy_beta, phi)),
                                fd(susy::evaluate(cmp.ngas_state, phi))});
            }
            write_output(susy_out, {"phi", "psi_superpotential", "psi_gap"}, rows);
            return 0;
        }
        io::CsvTable rows;
        for (const auto& r : susy::ispp_table(susy_beta, susy_nmax))
            rows.push_back({std::to_string(r.n), fd(r.e_aho), fd(r.e_dwo_next),
                            fd(r.relative_gap)});
        write_output(susy_out, {"n", "e_aho", "e_dwo_next", "relative_gap"}, rows);
        return 0;
    }

    if (cmd_vacuum->parsed()) {
        io::CsvTable rows;
        if (vac_plot) {
            for (int i = 0; i < vac_points; ++i) {
                const double sigma =
                    -vac_sigma_max + 2.0 * vac_sigma_max * i / std::max(1, vac_points - 1);
                const auto point = vacuum::effective_potential_qm_point(vac_lambda, sigma);
                rows.push_back({fd(point.sigma), fd(point.omega), fd(point.value)});
            }
            write_output(vac_out, {"sigma", "omega", "v_eff"}, rows);
            return 0;
        }
        for (int i = 0; i < vac_points; ++i) {
            const double frac = vac_points == 1 ? 0.0 : double(i) / (vac_points - 1);
            const double lambda = vac_lmin * std::pow(vac_lmax / vac_lmin, frac);
            const vacuum::VacuumStructure v =
                vacuum::vacuum_structure(OscillatorSpec(OscillatorKind::QuarticAho, 1.0, lambda));
            rows.push_back({fd(lambda), fd(v.omega), fd(v.alpha), fd(v.n0),
                            fd(vacuum::stability_gap(lambda))});
        }
        write_output(vac_out, {"lambda", "omega", "alpha", "n0", "delta_e"}, rows);
        return 0;
    }

    if (cmd_ep->parsed()) {
        const double edge = std::sqrt(qft::sigma_min_squared(ep_eta, ep_mr));
        std::vector<double> grid;
        for (int i = 0; i < ep_points; ++i)
            grid.push_back(-edge + 2.0 * edge * i / std::max(1, ep_points - 1));
        const auto curve = qft::effective_potential(ep_eta, ep_mr, grid);
        io::CsvTable rows;
        for (const auto& p : curve.points)
            rows.push_back({fd(p.sigma), fd(p.t), fd(p.u), fd(curve.domain_edge)});
        write_output(ep_out, {"sigma", "t", "u_minus_umin", "domain_edge"}, rows);
        return 0;
    }

    if (cmd_qgap->parsed()) {
        io::CsvTable rows;
        try {
            const qft::RenormalizedPoint point =
                qft::renormalized_point(qgap_eta, qgap_sigma, qgap_mr);
            const auto second = qft::renormalized_gap_second_root(qgap_eta, qgap_sigma, qgap_mr);
            rows.push_back({fd(point.eta), fd(point.lambda_r), fd(point.sigma), fd(point.t),
                            second ? fd(*second) : "",
                            fd(std::sqrt(qft::sigma_min_squared(qgap_eta, qgap_mr)))});
        } catch (const qft::OutsideDomain& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
        write_output(qgap_out, {"eta", "lambda_r", "sigma", "t", "t_second_root", "sigma_min"},
                     rows);
        return 0;
    }

    if (cmd_cond->parsed()) {
        std::vector<double> grid;
        for (int i = 0; i < cond_points; ++i)
            grid.push_back(cond_kmax * i / std::max(1, cond_points - 1));
        io::CsvTable rows;
        for (const auto& r : qft::condensate_density(cond_mbare, cond_mr, grid))
            rows.push_back({fd(r.k), fd(r.n), fd(r.rho)});
        write_output(cond_out, {"k", "n", "rho"}, rows);
        return 0;
    }

    if (cmd_triv->parsed()) {
        const auto out = qft::perturbative_ep(triv_m2, triv_lambda, triv_cutoff, {});
        const auto& rep = out.report;
        io::CsvTable rows;
        rows.push_back(
            {fd(rep.m2_bare), fd(rep.lambda_bare), fd(rep.cutoff), fd(rep.mbar_r2),
             fd(rep.mbar_r2_doubled_cutoff),
             rep.unbounded_below ? (*rep.unbounded_below ? "1" : "0") : "",
             rep.unbounded_witness ? fd(*rep.unbounded_witness) : "",
             rep.cutoff_squared_growth ? (*rep.cutoff_squared_growth ? "1" : "0") : "",
             fd(rep.u_min_ngas), fd(rep.u_min_perturbative),
             rep.ngas_min_below_perturbative ? "1" : "0"});
        write_output(triv_out,
                     {"m2_bare", "lambda_bare", "cutoff", "mbar_r2", "mbar_r2_cutoff_x2",
                      "unbounded_below", "unbounded_witness", "cutoff_squared_growth",
                      "u_min", "u_min_perturbative", "u_min_below"},
                     rows);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
