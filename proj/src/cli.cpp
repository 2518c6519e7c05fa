#include "complab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "complab/classical.hpp"
#include "complab/detector.hpp"
#include "complab/measurement.hpp"
#include "complab/qubit.hpp"
#include "complab/sampling.hpp"
#include "complab/serialization.hpp"
#include "complab/young.hpp"

namespace complab {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_inadmissible = 2;
constexpr int exit_violated = 3;
constexpr int exit_internal = 4;

/// Locale-independent decimal formatting, 17 significant digits.
std::string fmt(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

int default_jobs() {
    if (const char* env = std::getenv("COMPLAB_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

/// Scenario flags shared by check/invert/simulate.
struct ScenarioOptions {
    std::vector<double> state;
    std::vector<double> gammas;
    std::vector<double> n{0.0, 1.0, 0.0};
    std::vector<double> axis_x;
    std::vector<double> axis_z;
    std::vector<double> young;  // theta phi
    std::string config_path;
    bool degrees = false;
    double verdict_tolerance = verdict_tol;

    CLI::Option* state_opt = nullptr;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* young_opt = nullptr;
    CLI::Option* config_opt = nullptr;
};

void add_scenario_options(CLI::App& cmd, ScenarioOptions& o) {
    o.config_opt = cmd.add_option("--config", o.config_path,
                                  "Scenario JSON file (replaces the flags below)");
    o.state_opt =
        cmd.add_option("--state", o.state, "Bloch vector sx sy sz")->expected(3);
    o.gamma_opt = cmd.add_option("--gammas", o.gammas,
                                 "Noise factors gamma_x gamma_z gamma_xz")
                      ->expected(3);
    cmd.add_option("--n", o.n, "Correlation direction nx ny nz (default e_y)")
        ->expected(3);
    cmd.add_option("--axis-x", o.axis_x, "Measurement axis for X (default e_x)")
        ->expected(3);
    cmd.add_option("--axis-z", o.axis_z, "Measurement axis for Z (default e_z)")
        ->expected(3);
    o.young_opt = cmd.add_option("--young", o.young,
                                 "Interferometer angles theta phi "
                                 "(alternative to --gammas)")
                      ->expected(2);
    cmd.add_flag("--degrees", o.degrees, "Angles are given in degrees");
    cmd.add_option("--verdict-tol", o.verdict_tolerance,
                   "Boundary half-width for the verdict (default 1e-9)");
}

ScenarioConfig build_scenario(const ScenarioOptions& o) {
    if (!o.config_path.empty()) {
        if (*o.state_opt || *o.gamma_opt || *o.young_opt) {
            throw std::invalid_argument(
                "--config cannot be combined with --state/--gammas/--young");
        }
        std::ifstream in(o.config_path);
        if (!in) {
            throw std::invalid_argument("cannot open config file: " + o.config_path);
        }
        json j;
        in >> j;
        return scenario_from_json(j);
    }

    if (!*o.state_opt) {
        throw std::invalid_argument("missing --state (or --config)");
    }
    ScenarioConfig c{.state = {o.state[0], o.state[1], o.state[2]},
                     .model = std::nullopt,
                     .young = std::nullopt,
                     .verdict_tolerance = o.verdict_tolerance};
    if (*o.gamma_opt && *o.young_opt) {
        throw std::invalid_argument("give either --gammas or --young, not both");
    }
    if (*o.gamma_opt) {
        const Direction n{Vec3{o.n[0], o.n[1], o.n[2]}};
        if (!o.axis_x.empty() || !o.axis_z.empty()) {
            if (o.axis_x.empty() || o.axis_z.empty()) {
                throw std::invalid_argument("--axis-x and --axis-z come together");
            }
            c.model = MeasurementModel(
                o.gammas[0], o.gammas[1], o.gammas[2], n,
                Direction{Vec3{o.axis_x[0], o.axis_x[1], o.axis_x[2]}},
                Direction{Vec3{o.axis_z[0], o.axis_z[1], o.axis_z[2]}});
        } else {
            c.model = MeasurementModel(o.gammas[0], o.gammas[1], o.gammas[2], n);
        }
    } else if (*o.young_opt) {
        const double scale = o.degrees ? M_PI / 180.0 : 1.0;
        c.young = YoungSetting(o.young[0] * scale, o.young[1] * scale);
    } else {
        throw std::invalid_argument("missing measurement: --gammas or --young");
    }
    return c;
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file,
                             std::ostream& out) {
    if (path.empty()) return out;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

int cmd_check(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    const BlochState s = cfg.bloch();
    const MeasurementModel m = cfg.resolve_model();

    const PovmReport povm = povm_positivity(m);
    if (!povm.admissible) {
        err << "inadmissible model: worst POVM eigenvalue "
            << fmt(povm.worst_eigenvalue) << "\n";
        out << json{{"admissible", false},
                    {"worst_eigenvalue", povm.worst_eigenvalue}}
                   .dump(2)
            << "\n";
        return exit_inadmissible;
    }

    const JointDistribution d = joint_statistics(s, m);
    const InequalityReport moment_form = compact_inequality(
        moments(d), m.gamma_x(), m.gamma_z(), cfg.verdict_tolerance);
    const InequalityReport state_form =
        state_form_inequality(s, m, cfg.verdict_tolerance);

    double cross = std::max(std::abs(moment_form.margin_upper - state_form.margin_upper),
                            std::abs(moment_form.margin_lower - state_form.margin_lower));
    for (std::size_t i = 0; i < 4; ++i) {
        cross = std::max(cross, std::abs(moment_form.four_values[i] -
                                         state_form.four_values[i]));
    }
    if (cross > 1e-10 || moment_form.verdict != state_form.verdict) {
        err << "internal consistency error: moment form and state form disagree by "
            << fmt(cross) << "\n";
        return exit_internal;
    }

    json j = to_json(moment_form);
    j["admissible"] = true;
    j["worst_eigenvalue"] = povm.worst_eigenvalue;
    j["state_form_max_difference"] = cross;
    out << j.dump(2) << "\n";
    return moment_form.verdict == Verdict::violated ? exit_violated : exit_ok;
}

int cmd_invert(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    const BlochState s = cfg.bloch();
    const MeasurementModel m = cfg.resolve_model();
    if (m.gamma_x() == 0.0 || m.gamma_z() == 0.0) {
        err << "observable not measured; inversion impossible\n";
        return exit_input_error;
    }

    const JointDistribution d = joint_statistics(s, m);
    const ReconstructedDistribution inverted =
        invert_joint(d, m.gamma_x(), m.gamma_z());
    const ReconstructedDistribution reconstructed =
        reconstruct_p_lambda(moments(d), m.gamma_x(), m.gamma_z());
    const EquivalenceReport eq = equivalence_check(d, m.gamma_x(), m.gamma_z());

    out << json{{"observed", d.table()},
                {"inverted", inverted.table()},
                {"reconstructed", reconstructed.table()},
                {"max_abs_difference", eq.max_abs_difference}}
               .dump(2)
        << "\n";
    return exit_ok;
}

int cmd_young_sweep(const BlochState& s, int theta_steps, int phi_steps, int jobs,
                    const std::string& out_path, std::ostream& out) {
    const auto rows = young_sweep(s, theta_steps, phi_steps, jobs);

    std::ofstream file;
    std::ostream& os = open_or_stdout(out_path, file, out);
    os << "theta,phi,gamma_x,gamma_z,gamma_xz,factor,margin_upper,margin_lower,"
          "verdict,max_dev\n";
    for (const SweepRow& r : rows) {
        os << fmt(r.theta) << ',' << fmt(r.phi) << ',' << fmt(r.gamma_x) << ','
           << fmt(r.gamma_z) << ',' << fmt(r.gamma_xz) << ',' << fmt(r.factor) << ','
           << fmt(r.margin_upper) << ',' << fmt(r.margin_lower) << ','
           << to_string(r.verdict) << ',' << fmt(r.max_dev) << "\n";
    }
    return exit_ok;
}

int cmd_regions(int resolution, int jobs, const std::string& grid_path,
                const std::string& boundary_path, std::ostream& err) {
    const RegionScan scan = povm_factorized_region(resolution, jobs);

    std::ofstream grid(grid_path);
    if (!grid) {
        err << "cannot open output file: " << grid_path << "\n";
        return exit_input_error;
    }
    grid << "gamma_x,gamma_z,in_povm_region,in_positive_square\n";
    for (const RegionPoint& p : scan.grid) {
        grid << fmt(p.gamma_x) << ',' << fmt(p.gamma_z) << ','
             << (p.in_povm_region ? 1 : 0) << ',' << (p.in_positive_square ? 1 : 0)
             << "\n";
    }

    std::ofstream boundary(boundary_path);
    if (!boundary) {
        err << "cannot open output file: " << boundary_path << "\n";
        return exit_input_error;
    }
    boundary << "gamma_x,gamma_z_boundary\n";
    for (const auto& b : scan.boundary) {
        boundary << fmt(b[0]) << ',' << fmt(b[1]) << "\n";
    }
    return exit_ok;
}

int cmd_search(const BlochState& s, std::ostream& out, std::ostream& err) {
    const MeasurementModel m = violation_search(s);
    const PovmReport povm = povm_positivity(m);
    const InequalityReport report = state_form_inequality(s, m);
    if (!povm.admissible || report.verdict != Verdict::violated) {
        err << "internal consistency error: search result failed re-verification\n";
        return exit_internal;
    }
    out << json{{"model", to_json(m)},
                {"report", to_json(report)},
                {"worst_eigenvalue", povm.worst_eigenvalue}}
               .dump(2)
        << "\n";
    return exit_ok;
}

int cmd_simulate(const ScenarioConfig& cfg, std::uint64_t n, std::uint64_t seed,
                 double confidence, std::ostream& out, std::ostream& err) {
    const BlochState s = cfg.bloch();
    const MeasurementModel m = cfg.resolve_model();

    const PovmReport povm = povm_positivity(m);
    if (!povm.admissible) {
        err << "inadmissible model: worst POVM eigenvalue "
            << fmt(povm.worst_eigenvalue) << "\n";
        return exit_inadmissible;
    }

    const JointDistribution d = joint_statistics(s, m);
    const EmpiricalCounts counts = sample(d, n, seed);
    const EstimatedReport est =
        estimate(counts, m.gamma_x(), m.gamma_z(), confidence);

    json j = to_json(est);
    j["counts"] = to_json(counts);
    out << j.dump(2) << "\n";
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Noisy joint qubit measurements, complementarity inequalities, "
                 "and classical-model reconstruction"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand(
        "check", "Evaluate the complementarity inequalities for a scenario "
                 "(exit 0 satisfied/boundary, 3 violated, 2 inadmissible)");
    ScenarioOptions check_opts;
    add_scenario_options(*check, check_opts);

    // invert
    auto* invert = app.add_subcommand(
        "invert", "Invert the observed statistics and compare with the "
                  "reconstructed hidden-outcome table");
    ScenarioOptions invert_opts;
    add_scenario_options(*invert, invert_opts);

    // young-sweep
    auto* sweep = app.add_subcommand(
        "young-sweep", "Sweep interferometer angles over [0,pi/2]^2 and emit "
                       "CSV rows with gammas, factor, margins, and verdict");
    std::vector<double> sweep_state;
    int theta_steps = 25;
    int phi_steps = 25;
    int sweep_jobs = default_jobs();
    std::string sweep_out;
    sweep->add_option("--state", sweep_state, "Bloch vector sx sy sz")
        ->expected(3)
        ->required();
    sweep->add_option("--theta-steps", theta_steps, "Grid points along theta (>= 2)");
    sweep->add_option("--phi-steps", phi_steps, "Grid points along phi (>= 2)");
    sweep->add_option("--jobs", sweep_jobs, "Worker threads (env COMPLAB_JOBS)");
    sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

    // regions
    auto* regions = app.add_subcommand(
        "regions", "Scan the (gamma_x, gamma_z) plane for POVM positivity under "
                   "factorization and emit grid + boundary CSV files");
    int resolution = 200;
    int region_jobs = default_jobs();
    std::string grid_out = "regions_grid.csv";
    std::string boundary_out = "regions_boundary.csv";
    regions->add_option("--resolution", resolution, "Grid points per axis (>= 2)");
    regions->add_option("--jobs", region_jobs, "Worker threads (env COMPLAB_JOBS)");
    regions->add_option("--grid-out", grid_out, "Grid CSV path");
    regions->add_option("--boundary-out", boundary_out, "Boundary CSV path");

    // search
    auto* search = app.add_subcommand(
        "search", "Find a measurement the given state violates");
    std::vector<double> search_state;
    search->add_option("--state", search_state, "Bloch vector sx sy sz")
        ->expected(3)
        ->required();

    // simulate
    auto* simulate = app.add_subcommand(
        "simulate", "Draw finite samples and estimate the margins with errors");
    ScenarioOptions sim_opts;
    add_scenario_options(*simulate, sim_opts);
    std::uint64_t sim_n = 100000;
    std::uint64_t sim_seed = 1;
    double confidence = 5.0;
    simulate->add_option("--n", sim_n, "Number of draws (default 100000)");
    simulate->add_option("--seed", sim_seed, "PRNG seed (default 1)");
    simulate->add_option("--confidence", confidence,
                         "Sigma threshold for a confident verdict (default 5)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (*check) return cmd_check(build_scenario(check_opts), out, err);
        if (*invert) return cmd_invert(build_scenario(invert_opts), out, err);
        if (*sweep) {
            const BlochState s{sweep_state[0], sweep_state[1], sweep_state[2]};
            return cmd_young_sweep(s, theta_steps, phi_steps, sweep_jobs, sweep_out,
                                   out);
        }
        if (*regions) {
            return cmd_regions(resolution, region_jobs, grid_out, boundary_out, err);
        }
        if (*search) {
            const BlochState s{search_state[0], search_state[1], search_state[2]};
            return cmd_search(s, out, err);
        }
        if (*simulate) {
            return cmd_simulate(build_scenario(sim_opts), sim_n, sim_seed, confidence,
                                out, err);
        }
    } catch (const ModelError& e) {
        err << e.what() << "\n";
        return exit_inadmissible;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_input_error;
    } catch (const nlohmann::json::exception& e) {
        err << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_input_error;
}

}  // namespace complab
