// mlrsa: multilayer random sequential adsorption toolkit CLI.
//
// Every subcommand builds a JSON config, hands it to run_experiment, and
// writes the result as a CSV and/or JSON artifact whose header embeds the
// canonical config, so any artifact can be reproduced with `mlrsa rerun`.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlrsa/artifact.hpp"
#include "mlrsa/experiments.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
    std::string out;
    std::string format = "csv";
    int jobs = 1;
};

fs::path out_path(const Common& c, const std::string& stem,
                  const char* ext, bool replace_ext) {
    if (!c.out.empty()) {
        fs::path p = c.out;
        if (replace_ext) p.replace_extension(ext);
        return p;
    }
    const char* dir = std::getenv("MLRSA_OUT_DIR");
    return fs::path(dir ? dir : ".") / (stem + ext);
}

int run_and_emit(const std::string& config, const Common& c,
                 const std::string& stem) {
    const mlrsa::ExperimentResult res = mlrsa::run_experiment(config, c.jobs);
    if (c.format != "csv" && c.format != "json" && c.format != "both")
        throw std::invalid_argument("--format must be csv, json or both");
    if (c.format == "csv" || c.format == "both") {
        const fs::path p = out_path(c, stem, ".csv", false);
        mlrsa::write_artifact_csv(p, res.config_json, res.table);
        std::cout << "wrote " << p.string() << "\n";
    }
    if (c.format == "json" || c.format == "both") {
        const fs::path p = out_path(c, stem, ".json", c.format == "both");
        mlrsa::write_artifact_json(p, res.config_json, res.table);
        std::cout << "wrote " << p.string() << "\n";
    }
    std::cout << res.report << "\n";
    return res.gates_passed ? 0 : 2;
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("-o,--out", c.out, "Artifact path (default: <mode>.<ext> "
                                       "in $MLRSA_OUT_DIR or the CWD)");
    cmd->add_option("--format", c.format, "Artifact format: csv, json or both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    cmd->add_option("-j,--jobs", c.jobs, "Worker threads for simulations")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilayer random sequential adsorption: simulators, "
                 "analytic solvers, and a Wi-Fi channel planner"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file");
    app.set_version_flag("--version", "mlrsa 1.0.0");
    app.fallthrough(false);

    Common c;
    int ret = 0;
    auto run = [&](const json& cfg, const std::string& stem) {
        ret = run_and_emit(cfg.dump(), c, stem);
    };

    // ---- sim1d ----
    double sigma = 1.0, rate = 1.0, length = 10'000.0, side = 100.0;
    int colors = 1, seed = 1, reps = 4;
    std::string assignment = "uniform";
    std::vector<double> times, taus, d_values;
    {
        auto* cmd = app.add_subcommand(
            "sim1d", "Monte Carlo deposition of rods on a ring");
        add_common(cmd, c);
        cmd->add_option("--sigma", sigma, "Rod length");
        cmd->add_option("--rate", rate, "Arrival rate per unit length");
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--length", length, "Ring circumference");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--reps", reps, "Independent replications")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--times", times, "Sample times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->add_option("--assignment", assignment,
                        "Color choice among admissible: uniform or lowest")
            ->check(CLI::IsMember({"uniform", "lowest"}));
        cmd->callback([&, cmd] {
            json cfg{{"mode", "sim1d"}, {"times", times}};
            if (cmd->count("--sigma")) cfg["sigma"] = sigma;
            if (cmd->count("--rate")) cfg["rate"] = rate;
            if (cmd->count("--colors")) cfg["colors"] = colors;
            if (cmd->count("--length")) cfg["length"] = length;
            if (cmd->count("--seed")) cfg["seed"] = seed;
            if (cmd->count("--reps")) cfg["reps"] = reps;
            if (cmd->count("--assignment")) cfg["assignment"] = assignment;
            run(cfg, "sim1d");
        });
    }

    // ---- sim2d ----
    {
        auto* cmd = app.add_subcommand(
            "sim2d", "Monte Carlo deposition of disks on a torus");
        add_common(cmd, c);
        cmd->add_option("--sigma", sigma, "Disk diameter");
        cmd->add_option("--rate", rate, "Arrival rate per unit area");
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--side", side, "Torus side length");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--reps", reps, "Independent replications")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--times", times, "Sample times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->add_option("--assignment", assignment,
                        "Color choice among admissible: uniform or lowest")
            ->check(CLI::IsMember({"uniform", "lowest"}));
        cmd->callback([&, cmd] {
            json cfg{{"mode", "sim2d"}, {"times", times}};
            if (cmd->count("--sigma")) cfg["sigma"] = sigma;
            if (cmd->count("--rate")) cfg["rate"] = rate;
            if (cmd->count("--colors")) cfg["colors"] = colors;
            if (cmd->count("--side")) cfg["side"] = side;
            if (cmd->count("--seed")) cfg["seed"] = seed;
            if (cmd->count("--reps")) cfg["reps"] = reps;
            if (cmd->count("--assignment")) cfg["assignment"] = assignment;
            run(cfg, "sim2d");
        });
    }

    // ---- solve1d-iter ----
    {
        auto* cmd = app.add_subcommand(
            "solve1d-iter", "Iterative sequential-filling densities (1D)");
        add_common(cmd, c);
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--taus", taus, "Dimensionless times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->callback([&, cmd] {
            json cfg{{"mode", "solve1d-iter"}, {"taus", taus}};
            if (cmd->count("--colors")) cfg["colors"] = colors;
            run(cfg, "solve1d-iter");
        });
    }

    // ---- solve1d-gap ----
    std::string variant;
    double rho0_sigma = 0.0, l_max_factor = 0.0, rtol = 0.0, keep_l_max = 0.0;
    int cells_per_sigma = 0;
    {
        auto* cmd = app.add_subcommand(
            "solve1d-gap", "Gap-equation densities (1D)");
        add_common(cmd, c);
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--variant", variant,
                        "Admission factor: exact-k2 or generic")
            ->check(CLI::IsMember({"exact-k2", "generic"}));
        cmd->add_option("--taus", taus, "Dimensionless times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->add_option("--rho0-sigma", rho0_sigma, "Seed coverage (<= 0.02)");
        cmd->add_option("--cells-per-sigma", cells_per_sigma,
                        "Grid cells per rod length");
        cmd->add_option("--l-max-factor", l_max_factor,
                        "Domain size in units of the seed gap scale");
        cmd->add_option("--rtol", rtol, "Time-stepper relative tolerance");
        cmd->callback([&, cmd] {
            json cfg{{"mode", "solve1d-gap"}, {"taus", taus}};
            if (cmd->count("--colors")) cfg["colors"] = colors;
            if (cmd->count("--variant")) cfg["variant"] = variant;
            if (cmd->count("--rho0-sigma")) cfg["rho0_sigma"] = rho0_sigma;
            if (cmd->count("--cells-per-sigma"))
                cfg["cells_per_sigma"] = cells_per_sigma;
            if (cmd->count("--l-max-factor"))
                cfg["l_max_factor"] = l_max_factor;
            if (cmd->count("--rtol")) cfg["rtol"] = rtol;
            run(cfg, "solve1d-gap");
        });
    }

    // ---- gap-profile ----
    {
        auto* cmd = app.add_subcommand(
            "gap-profile", "Gap-length density profiles G(l) at given times");
        add_common(cmd, c);
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--variant", variant,
                        "Admission factor: exact-k2 or generic")
            ->check(CLI::IsMember({"exact-k2", "generic"}));
        cmd->add_option("--taus", taus, "Profile times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->add_option("--keep-l-max", keep_l_max,
                        "Largest gap length kept in the output");
        cmd->callback([&, cmd] {
            json cfg{{"mode", "solve1d-gap-profile"}, {"taus", taus}};
            if (cmd->count("--colors")) cfg["colors"] = colors;
            if (cmd->count("--variant")) cfg["variant"] = variant;
            if (cmd->count("--keep-l-max")) cfg["keep_l_max"] = keep_l_max;
            run(cfg, "gap-profile");
        });
    }

    // ---- solve2d ----
    {
        auto* cmd = app.add_subcommand(
            "solve2d", "Sequential-filling coverages (2D disks)");
        add_common(cmd, c);
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--taus", taus, "Dimensionless times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->callback([&, cmd] {
            json cfg{{"mode", "solve2d"}, {"taus", taus}};
            if (cmd->count("--colors")) cfg["colors"] = colors;
            run(cfg, "solve2d");
        });
    }

    // ---- plan-wifi ----
    double power = 1.0, threshold = 1e-8, alpha = 4.0, density = 1.0,
           target = 0.7;
    int channels = 1;
    std::string band;
    {
        auto* cmd = app.add_subcommand(
            "plan-wifi", "Channel-reuse planner for dense AP deployments");
        add_common(cmd, c);
        cmd->add_option("--power", power, "Transmit power");
        cmd->add_option("--threshold", threshold, "Interference threshold");
        cmd->add_option("--alpha", alpha, "Path-loss exponent");
        auto* ch = cmd->add_option("--channels", channels,
                                   "Number of non-overlapping channels")
                       ->check(CLI::PositiveNumber);
        cmd->add_option("--band", band, "Band preset: 2.4 or 5")
            ->check(CLI::IsMember({"2.4", "5"}))
            ->excludes(ch);
        cmd->add_option("--density", density, "Arrived APs per unit area");
        cmd->add_option("--target", target,
                        "Required fraction of the jamming coverage");
        cmd->add_option("--lambdas", d_values,
                        "Evaluate a d_inh curve over these AP densities")
            ->delimiter(',');
        cmd->callback([&, cmd] {
            json cfg{{"mode", "plan-wifi"}};
            if (cmd->count("--power")) cfg["power"] = power;
            if (cmd->count("--threshold")) cfg["threshold"] = threshold;
            if (cmd->count("--alpha")) cfg["alpha"] = alpha;
            if (cmd->count("--channels")) cfg["channels"] = channels;
            if (cmd->count("--band")) cfg["band"] = band;
            if (cmd->count("--density")) cfg["density"] = density;
            if (cmd->count("--target")) cfg["target"] = target;
            if (cmd->count("--lambdas")) cfg["lambdas"] = d_values;
            run(cfg, "plan-wifi");
        });
    }

    // ---- compare ----
    std::string kind;
    double gate = 0.0;
    {
        auto* cmd = app.add_subcommand(
            "compare", "Run a simulation against an analytic scheme and gate "
                       "the deviation");
        add_common(cmd, c);
        cmd->add_option("--kind", kind, "Scheme: gap, iter or 2d")
            ->required()
            ->check(CLI::IsMember({"gap", "iter", "2d"}));
        cmd->add_option("--colors", colors, "Number of colors K")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--taus", taus, "Dimensionless times (ascending)")
            ->required()
            ->delimiter(',');
        cmd->add_option("--variant", variant,
                        "Gap admission factor: exact-k2 or generic")
            ->check(CLI::IsMember({"exact-k2", "generic"}));
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--reps", reps, "Independent replications")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--length", length, "Ring circumference (1D kinds)");
        cmd->add_option("--side", side, "Torus side (2d kind)");
        cmd->add_option("--gate", gate, "Relative-deviation gate override");
        cmd->callback([&, cmd] {
            json cfg{{"mode", "compare"}, {"kind", kind}, {"taus", taus}};
            if (cmd->count("--colors")) cfg["colors"] = colors;
            if (cmd->count("--variant")) cfg["variant"] = variant;
            if (cmd->count("--seed")) cfg["seed"] = seed;
            if (cmd->count("--reps")) cfg["reps"] = reps;
            if (cmd->count("--length")) cfg["length"] = length;
            if (cmd->count("--side")) cfg["side"] = side;
            if (cmd->count("--gate")) cfg["gate"] = gate;
            run(cfg, "compare");
        });
    }

    // ---- figure ----
    int figure_id = 0;
    {
        auto* cmd = app.add_subcommand(
            "figure", "Emit one of the bundled figure datasets (ids 4-9)");
        add_common(cmd, c);
        cmd->add_option("id", figure_id, "Figure id")->required();
        cmd->callback([&] {
            run(json::parse(mlrsa::figure_config(figure_id)),
                "figure" + std::to_string(figure_id));
        });
    }

    // ---- rerun ----
    std::string from;
    {
        auto* cmd = app.add_subcommand(
            "rerun", "Re-execute the config embedded in an artifact");
        add_common(cmd, c);
        cmd->add_option("--from", from, "Artifact to reproduce")->required();
        cmd->callback([&] {
            const std::string cfg = mlrsa::read_artifact_config(from);
            const std::string stem = fs::path(from).stem().string() + "-rerun";
            ret = run_and_emit(cfg, c, stem);
        });
    }

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return ret;
}
