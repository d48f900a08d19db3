#include "mlrsa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlrsa/gap_solver.hpp"
#include "mlrsa/kinetics2d.hpp"
#include "mlrsa/renyi.hpp"
#include "mlrsa/sim1d.hpp"
#include "mlrsa/sim2d.hpp"
#include "mlrsa/wifi.hpp"

namespace mlrsa {

namespace {

using nlohmann::json;

json parse_object(const std::string& text) {
    json cfg;
    try {
        cfg = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: not valid JSON: ") +
                                    e.what());
    }
    if (!cfg.is_object())
        throw std::invalid_argument("config: top level must be a JSON object");
    return cfg;
}

void check_keys(const json& cfg, const std::set<std::string>& allowed) {
    for (const auto& item : cfg.items())
        if (!allowed.count(item.key())) {
            std::string keys;
            for (const auto& k : allowed) keys += (keys.empty() ? "" : ", ") + k;
            throw std::invalid_argument("config: unknown key \"" + item.key() +
                                        "\" (allowed: " + keys + ")");
        }
}

double get_num(const json& cfg, const char* key, double dflt) {
    if (!cfg.contains(key)) return dflt;
    if (!cfg[key].is_number())
        throw std::invalid_argument(std::string("config: \"") + key +
                                    "\" must be a number");
    return cfg[key].get<double>();
}

int get_int(const json& cfg, const char* key, int dflt) {
    if (!cfg.contains(key)) return dflt;
    if (!cfg[key].is_number_integer())
        throw std::invalid_argument(std::string("config: \"") + key +
                                    "\" must be an integer");
    return cfg[key].get<int>();
}

std::string get_str(const json& cfg, const char* key, const std::string& dflt) {
    if (!cfg.contains(key)) return dflt;
    if (!cfg[key].is_string())
        throw std::invalid_argument(std::string("config: \"") + key +
                                    "\" must be a string");
    return cfg[key].get<std::string>();
}

std::vector<double> get_ascending(const json& cfg, const char* key) {
    if (!cfg.contains(key) || !cfg[key].is_array() || cfg[key].empty())
        throw std::invalid_argument(std::string("config: \"") + key +
                                    "\" must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(cfg[key].size());
    for (const auto& v : cfg[key]) {
        if (!v.is_number())
            throw std::invalid_argument(std::string("config: \"") + key +
                                        "\" must contain only numbers");
        out.push_back(v.get<double>());
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] < out[i - 1])
            throw std::invalid_argument(std::string("config: \"") + key +
                                        "\" must be ascending");
    return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    const double a = std::log10(lo), b = std::log10(hi);
    for (int j = 0; j < n; ++j)
        g[static_cast<std::size_t>(j)] =
            std::pow(10.0, a + (b - a) * j / (n - 1));
    return g;
}

AdmissionVariant variant_from(const std::string& name, int K) {
    if (name == "exact-k2") {
        if (K != 2)
            throw std::invalid_argument(
                "config: variant \"exact-k2\" requires colors = 2");
        return AdmissionVariant::exact_k2;
    }
    if (name == "generic") return AdmissionVariant::generic_k;
    throw std::invalid_argument("config: variant must be \"exact-k2\" or "
                                "\"generic\", got \"" + name + "\"");
}

Assignment assignment_from(const std::string& name) {
    if (name == "uniform") return Assignment::uniform_random;
    if (name == "lowest") return Assignment::lowest_index;
    throw std::invalid_argument(
        "config: assignment must be \"uniform\" or \"lowest\", got \"" + name +
        "\"");
}

// Standard error of the mean-over-colors of a replication-averaged curve.
double mean_err(const DensityCurve& c, std::size_t i) {
    double s = 0;
    for (double e : c.errs[i]) s += e * e;
    return std::sqrt(s) / static_cast<double>(c.num_colors);
}

// ---------------------------------------------------------------- sim modes

ExperimentResult do_sim1d(json cfg, int jobs) {
    check_keys(cfg, {"mode", "sigma", "rate", "colors", "length", "seed",
                     "reps", "times", "assignment"});
    Params1D p;
    p.sigma = get_num(cfg, "sigma", 1.0);
    p.rate = get_num(cfg, "rate", 1.0);
    p.num_colors = get_int(cfg, "colors", 1);
    p.domain_length = get_num(cfg, "length", 10'000.0);
    p.seed = static_cast<std::uint64_t>(get_int(cfg, "seed", 1));
    const int reps = get_int(cfg, "reps", 4);
    const std::string assign = get_str(cfg, "assignment", "uniform");
    const std::vector<double> times = get_ascending(cfg, "times");
    p.horizon = times.back();
    p.validate();

    cfg["sigma"] = p.sigma;
    cfg["rate"] = p.rate;
    cfg["colors"] = p.num_colors;
    cfg["length"] = p.domain_length;
    cfg["seed"] = get_int(cfg, "seed", 1);
    cfg["reps"] = reps;
    cfg["assignment"] = assign;

    const DensityCurve curve =
        run_replicated_1d(p, times, reps, jobs, assignment_from(assign));

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"time", "tau"};
    for (int c = 0; c < p.num_colors; ++c)
        res.table.columns.push_back("rho_c" + std::to_string(c));
    for (int c = 0; c < p.num_colors; ++c)
        res.table.columns.push_back("err_c" + std::to_string(c));
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::vector<double> row{times[i], p.sigma * p.rate * times[i]};
        for (double v : curve.values[i]) row.push_back(v);
        for (double e : curve.errs[i]) row.push_back(e);
        res.table.rows.push_back(std::move(row));
    }
    std::ostringstream rep;
    rep << "sim1d: K=" << p.num_colors << ", L=" << p.domain_length << ", "
        << reps << " replications, final per-color density "
        << curve.mean_over_colors(times.size() - 1);
    res.report = rep.str();
    return res;
}

ExperimentResult do_sim2d(json cfg, int jobs) {
    check_keys(cfg, {"mode", "sigma", "rate", "colors", "side", "seed", "reps",
                     "times", "assignment"});
    Params2D p;
    p.sigma = get_num(cfg, "sigma", 1.0);
    p.rate = get_num(cfg, "rate", 1.0);
    p.num_colors = get_int(cfg, "colors", 1);
    p.domain_side = get_num(cfg, "side", 100.0);
    p.seed = static_cast<std::uint64_t>(get_int(cfg, "seed", 1));
    const int reps = get_int(cfg, "reps", 4);
    const std::string assign = get_str(cfg, "assignment", "uniform");
    const std::vector<double> times = get_ascending(cfg, "times");
    p.horizon = times.back();
    p.validate();

    cfg["sigma"] = p.sigma;
    cfg["rate"] = p.rate;
    cfg["colors"] = p.num_colors;
    cfg["side"] = p.domain_side;
    cfg["seed"] = get_int(cfg, "seed", 1);
    cfg["reps"] = reps;
    cfg["assignment"] = assign;

    const DensityCurve curve =
        run_replicated_2d(p, times, reps, jobs, assignment_from(assign));

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"time", "tau"};
    for (int c = 0; c < p.num_colors; ++c)
        res.table.columns.push_back("theta_c" + std::to_string(c));
    for (int c = 0; c < p.num_colors; ++c)
        res.table.columns.push_back("err_c" + std::to_string(c));
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::vector<double> row{times[i], p.kappa() * p.rate * times[i]};
        for (double v : curve.values[i]) row.push_back(v);
        for (double e : curve.errs[i]) row.push_back(e);
        res.table.rows.push_back(std::move(row));
    }
    std::ostringstream rep;
    rep << "sim2d: K=" << p.num_colors << ", side=" << p.domain_side << ", "
        << reps << " replications, final per-color coverage "
        << curve.mean_over_colors(times.size() - 1);
    res.report = rep.str();
    return res;
}

// ------------------------------------------------------------- solver modes

ExperimentResult do_solve1d_iter(json cfg) {
    check_keys(cfg, {"mode", "colors", "taus"});
    const int K = get_int(cfg, "colors", 1);
    const std::vector<double> taus = get_ascending(cfg, "taus");
    cfg["colors"] = K;

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"tau", "rho"};
    for (int k = 1; k <= K; ++k)
        res.table.columns.push_back("layer" + std::to_string(k));
    for (double tau : taus) {
        const std::vector<double> layers = sequential_densities(tau, K);
        std::vector<double> row{tau, density_iterative(tau, K)};
        for (double v : layers) row.push_back(v);
        res.table.rows.push_back(std::move(row));
    }
    res.report = "solve1d-iter: K=" + std::to_string(K) + ", " +
                 std::to_string(taus.size()) + " sample times";
    return res;
}

GapSolveOptions gap_options_from(const json& cfg) {
    GapSolveOptions opt;
    opt.rho0_sigma = get_num(cfg, "rho0_sigma", opt.rho0_sigma);
    opt.cells_per_sigma = get_int(cfg, "cells_per_sigma", opt.cells_per_sigma);
    opt.l_max_factor = get_num(cfg, "l_max_factor", opt.l_max_factor);
    opt.rtol = get_num(cfg, "rtol", opt.rtol);
    return opt;
}

void store_gap_options(json& cfg, const GapSolveOptions& opt) {
    cfg["rho0_sigma"] = opt.rho0_sigma;
    cfg["cells_per_sigma"] = opt.cells_per_sigma;
    cfg["l_max_factor"] = opt.l_max_factor;
    cfg["rtol"] = opt.rtol;
}

ExperimentResult do_solve1d_gap(json cfg) {
    check_keys(cfg, {"mode", "colors", "variant", "taus", "rho0_sigma",
                     "cells_per_sigma", "l_max_factor", "rtol"});
    const int K = get_int(cfg, "colors", 1);
    const std::string vname =
        get_str(cfg, "variant", K == 2 ? "exact-k2" : "generic");
    const AdmissionVariant variant = variant_from(vname, K);
    const std::vector<double> taus = get_ascending(cfg, "taus");
    GapSolveOptions opt = gap_options_from(cfg);
    cfg["colors"] = K;
    cfg["variant"] = vname;
    store_gap_options(cfg, opt);

    Params1D p;
    p.num_colors = K;
    const std::vector<GapSlice> slices =
        evolve_gap_density(p, variant, taus, opt);

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"tau", "rho"};
    for (std::size_t i = 0; i < slices.size(); ++i)
        res.table.rows.push_back({taus[i], density_from_gaps(slices[i])});
    res.report = "solve1d-gap: K=" + std::to_string(K) + ", variant=" + vname +
                 ", " + std::to_string(taus.size()) + " sample times";
    return res;
}

ExperimentResult do_solve1d_gap_profile(json cfg) {
    check_keys(cfg, {"mode", "colors", "variant", "taus", "keep_l_max",
                     "rho0_sigma", "cells_per_sigma", "l_max_factor", "rtol"});
    const int K = get_int(cfg, "colors", 2);
    const std::string vname =
        get_str(cfg, "variant", K == 2 ? "exact-k2" : "generic");
    const AdmissionVariant variant = variant_from(vname, K);
    const std::vector<double> taus = get_ascending(cfg, "taus");
    GapSolveOptions opt = gap_options_from(cfg);
    opt.keep_l_max = get_num(cfg, "keep_l_max", 6.0);
    cfg["colors"] = K;
    cfg["variant"] = vname;
    cfg["keep_l_max"] = opt.keep_l_max;
    store_gap_options(cfg, opt);

    Params1D p;
    p.num_colors = K;
    const std::vector<GapSlice> slices =
        evolve_gap_density(p, variant, taus, opt);

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"l"};
    for (double tau : taus) {
        std::ostringstream name;
        name << "G_tau" << tau;
        res.table.columns.push_back(name.str());
    }
    const std::size_t n = slices.front().l.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row{slices.front().l[i]};
        for (const auto& s : slices) row.push_back(s.G[i]);
        res.table.rows.push_back(std::move(row));
    }
    res.report = "solve1d-gap-profile: K=" + std::to_string(K) + ", variant=" +
                 vname + ", " + std::to_string(taus.size()) + " profiles";
    return res;
}

ExperimentResult do_solve2d(json cfg) {
    check_keys(cfg, {"mode", "colors", "taus"});
    const int K = get_int(cfg, "colors", 1);
    const std::vector<double> taus = get_ascending(cfg, "taus");
    cfg["colors"] = K;

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"tau", "theta"};
    for (int k = 1; k <= K; ++k)
        res.table.columns.push_back("layer" + std::to_string(k));
    for (double tau : taus) {
        const std::vector<double> layers = multilayer_layers_2d(tau, K);
        std::vector<double> row{tau, multilayer_density_2d(tau, K)};
        for (double v : layers) row.push_back(v);
        res.table.rows.push_back(std::move(row));
    }
    res.report = "solve2d: K=" + std::to_string(K) + ", " +
                 std::to_string(taus.size()) + " sample times";
    return res;
}

// ------------------------------------------------------------------- wifi

ExperimentResult do_plan_wifi(json cfg) {
    check_keys(cfg, {"mode", "power", "threshold", "alpha", "channels", "band",
                     "density", "target", "lambdas"});
    RadioParams radio;
    radio.transmit_power = get_num(cfg, "power", 1.0);
    radio.sensing_threshold = get_num(cfg, "threshold", 1e-8);
    radio.path_loss_exponent = get_num(cfg, "alpha", 4.0);
    if (cfg.contains("channels") && cfg.contains("band"))
        throw std::invalid_argument(
            "config: give either \"channels\" or \"band\", not both");
    int K;
    if (cfg.contains("band")) {
        const std::string band = get_str(cfg, "band", "");
        if (band == "2.4")
            K = band_channels(Band::ghz_2_4);
        else if (band == "5")
            K = band_channels(Band::ghz_5);
        else
            throw std::invalid_argument(
                "config: band must be \"2.4\" or \"5\", got \"" + band + "\"");
    } else {
        K = get_int(cfg, "channels", 1);
    }
    const double target = get_num(cfg, "target", kDefaultTargetFraction);
    cfg["power"] = radio.transmit_power;
    cfg["threshold"] = radio.sensing_threshold;
    cfg["alpha"] = radio.path_loss_exponent;
    cfg["channels"] = K;
    cfg.erase("band");
    cfg["target"] = target;

    ExperimentResult res;
    std::ostringstream rep;
    if (!path_loss_exponent_typical(radio.path_loss_exponent))
        rep << "warning: path-loss exponent " << radio.path_loss_exponent
            << " is outside the typical range [2, 6]\n";

    if (cfg.contains("lambdas")) {
        const std::vector<double> lams = get_ascending(cfg, "lambdas");
        cfg.erase("density");
        res.config_json = cfg.dump();
        res.table.columns = {"lambda", "d_inh"};
        for (const PlanPoint& p : plan_curve(lams, K, target))
            res.table.rows.push_back({p.ap_density, p.d_inh});
        rep << "plan-wifi curve: " << K << " channels, target " << target
            << " of jamming, " << lams.size() << " AP densities";
        res.report = rep.str();
        return res;
    }

    const double density = get_num(cfg, "density", 1.0);
    cfg["density"] = density;
    res.config_json = cfg.dump();
    const double d_radio = inhibition_distance(radio);
    PlanQuery query;
    query.ap_density = density;
    query.num_channels = K;
    query.target_fraction = target;
    const double d_plan = plan_dinh(query);
    const double u = d_plan * d_plan * density;
    const double coverage = coverage_at(d_radio, density, K);
    // The radio's inhibition distance meets the target when it is at least
    // the planned one (per-channel coverage increases with d_inh).
    const double feasible = d_radio >= d_plan ? 1.0 : 0.0;
    res.table.columns = {"radio_d_inh", "plan_d_inh", "u",
                         "tau",         "radio_coverage", "feasible"};
    res.table.rows.push_back({d_radio, d_plan, u,
                              0.25 * std::numbers::pi * u, coverage, feasible});
    rep << "plan-wifi: " << K << " channels, AP density " << density
        << ", target " << target << " of the jamming coverage\n"
        << "  radio inhibition distance: " << d_radio
        << " (per-channel coverage " << coverage << ")\n"
        << "  required inhibition distance: " << d_plan << "\n"
        << "  target is " << (feasible > 0 ? "MET" : "NOT MET")
        << " by the radio parameters at this density";
    res.report = rep.str();
    res.gates_passed = true;
    return res;
}

// ----------------------------------------------------------------- compare

double default_gate(const std::string& kind, int K) {
    if (kind == "gap") return 0.03;
    return K <= 2 ? 0.05 : 0.08;  // iter and 2d
}

ExperimentResult do_compare(json cfg, int jobs) {
    check_keys(cfg, {"mode", "kind", "colors", "taus", "variant", "seed",
                     "reps", "length", "side", "gate"});
    const std::string kind = get_str(cfg, "kind", "");
    if (kind != "gap" && kind != "iter" && kind != "2d")
        throw std::invalid_argument(
            "config: compare kind must be \"gap\", \"iter\" or \"2d\", got \"" +
            kind + "\"");
    const int K = get_int(cfg, "colors", 1);
    const std::vector<double> taus = get_ascending(cfg, "taus");
    const int seed = get_int(cfg, "seed", 1);
    const double gate = get_num(cfg, "gate", default_gate(kind, K));
    cfg["colors"] = K;
    cfg["seed"] = seed;
    cfg["gate"] = gate;

    DensityCurve sim;
    std::vector<double> ref(taus.size());  // per-color solver value
    std::string label;
    if (kind == "2d") {
        Params2D p;
        p.num_colors = K;
        p.domain_side = get_num(cfg, "side", 150.0);
        p.seed = static_cast<std::uint64_t>(seed);
        const int reps = get_int(cfg, "reps", 4);
        cfg["side"] = p.domain_side;
        cfg["reps"] = reps;
        std::vector<double> times(taus.size());
        for (std::size_t i = 0; i < taus.size(); ++i)
            times[i] = taus[i] / (p.kappa() * p.rate);
        p.horizon = times.back();
        p.validate();
        sim = run_replicated_2d(p, times, reps, jobs);
        for (std::size_t i = 0; i < taus.size(); ++i)
            ref[i] = multilayer_density_2d(taus[i], K);
        label = "solve2d";
    } else {
        Params1D p;
        p.num_colors = K;
        p.domain_length = get_num(cfg, "length", 5'000.0);
        p.seed = static_cast<std::uint64_t>(seed);
        const int reps = get_int(cfg, "reps", 8);
        cfg["length"] = p.domain_length;
        cfg["reps"] = reps;
        p.horizon = taus.back();  // sigma = rate = 1, so time = tau
        p.validate();
        sim = run_replicated_1d(p, taus, reps, jobs);
        if (kind == "iter") {
            for (std::size_t i = 0; i < taus.size(); ++i)
                ref[i] = density_iterative(taus[i], K);
            label = "solve1d-iter";
        } else {
            const std::string vname =
                get_str(cfg, "variant", K == 2 ? "exact-k2" : "generic");
            cfg["variant"] = vname;
            GapSolveOptions opt;
            const std::vector<GapSlice> slices =
                evolve_gap_density(p, variant_from(vname, K), taus, opt);
            for (std::size_t i = 0; i < taus.size(); ++i)
                ref[i] = density_from_gaps(slices[i]);
            label = "solve1d-gap (" + vname + ")";
        }
    }

    ExperimentResult res;
    res.config_json = cfg.dump();
    res.table.columns = {"tau", "sim", "err", "ref", "relerr"};
    double worst = 0.0, worst_tau = 0.0;
    std::size_t significant = 0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const double mean = sim.mean_over_colors(i);
        const double err = mean_err(sim, i);
        double relerr = std::numeric_limits<double>::quiet_NaN();
        if (mean > 10.0 * err && mean > 0) {
            relerr = std::fabs(mean - ref[i]) / mean;
            ++significant;
            if (relerr > worst) {
                worst = relerr;
                worst_tau = taus[i];
            }
        }
        res.table.rows.push_back({taus[i], mean, err, ref[i], relerr});
    }
    res.gates_passed = worst <= gate;
    std::ostringstream rep;
    rep << "compare sim vs " << label << ": K=" << K << ", " << significant
        << "/" << taus.size() << " sample times statistically significant\n";
    if (significant == 0)
        rep << "  no significant samples; nothing to gate";
    else
        rep << "  worst relative deviation " << worst << " at tau=" << worst_tau
            << " (gate " << gate << ") -> "
            << (res.gates_passed ? "PASS" : "FAIL");
    res.report = rep.str();
    return res;
}

// ----------------------------------------------------------------- figures

json figure_json(int id) {
    if (id < 4 || id > 9)
        throw std::invalid_argument(
            "figure: unknown id " + std::to_string(id) +
            " (supported: 4, 5, 6, 7, 8, 9)");
    json cfg;
    cfg["mode"] = "figure";
    cfg["id"] = id;
    return cfg;
}

ExperimentResult do_figure(json cfg, int jobs) {
    check_keys(cfg, {"mode", "id"});
    const int id = get_int(cfg, "id", 0);
    json canonical = figure_json(id);

    ExperimentResult res;
    res.config_json = canonical.dump();

    switch (id) {
        case 4: {
            // Gap-size profiles for K = 2 at three times.
            json sub;
            sub["mode"] = "solve1d-gap-profile";
            sub["colors"] = 2;
            sub["taus"] = {2.0, 6.0, 10.0};
            sub["keep_l_max"] = 6.0;
            ExperimentResult prof = do_solve1d_gap_profile(sub);
            res.table = std::move(prof.table);
            res.report = "figure 4: K=2 gap-length profiles at tau = 2, 6, 10";
            break;
        }
        case 5: {
            // K = 2 density vs tau: simulation, gap solver, iterative scheme.
            const std::vector<double> taus = log_grid(0.1, 100.0, 25);
            Params1D p;
            p.num_colors = 2;
            p.domain_length = 5'000.0;
            p.seed = 1;
            p.horizon = taus.back();
            const DensityCurve sim = run_replicated_1d(p, taus, 8, jobs);
            GapSolveOptions opt;
            const std::vector<GapSlice> slices = evolve_gap_density(
                p, AdmissionVariant::exact_k2, taus, opt);
            res.table.columns = {"tau", "sim_rho", "sim_err", "gap_rho",
                                 "iter_rho"};
            for (std::size_t i = 0; i < taus.size(); ++i)
                res.table.rows.push_back(
                    {taus[i], sim.mean_over_colors(i), mean_err(sim, i),
                     density_from_gaps(slices[i]),
                     density_iterative(taus[i], 2)});
            res.report =
                "figure 5: K=2 per-color density, simulation vs both schemes";
            break;
        }
        case 6:
        case 7: {
            // Density vs tau across K: iterative scheme (figure 6) or the
            // generic-K gap solver (figure 7), against simulation.
            const std::vector<int> ks = id == 6 ? std::vector<int>{2, 3, 4}
                                                : std::vector<int>{3, 4};
            const std::vector<double> taus = log_grid(0.1, 100.0, 25);
            res.table.columns = {"tau"};
            for (int K : ks) {
                const std::string suffix = "_k" + std::to_string(K);
                res.table.columns.push_back(
                    (id == 6 ? "iter" : "gap") + suffix);
                res.table.columns.push_back("sim" + suffix);
                res.table.columns.push_back("simerr" + suffix);
            }
            std::vector<std::vector<double>> cols;
            for (int K : ks) {
                Params1D p;
                p.num_colors = K;
                p.domain_length = 5'000.0;
                p.seed = 1;
                p.horizon = taus.back();
                const DensityCurve sim = run_replicated_1d(p, taus, 8, jobs);
                std::vector<double> refv(taus.size());
                if (id == 6) {
                    for (std::size_t i = 0; i < taus.size(); ++i)
                        refv[i] = density_iterative(taus[i], K);
                } else {
                    GapSolveOptions opt;
                    const std::vector<GapSlice> slices = evolve_gap_density(
                        p, AdmissionVariant::generic_k, taus, opt);
                    for (std::size_t i = 0; i < taus.size(); ++i)
                        refv[i] = density_from_gaps(slices[i]);
                }
                std::vector<double> simv(taus.size()), errv(taus.size());
                for (std::size_t i = 0; i < taus.size(); ++i) {
                    simv[i] = sim.mean_over_colors(i);
                    errv[i] = mean_err(sim, i);
                }
                cols.push_back(std::move(refv));
                cols.push_back(std::move(simv));
                cols.push_back(std::move(errv));
            }
            for (std::size_t i = 0; i < taus.size(); ++i) {
                std::vector<double> row{taus[i]};
                for (const auto& col : cols) row.push_back(col[i]);
                res.table.rows.push_back(std::move(row));
            }
            res.report = id == 6
                             ? "figure 6: iterative scheme vs simulation, K=2,3,4"
                             : "figure 7: generic-K gap solver vs simulation, "
                               "K=3,4";
            break;
        }
        case 8: {
            // 2D coverage vs tau for K = 1..4, analytic scheme vs simulation.
            const std::vector<double> taus = log_grid(0.25, 20.0, 16);
            res.table.columns = {"tau"};
            for (int K = 1; K <= 4; ++K) {
                const std::string suffix = "_k" + std::to_string(K);
                res.table.columns.push_back("theta" + suffix);
                res.table.columns.push_back("sim" + suffix);
                res.table.columns.push_back("simerr" + suffix);
            }
            std::vector<std::vector<double>> cols;
            for (int K = 1; K <= 4; ++K) {
                Params2D p;
                p.num_colors = K;
                p.domain_side = 150.0;
                p.seed = 1;
                std::vector<double> times(taus.size());
                for (std::size_t i = 0; i < taus.size(); ++i)
                    times[i] = taus[i] / p.kappa();
                p.horizon = times.back();
                const DensityCurve sim = run_replicated_2d(p, times, 4, jobs);
                std::vector<double> refv(taus.size()), simv(taus.size()),
                    errv(taus.size());
                for (std::size_t i = 0; i < taus.size(); ++i) {
                    refv[i] = multilayer_density_2d(taus[i], K);
                    simv[i] = sim.mean_over_colors(i);
                    errv[i] = mean_err(sim, i);
                }
                cols.push_back(std::move(refv));
                cols.push_back(std::move(simv));
                cols.push_back(std::move(errv));
            }
            for (std::size_t i = 0; i < taus.size(); ++i) {
                std::vector<double> row{taus[i]};
                for (const auto& col : cols) row.push_back(col[i]);
                res.table.rows.push_back(std::move(row));
            }
            res.report = "figure 8: 2D per-color coverage, analytic vs "
                         "simulation, K=1..4";
            break;
        }
        case 9: {
            // Planner curves: inhibition distance vs AP density for both
            // bands at 70% of the jamming coverage.
            const std::vector<double> lams = log_grid(0.01, 100.0, 41);
            res.table.columns = {"lambda", "dinh_k11", "dinh_k23"};
            const auto c11 =
                plan_curve(lams, band_channels(Band::ghz_2_4), 0.7);
            const auto c23 = plan_curve(lams, band_channels(Band::ghz_5), 0.7);
            for (std::size_t i = 0; i < lams.size(); ++i)
                res.table.rows.push_back(
                    {lams[i], c11[i].d_inh, c23[i].d_inh});
            res.report = "figure 9: inhibition distance vs AP density at 70% "
                         "of jamming, 11 and 23 channels";
            break;
        }
        default:
            break;  // unreachable; figure_json validated the id
    }
    return res;
}

}  // namespace

ExperimentResult run_experiment(const std::string& config_json, int jobs) {
    if (jobs < 1)
        throw std::invalid_argument("run_experiment: jobs must be >= 1");
    json cfg = parse_object(config_json);
    const std::string mode = get_str(cfg, "mode", "");
    if (mode == "sim1d") return do_sim1d(std::move(cfg), jobs);
    if (mode == "sim2d") return do_sim2d(std::move(cfg), jobs);
    if (mode == "solve1d-iter") return do_solve1d_iter(std::move(cfg));
    if (mode == "solve1d-gap") return do_solve1d_gap(std::move(cfg));
    if (mode == "solve1d-gap-profile")
        return do_solve1d_gap_profile(std::move(cfg));
    if (mode == "solve2d") return do_solve2d(std::move(cfg));
    if (mode == "plan-wifi") return do_plan_wifi(std::move(cfg));
    if (mode == "compare") return do_compare(std::move(cfg), jobs);
    if (mode == "figure") return do_figure(std::move(cfg), jobs);
    throw std::invalid_argument(
        "config: unknown mode \"" + mode +
        "\" (supported: sim1d, sim2d, solve1d-iter, solve1d-gap, "
        "solve1d-gap-profile, solve2d, plan-wifi, compare, figure)");
}

std::string figure_config(int figure_id) { return figure_json(figure_id).dump(); }

}  // namespace mlrsa
