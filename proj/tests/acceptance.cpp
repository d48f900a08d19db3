// Acceptance suite: one numbered criterion per run_* function, each printing
// a single [PASS]/[FAIL] verdict line with the measured values and the pinned
// tolerance.  Run with no arguments for all criteria, or pass criterion
// numbers (e.g. "acceptance 4 9").

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mlrsa/gap_solver.hpp"
#include "mlrsa/kinetics2d.hpp"
#include "mlrsa/renyi.hpp"
#include "mlrsa/rng.hpp"
#include "mlrsa/sim1d.hpp"
#include "mlrsa/sim2d.hpp"
#include "mlrsa/types.hpp"
#include "mlrsa/wifi.hpp"

using namespace mlrsa;

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void verdict(bool pass, int id, const char* fmt, ...) {
    std::printf("[%s] c%02d ", pass ? "PASS" : "FAIL", id);
    va_list ap;
    va_start(ap, fmt);
    std::vprintf(fmt, ap);
    va_end(ap);
    std::printf("\n");
}

Params1D params1(int K, double L, double horizon, std::uint64_t seed) {
    Params1D p;
    p.num_colors = K;
    p.domain_length = L;
    p.horizon = horizon;
    p.seed = seed;
    return p;
}

Params2D params2(int K, double side, double tau_max, std::uint64_t seed) {
    Params2D p;
    p.num_colors = K;
    p.domain_side = side;
    p.horizon = tau_max / (p.rate * p.kappa());
    p.seed = seed;
    return p;
}

double max_rel_vs_gap(const DensityCurve& sim, const std::vector<GapSlice>& gap,
                      double sigma) {
    double worst = 0;
    for (std::size_t i = 0; i < sim.num_samples(); ++i) {
        const double ref = sigma * density_from_gaps(gap[i]);
        for (int c = 0; c < sim.num_colors; ++c)
            worst = std::max(worst, std::fabs(sim.values[i][c] - ref) / ref);
    }
    return worst;
}

// ---- criterion 1: 1D monolayer sim vs analytic filling curve ----
bool c01() {
    const std::vector<double> taus = {1, 2, 5, 10, 50, 500};
    Params1D p = params1(1, 1e4, 500.0, 101);
    DensityCurve c = run_replicated_1d(p, taus, 20);
    double worst = 0;
    for (std::size_t i = 0; i + 1 < taus.size(); ++i) {
        double ref = renyi_F(taus[i]);
        worst = std::max(worst, std::fabs(c.values[i][0] - ref) / ref);
    }
    const double jam = c.values[5][0];
    const bool pass = worst <= 0.01 && std::fabs(jam - 0.7476) <= 0.005;
    verdict(pass, 1,
            "1D monolayer sim vs filling curve: max rel err %.3g%% (tol 1%%) on "
            "tau in {1..50}; sigma*rho(500) = %.5f (want 0.7476 +/- 0.005)",
            100 * worst, jam);
    return pass;
}

// ---- criterion 2: gap solver collapses onto the monolayer curve at K=1 ----
bool c02() {
    const std::vector<double> taus = {0.05, 0.1, 0.2, 0.5, 1, 2,
                                      3,    5,   7,   10,  14, 20};
    Params1D p = params1(1, 1e4, 0.0, 0);
    auto slices = evolve_gap_density(p, AdmissionVariant::generic_k, taus);
    double worst = 0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        double ref = renyi_F(taus[i]);
        worst = std::max(worst,
                         std::fabs(density_from_gaps(slices[i]) - ref) / ref);
    }
    const bool pass = worst <= 0.005;
    verdict(pass, 2,
            "gap solver K=1 vs filling curve: max rel err %.3g%% (tol 0.5%%) "
            "over tau in [0.05, 20]",
            100 * worst);
    return pass;
}

// ---- criterion 3: torus-partition mass conservation to tau = 100 ----
bool c03() {
    const std::vector<double> taus = {0.1, 0.5, 1, 2, 5, 10, 20, 50, 100};
    Params1D p = params1(2, 1e4, 0.0, 0);
    auto slices = evolve_gap_density(p, AdmissionVariant::exact_k2, taus);
    const double m0 = gap_mass(slices.front());
    double drift = 0;
    for (const GapSlice& s : slices)
        drift = std::max(drift, std::fabs(gap_mass(s) - m0) / m0);
    const bool pass = drift <= 1e-4;
    verdict(pass, 3,
            "mass conservation to tau = 100 (K=2 exact factor): max relative "
            "drift %.3g (tol 1e-4)",
            drift);
    return pass;
}

// ---- criterion 4: two-color gap method vs simulation ----
bool c04() {
    const std::vector<double> taus = {0.5, 1, 2, 3, 5, 7, 10};
    Params1D p = params1(2, 1e4, 10.0, 202);
    DensityCurve sim = run_replicated_1d(p, taus, 20);
    auto gap = evolve_gap_density(p, AdmissionVariant::exact_k2, taus);
    const double worst = max_rel_vs_gap(sim, gap, p.sigma);
    const bool pass = worst <= 0.03;
    verdict(pass, 4,
            "K=2 gap method vs sim: max per-color rel err %.3g%% (tol 3%%) "
            "over tau in [0.5, 10], L = 1e4 sigma, 20 reps",
            100 * worst);
    return pass;
}

// ---- criterion 5: generic-K gap method vs simulation, K = 3 and 4 ----
bool c05() {
    const std::vector<double> taus = {0.5, 1, 2, 3, 5, 7, 10};
    bool pass = true;
    double w[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
        const int K = 3 + i;
        Params1D p = params1(K, 1e4, 10.0, 202 + K);
        DensityCurve sim = run_replicated_1d(p, taus, 20);
        auto gap = evolve_gap_density(p, AdmissionVariant::generic_k, taus);
        w[i] = max_rel_vs_gap(sim, gap, p.sigma);
        pass = pass && w[i] <= 0.03;
    }
    verdict(pass, 5,
            "generic-K gap method vs sim: max rel err K=3 %.3g%%, K=4 %.3g%% "
            "(tol 3%%) over tau in [0.5, 10]",
            100 * w[0], 100 * w[1]);
    return pass;
}

// ---- criterion 6: iterative method vs simulation, K = 2, 3, 4 ----
bool c06() {
    const std::vector<double> taus = {0.5, 1, 2, 3, 5, 7, 10};
    double w[3] = {0, 0, 0};
    const double gate[3] = {0.05, 0.08, 0.08};
    bool pass = true;
    for (int i = 0; i < 3; ++i) {
        const int K = 2 + i;
        Params1D p = params1(K, 1e4, 10.0, 302 + K);
        DensityCurve sim = run_replicated_1d(p, taus, 20);
        for (std::size_t s = 0; s < taus.size(); ++s) {
            const double ref = density_iterative(taus[s], K);
            for (int c = 0; c < K; ++c)
                w[i] = std::max(w[i],
                                std::fabs(sim.values[s][c] - ref) / ref);
        }
        pass = pass && w[i] <= gate[i];
    }
    verdict(pass, 6,
            "iterative method vs sim: max rel err K=2 %.3g%% (tol 5%%), "
            "K=3 %.3g%%, K=4 %.3g%% (tol 8%%)",
            100 * w[0], 100 * w[1], 100 * w[2]);
    return pass;
}

// ---- criterion 7: gap profile shifts toward short gaps, solver and sim ----
bool c07() {
    const std::vector<double> taus = {2, 6, 10};
    Params1D ps = params1(2, 1e4, 0.0, 0);
    auto slices = evolve_gap_density(ps, AdmissionVariant::exact_k2, taus);
    double solver_frac[3];
    for (int i = 0; i < 3; ++i) solver_frac[i] = short_gap_fraction(slices[i]);

    Params1D p = params1(2, 2e4, 10.0, 404);
    Deposition1D st(p);
    Rng rng(p.seed);
    auto arrivals = generate_arrivals(p, rng, 20'000'000);
    double sim_frac[3];
    std::size_t next = 0;
    for (int i = 0; i < 3; ++i) {
        while (next < arrivals.size() && arrivals[next].t <= taus[i]) {
            st.try_deposit(arrivals[next].t, arrivals[next].x, rng);
            ++next;
        }
        double frac = 0;
        for (ColorId c = 0; c < 2; ++c) {
            auto gaps = st.gap_lengths(c);
            std::size_t shortg = 0;
            for (double g : gaps)
                if (g < p.sigma) ++shortg;
            frac += static_cast<double>(shortg) / static_cast<double>(gaps.size());
        }
        sim_frac[i] = frac / 2;
    }
    const bool solver_ok = solver_frac[0] < solver_frac[1] &&
                           solver_frac[1] < solver_frac[2];
    const bool sim_ok = sim_frac[0] < sim_frac[1] && sim_frac[1] < sim_frac[2];
    verdict(solver_ok && sim_ok, 7,
            "short-gap fraction rises across tau = {2, 6, 10}: solver "
            "%.4f -> %.4f -> %.4f, sim %.4f -> %.4f -> %.4f",
            solver_frac[0], solver_frac[1], solver_frac[2], sim_frac[0],
            sim_frac[1], sim_frac[2]);
    return solver_ok && sim_ok;
}

// ---- criterion 8: 2D monolayer saturation and kinetic-curve match ----
bool c08() {
    const Monolayer2D& mono = Monolayer2D::standard();
    const double th500 = mono.theta(500.0);
    const bool sat_ok = std::fabs(th500 - 0.5474) <= 1e-3;

    const std::vector<double> taus = {0.1, 0.5, 1, 2, 5, 10, 15, 20};
    Params2D p = params2(1, 100.0, 20.0, 505);
    std::vector<double> times(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i)
        times[i] = taus[i] / (p.rate * p.kappa());
    DensityCurve c = run_replicated_2d(p, times, 10);
    double worst = 0;
    for (std::size_t i = 0; i < taus.size(); ++i)
        worst = std::max(worst,
                         std::fabs(c.values[i][0] - mono.theta(taus[i])));
    const bool match_ok = worst <= 0.01;

    verdict(sat_ok && match_ok, 8,
            "2D monolayer: theta(500) = %.6f (want 0.5474 +/- 1e-3, "
            "theta(1e5) = %.6f for reference) %s; sim vs curve max abs diff "
            "%.4f (tol 0.01) %s",
            th500, mono.theta(1e5), sat_ok ? "ok" : "MISSED", worst,
            match_ok ? "ok" : "MISSED");
    return sat_ok && match_ok;
}

// ---- criterion 9: 2D multilayer analytic vs simulation, K = 2, 3, 4 ----
bool c09() {
    const std::vector<double> taus = {0.5, 1, 2, 5, 10, 20};
    bool pass = true;
    double w[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        const int K = 2 + i;
        Params2D p = params2(K, 100.0, 20.0, 606 + K);
        std::vector<double> times(taus.size());
        for (std::size_t s = 0; s < taus.size(); ++s)
            times[s] = taus[s] / (p.rate * p.kappa());
        DensityCurve sim = run_replicated_2d(p, times, 10);
        for (std::size_t s = 0; s < taus.size(); ++s) {
            const double ref = multilayer_density_2d(taus[s], K);
            for (int c = 0; c < K; ++c)
                w[i] = std::max(w[i],
                                std::fabs(sim.values[s][c] - ref) / ref);
        }
        pass = pass && w[i] <= 0.05;
    }
    verdict(pass, 9,
            "2D multilayer analytic vs sim: max per-color rel err K=2 %.3g%%, "
            "K=3 %.3g%%, K=4 %.3g%% (tol 5%%) over tau in [0.5, 20]",
            100 * w[0], 100 * w[1], 100 * w[2]);
    return pass;
}

// ---- criterion 10: channel-planner laws ----
bool c10() {
    std::vector<double> lambdas;
    for (int i = 0; i <= 8; ++i) lambdas.push_back(0.1 * std::pow(10.0, i / 4.0));
    auto c11ch = plan_curve(lambdas, 11, 0.7);
    auto c23ch = plan_curve(lambdas, 23, 0.7);
    bool monotone = true, dominance = true;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i > 0 && c11ch[i].d_inh > c11ch[i - 1].d_inh) monotone = false;
        if (c23ch[i].d_inh < c11ch[i].d_inh) dominance = false;
    }

    PlanQuery q;
    q.num_channels = 11;
    q.ap_density = 1.0;
    const double d1 = plan_dinh(q);
    q.ap_density = 2.0;
    const double d2 = plan_dinh(q);
    const double sqrt2_err = std::fabs(d1 / d2 - std::sqrt(2.0));
    const bool scaling = sqrt2_err <= 1e-13;

    double worst_cons = 0;
    const int ks[3] = {1, 11, 23};
    const double ls[3] = {0.5, 1.0, 4.0};
    for (int i = 0; i < 3; ++i) {
        PlanQuery s;
        s.num_channels = ks[i];
        s.ap_density = ls[i];
        const double d = plan_dinh(s);
        worst_cons = std::max(
            worst_cons,
            std::fabs(coverage_at(d, s.ap_density, s.num_channels) -
                      0.7 * 0.5474));
    }
    const bool consistent = worst_cons <= 1e-6;

    const bool pass = monotone && dominance && scaling && consistent;
    verdict(pass, 10,
            "planner laws: d_inh monotone %s, K=23 dominates K=11 %s, sqrt(2) "
            "scaling err %.2g (tol 1e-13), self-consistency err %.2g "
            "(tol 1e-6)",
            monotone ? "yes" : "NO", dominance ? "yes" : "NO", sqrt2_err,
            worst_cons);
    return pass;
}

// ---- criterion 11: property battery ----
bool c11() {
    bool ok = true;
    std::string fail;

    // per-color hard core, 1D
    {
        Params1D p = params1(2, 500.0, 20.0, 701);
        Deposition1D st(p);
        Rng rng(p.seed);
        for (const Arrival1D& a : generate_arrivals(p, rng))
            st.try_deposit(a.t, a.x, rng);
        for (ColorId c = 0; c < 2 && ok; ++c) {
            const auto& v = st.positions(c);
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i + 1] - v[i] < p.sigma) ok = false;
            if (v.size() >= 2 && v.front() + p.domain_length - v.back() < p.sigma)
                ok = false;
        }
        if (!ok) fail = "1D hard core";
    }
    // per-color hard core, 2D (grid neighbor structure)
    if (ok) {
        Params2D p = params2(2, 40.0, 5.0, 702);
        Deposition2D st(p);
        Rng rng(p.seed);
        double t = 0;
        const double area_rate = p.rate * p.domain_side * p.domain_side;
        while (true) {
            t += rng.exponential(area_rate);
            if (t > p.horizon) break;
            st.try_deposit(t, rng.uniform(0.0, p.domain_side),
                           rng.uniform(0.0, p.domain_side), rng);
        }
        ok = st.verify_hard_core();
        if (!ok) fail = "2D hard core";
    }
    // color exchangeability at 3 sigma, 1D and 2D
    if (ok) {
        Params1D p = params1(3, 5000.0, 5.0, 703);
        DensityCurve c = run_replicated_1d(p, {5.0}, 8);
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const double se = std::hypot(c.errs[0][a], c.errs[0][b]);
                if (std::fabs(c.values[0][a] - c.values[0][b]) > 3 * se)
                    ok = false;
            }
        if (!ok) fail = "1D exchangeability";
    }
    if (ok) {
        Params2D p = params2(2, 60.0, 3.0, 704);
        DensityCurve c = run_replicated_2d(p, {p.horizon}, 6);
        const double se = std::hypot(c.errs[0][0], c.errs[0][1]);
        ok = std::fabs(c.values[0][0] - c.values[0][1]) <= 3 * se;
        if (!ok) fail = "2D exchangeability";
    }
    // monotone curves: simulated counts never decrease; analytic curves rise
    if (ok) {
        Params1D p = params1(2, 2000.0, 10.0, 705);
        DensityCurve c = run_sim_1d(p, {1, 2, 4, 6, 8, 10});
        for (std::size_t i = 1; i < c.num_samples() && ok; ++i)
            for (int col = 0; col < 2; ++col)
                if (c.values[i][col] < c.values[i - 1][col]) ok = false;
        double prev1 = -1, prev2 = -1;
        for (double tau : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
            if (renyi_F(tau) <= prev1) ok = false;
            if (multilayer_density_2d(tau, 3) <= prev2) ok = false;
            prev1 = renyi_F(tau);
            prev2 = multilayer_density_2d(tau, 3);
        }
        if (!ok) fail = "monotone curves";
    }
    // grid vs brute-force neighbor search
    if (ok) {
        Params2D p = params2(2, 30.0, 3.0, 706);
        DensityCurve g = run_sim_2d(p, {p.horizon}, Assignment::uniform_random,
                                    0, NeighborMethod::grid);
        DensityCurve b = run_sim_2d(p, {p.horizon}, Assignment::uniform_random,
                                    0, NeighborMethod::brute_force);
        ok = g.values == b.values;
        if (!ok) fail = "grid vs brute force";
    }
    // admission-factor limits and variant ordering
    if (ok) {
        for (int K = 1; K <= 6 && ok; ++K) {
            if (std::fabs(admission_factor(0.0, K, AdmissionVariant::generic_k) -
                          1.0 / K) > 1e-14)
                ok = false;
            if (admission_factor(1e8, K, AdmissionVariant::generic_k) <
                1.0 - 1e-6)
                ok = false;
        }
        for (double t2 = 0; t2 <= 20.0 && ok; t2 += 0.1) {
            const double e = admission_factor(t2, 2, AdmissionVariant::exact_k2);
            const double g = admission_factor(t2, 2, AdmissionVariant::generic_k);
            if (e < g - 1e-14 || e > 1.0 + 1e-14) ok = false;
        }
        if (!ok) fail = "admission-factor limits";
    }

    verdict(ok, 11, "property battery (hard core, exchangeability, "
                    "monotonicity, neighbor equivalence, factor limits)%s%s",
            ok ? "" : ": first failure = ", ok ? "" : fail.c_str());
    return ok;
}

struct Entry {
    int id;
    bool (*fn)();
};

}  // namespace

int main(int argc, char** argv) {
    const Entry all[] = {{1, c01}, {2, c02}, {3, c03}, {4, c04},
                         {5, c05}, {6, c06}, {7, c07}, {8, c08},
                         {9, c09}, {10, c10}, {11, c11}};
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int ran = 0, passed = 0;
    for (const Entry& e : all) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), e.id) == wanted.end())
            continue;
        const double t0 = now_s();
        const bool ok = e.fn();
        std::printf("       c%02d elapsed %.1fs\n", e.id, now_s() - t0);
        ++ran;
        if (ok) ++passed;
    }
    std::printf("acceptance: %d/%d criteria passed\n", passed, ran);
    return passed == ran ? 0 : 1;
}
