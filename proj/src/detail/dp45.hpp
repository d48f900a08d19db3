#pragma once

// Dormand-Prince 5(4) adaptive stepper, library-internal.  Shared by the
// kernel-table builders and the 2D kinetics solver; the gap-density solver
// reuses the tableau with its own integrating-factor stage loop.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mlrsa::detail {

// Dormand-Prince coefficients.
inline constexpr double kDpC[7] = {0.0,    1.0 / 5, 3.0 / 10, 4.0 / 5,
                                   8.0 / 9, 1.0,    1.0};
inline constexpr double kDpA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
// 5th-order weights equal the last tableau row (FSAL); 4th-order weights:
inline constexpr double kDpB5[7] = {35.0 / 384,    0.0,          500.0 / 1113,
                                    125.0 / 192,   -2187.0 / 6784, 11.0 / 84,
                                    0.0};
inline constexpr double kDpB4[7] = {5179.0 / 57600,  0.0,
                                    7571.0 / 16695,  393.0 / 640,
                                    -92097.0 / 339200, 187.0 / 2100,
                                    1.0 / 40};

struct OdeOptions {
    double rtol = 1e-6;
    double atol = 1e-12;
    double h0 = 1e-4;
    std::size_t max_steps = 20'000'000;
};

/// Integrates y' = f(t, y) from t0, stepping exactly onto each entry of
/// `sample_times` (ascending, all >= t0) and invoking on_sample(t, y) there.
/// Throws std::runtime_error on step-count exhaustion or step underflow.
inline void integrate_dp45(
    const std::function<void(double, const std::vector<double>&,
                             std::vector<double>&)>& f,
    std::vector<double> y, double t0, const std::vector<double>& sample_times,
    const std::function<void(double, const std::vector<double>&)>& on_sample,
    const OdeOptions& opt = {}) {
    const std::size_t n = y.size();
    std::vector<std::vector<double>> k(7, std::vector<double>(n));
    std::vector<double> ytmp(n), y5(n), y4(n);

    double t = t0;
    double h = opt.h0;  // working (unclipped) step size
    std::size_t next_sample = 0;
    std::size_t steps = 0;

    auto emit = [&](double ts) {
        on_sample(ts, y);
        ++next_sample;
        while (next_sample < sample_times.size() &&
               sample_times[next_sample] == ts) {
            on_sample(ts, y);
            ++next_sample;
        }
    };

    while (next_sample < sample_times.size() && sample_times[next_sample] <= t0)
        emit(sample_times[next_sample]);
    if (next_sample >= sample_times.size()) return;

    f(t, y, k[0]);
    while (next_sample < sample_times.size()) {
        const double t_target = sample_times[next_sample];
        const bool clipped = t + h >= t_target;
        const double hs = clipped ? t_target - t : h;
        if (++steps > opt.max_steps)
            throw std::runtime_error("integrate_dp45: step budget exhausted");
        if (!(hs > 0) || t + hs == t)
            throw std::runtime_error("integrate_dp45: step size underflow");

        for (int s = 1; s < 7; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                double acc = y[i];
                for (int m = 0; m < s; ++m) acc += hs * kDpA[s][m] * k[m][i];
                ytmp[i] = acc;
            }
            f(t + kDpC[s] * hs, ytmp, k[s]);
        }
        double err = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc5 = y[i], acc4 = y[i];
            for (int s = 0; s < 7; ++s) {
                acc5 += hs * kDpB5[s] * k[s][i];
                acc4 += hs * kDpB4[s] * k[s][i];
            }
            y5[i] = acc5;
            y4[i] = acc4;
            const double scale =
                opt.atol + opt.rtol * std::max(std::fabs(y[i]), std::fabs(acc5));
            const double e = (acc5 - acc4) / scale;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(n));

        const double fac = err > 0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0)
                                   : 5.0;
        if (err <= 1.0) {
            t = clipped ? t_target : t + hs;
            y.swap(y5);
            k[0].swap(k[6]);  // FSAL: stage 7 is f at the accepted point
            if (clipped) emit(t);
            // Never let a short clipped step shrink the working step.
            h = clipped ? std::max(h, hs * fac) : hs * fac;
        } else {
            h = hs * fac;  // shrink and retry (k[0] still valid at (t, y))
        }
    }
}

}  // namespace mlrsa::detail
