#include "mlrsa/gap_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "detail/dp45.hpp"
#include "mlrsa/quadrature.hpp"

namespace mlrsa {

namespace {

// Relative floor below which grid values are treated as exact zeros (lets the
// active window shrink once the long-gap tail has been destroyed).
constexpr double kClampRel = 1e-16;
// Positivity guard: any value below -1e-10 * max G is scheme instability.
constexpr double kNegAbortRel = -1e-10;

// 4th-order closed quadrature over m consecutive samples with spacing dl
// (composite "13-rule": one-sided cubic end segments, 4-point interior rule).
double integral4(const double* f, std::size_t m, double dl) {
    if (m < 2) return 0.0;
    if (m == 2) return 0.5 * dl * (f[0] + f[1]);
    if (m == 3) return dl / 3.0 * (f[0] + 4.0 * f[1] + f[2]);
    double s = 9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3];
    s += f[m - 4] - 5.0 * f[m - 3] + 19.0 * f[m - 2] + 9.0 * f[m - 1];
    for (std::size_t j = 1; j + 2 < m; ++j)
        s += -f[j - 1] + 13.0 * f[j] + 13.0 * f[j + 1] - f[j + 2];
    return s * dl / 24.0;
}

// dst[i] = 2 * Int_{l_i + sigma}^{l_max} src dy on the active window, using
// per-segment 4th-order integrals accumulated from the right.  M = sigma/dl.
void creation_term(const double* src, std::size_t hi, std::size_t M, double dl,
                   double* dst, double* seg) {
    if (hi < 4) {
        std::fill(dst, dst + hi, 0.0);
        return;
    }
    const std::size_t nseg = hi - 1;  // segments [l_j, l_{j+1}], j < nseg
    seg[0] = 9.0 * src[0] + 19.0 * src[1] - 5.0 * src[2] + src[3];
    for (std::size_t j = 1; j + 1 < nseg; ++j)
        seg[j] = -src[j - 1] + 13.0 * src[j] + 13.0 * src[j + 1] - src[j + 2];
    seg[nseg - 1] = src[hi - 4] - 5.0 * src[hi - 3] + 19.0 * src[hi - 2] +
                    9.0 * src[hi - 1];
    // reverse cumulative sum: seg[j] <- sum_{m >= j} seg[m]
    double run = 0.0;
    for (std::size_t j = nseg; j-- > 0;) {
        run += seg[j];
        seg[j] = run;
    }
    const double scale = 2.0 * dl / 24.0;
    for (std::size_t i = 0; i < hi; ++i)
        dst[i] = (i + M < nseg) ? scale * seg[i + M] : 0.0;
}

// dst[i] (= or +=) coeff * exp(-a_i * delta) * src[i] over [0, hi), where
// a_i = max(l_i - sigma, 0).  The exponential is advanced by a one-multiply
// recurrence along the uniform grid.
template <bool Assign>
void decay_term(double* dst, const double* src, double coeff, double delta,
                double dl, std::size_t M, std::size_t hi) {
    auto put = [&](std::size_t i, double v) {
        if constexpr (Assign)
            dst[i] = v;
        else
            dst[i] += v;
    };
    if (delta <= 0.0) {
        for (std::size_t i = 0; i < hi; ++i) put(i, coeff * src[i]);
        return;
    }
    const std::size_t m0 = std::min(M + 1, hi);
    for (std::size_t i = 0; i < m0; ++i) put(i, coeff * src[i]);
    const double r = std::exp(-dl * delta);
    double w = r;
    for (std::size_t i = m0; i < hi; ++i) {
        put(i, coeff * w * src[i]);
        w *= r;
        if (w < 1e-290) {
            if constexpr (Assign)
                for (std::size_t j = i + 1; j < hi; ++j) dst[j] = 0.0;
            return;
        }
    }
}

}  // namespace

double admission_factor(double tau2, int K, AdmissionVariant variant) {
    if (!(tau2 >= 0))
        throw std::invalid_argument("admission_factor: requires tau2 >= 0");
    if (K < 1) throw std::invalid_argument("admission_factor: requires K >= 1");
    if (variant == AdmissionVariant::exact_k2) {
        if (K != 2)
            throw std::invalid_argument(
                "admission_factor: exact_k2 variant requires K = 2");
        const double q = (5.0 / 72.0) * tau2 * tau2;
        return (1.0 + tau2 + q) / (2.0 + tau2 + q);
    }
    // generic K: [sum_{n<K} t^n/n!] / [sum_{n<K} (K-n) t^n/n!], evaluated with
    // the largest term normalized out so large tau2 cannot overflow.
    double num = 0.0, den = 0.0;
    if (tau2 < static_cast<double>(K)) {
        double t = 1.0;  // tau2^n / n!
        for (int n = 0; n < K; ++n) {
            num += t;
            den += (K - n) * t;
            t *= tau2 / (n + 1);
        }
    } else {
        double t = 1.0;  // tau2^n/n! relative to the n = K-1 term
        for (int n = K - 1; n >= 0; --n) {
            num += t;
            den += (K - n) * t;
            t *= n / tau2;
        }
    }
    return num / den;
}

std::vector<double> seed_gap_density(double rho0, double sigma,
                                     const std::vector<double>& l_grid) {
    if (!(sigma > 0))
        throw std::invalid_argument("seed_gap_density: sigma must be > 0");
    if (!(rho0 > 0) || rho0 * sigma > 0.02)
        throw std::invalid_argument(
            "seed_gap_density: requires 0 < rho0*sigma <= 0.02 (low-coverage "
            "seed only)");
    std::vector<double> G(l_grid.size());
    const double amp = rho0 * rho0 / (1.0 + sigma * rho0);
    for (std::size_t i = 0; i < l_grid.size(); ++i)
        G[i] = amp * std::exp(-rho0 * l_grid[i]);
    return G;
}

std::vector<GapSlice> evolve_gap_density(const Params1D& params,
                                         AdmissionVariant variant,
                                         const std::vector<double>& tau_samples,
                                         const GapSolveOptions& opt) {
    if (!(params.sigma > 0))
        throw std::invalid_argument("evolve_gap_density: sigma must be > 0");
    const int K = params.num_colors;
    admission_factor(0.0, K, variant);  // validates K and the variant pairing
    const double rho0 = opt.rho0_sigma; // internal units: sigma = 1
    if (!(rho0 > 0 && rho0 <= 0.02))
        throw std::invalid_argument(
            "evolve_gap_density: rho0_sigma must be in (0, 0.02]");
    if (opt.cells_per_sigma < 50)
        throw std::invalid_argument(
            "evolve_gap_density: cells_per_sigma too coarse (need >= 50)");
    if (!(opt.rtol > 0 && opt.rtol < 1e-2))
        throw std::invalid_argument("evolve_gap_density: rtol out of range");

    const double tau0 = K * rho0;
    for (std::size_t i = 0; i < tau_samples.size(); ++i) {
        if (!(tau_samples[i] >= tau0))
            throw std::invalid_argument(
                "evolve_gap_density: sample times must be >= the seed time "
                "tau0 = K * rho0_sigma = " +
                std::to_string(tau0));
        if (i > 0 && tau_samples[i] < tau_samples[i - 1])
            throw std::invalid_argument(
                "evolve_gap_density: sample times must be ascending");
    }

    const std::size_t M = static_cast<std::size_t>(opt.cells_per_sigma);
    const double dl = 1.0 / static_cast<double>(M);
    const double l_max = opt.l_max_factor / rho0;
    const std::size_t n = static_cast<std::size_t>(std::llround(l_max * M)) + 1;

    std::vector<double> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<double>(i) * dl;
    std::vector<double> G = seed_gap_density(rho0, 1.0, l);

    // Map dimensionless time onto the rescaled variable s with
    // ds = factor(2 tau) dtau; in s the rate equation is factor-free.
    auto fac = [&](double tau) { return admission_factor(2.0 * tau, K, variant); };
    std::vector<double> s_samples(tau_samples.size());
    {
        double acc = 0.0, prev = tau0;
        for (std::size_t i = 0; i < tau_samples.size(); ++i) {
            acc += integrate(fac, prev, tau_samples[i], 1e-12);
            s_samples[i] = acc;
            prev = tau_samples[i];
        }
    }

    // Stepper buffers.
    std::vector<std::vector<double>> ks(7, std::vector<double>(n, 0.0));
    std::vector<double> stage(n, 0.0), y5(n, 0.0), y4(n, 0.0), seg(n, 0.0);
    std::size_t hi = n;
    double maxG = 0.0;
    for (double v : G) maxG = std::max(maxG, v);

    using detail::kDpA;
    using detail::kDpB4;
    using detail::kDpB5;
    using detail::kDpC;

    creation_term(G.data(), hi, M, dl, ks[0].data(), seg.data());

    std::vector<GapSlice> out;
    out.reserve(tau_samples.size());
    auto emit = [&](std::size_t sample_idx) {
        GapSlice slice;
        slice.tau = tau_samples[sample_idx];
        slice.sigma = params.sigma;
        slice.dl = dl * params.sigma;
        std::size_t keep = n;
        if (opt.keep_l_max >= 0) {
            const double internal = opt.keep_l_max / params.sigma;
            keep = std::min(
                n, static_cast<std::size_t>(std::floor(internal * M)) + 1);
        }
        slice.l.resize(keep);
        slice.G.resize(keep);
        const double s2 = params.sigma * params.sigma;
        for (std::size_t i = 0; i < keep; ++i) {
            slice.l[i] = l[i] * params.sigma;
            slice.G[i] = (i < hi ? G[i] : 0.0) / s2;
        }
        out.push_back(std::move(slice));
    };

    double s_now = 0.0;
    double h = 1e-4;
    std::size_t next_sample = 0;
    while (next_sample < s_samples.size() && s_samples[next_sample] <= 0.0) {
        emit(next_sample);
        ++next_sample;
    }

    std::size_t steps = 0;
    constexpr std::size_t kMaxSteps = 500'000;
    while (next_sample < s_samples.size()) {
        const double s_target = s_samples[next_sample];
        const bool clipped = s_now + h >= s_target;
        const double hs = clipped ? s_target - s_now : h;
        if (++steps > kMaxSteps)
            throw std::runtime_error("evolve_gap_density: step budget exhausted");
        if (!(hs > 0) || s_now + hs == s_now)
            throw std::runtime_error(
                "evolve_gap_density: step size underflow (stiffness)");

        // Integrating-factor (Lawson) stages: the destruction diagonal is
        // applied exactly through elementwise exponentials; the creation
        // integral is the explicitly stepped part.
        for (int j = 1; j < 7; ++j) {
            double* dst = (j == 6) ? y5.data() : stage.data();
            decay_term<true>(dst, G.data(), 1.0, kDpC[j] * hs, dl, M, hi);
            for (int m = 0; m < j; ++m) {
                if (kDpA[j][m] == 0.0) continue;
                decay_term<false>(dst, ks[m].data(), hs * kDpA[j][m],
                                  (kDpC[j] - kDpC[m]) * hs, dl, M, hi);
            }
            creation_term(dst, hi, M, dl, ks[j].data(), seg.data());
        }
        // 4th-order solution for the error estimate.
        decay_term<true>(y4.data(), G.data(), 1.0, hs, dl, M, hi);
        for (int j = 0; j < 7; ++j) {
            if (kDpB4[j] == 0.0) continue;
            decay_term<false>(y4.data(), ks[j].data(), hs * kDpB4[j],
                              (1.0 - kDpC[j]) * hs, dl, M, hi);
        }

        double max_new = 0.0, min_new = 0.0;
        for (std::size_t i = 0; i < hi; ++i) {
            max_new = std::max(max_new, y5[i]);
            min_new = std::min(min_new, y5[i]);
        }
        double err = 0.0;
        for (std::size_t i = 0; i < hi; ++i) {
            const double scale =
                opt.rtol * (std::fabs(y5[i]) + 1e-6 * max_new);
            const double e = (y5[i] - y4[i]) / scale;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(hi));

        const double grow =
            err > 0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        if (err <= 1.0) {
            if (min_new < kNegAbortRel * max_new)
                throw std::runtime_error(
                    "evolve_gap_density: negative gap density beyond "
                    "tolerance (scheme instability)");
            const double thresh = kClampRel * max_new;
            std::size_t new_hi = hi;
            while (new_hi > 0 && std::fabs(y5[new_hi - 1]) < thresh) --new_hi;
            for (std::size_t i = 0; i < new_hi; ++i)
                G[i] = (y5[i] <= thresh) ? 0.0 : y5[i];
            for (std::size_t i = new_hi; i < hi; ++i) G[i] = 0.0;
            hi = new_hi;
            maxG = max_new;
            ks[0].swap(ks[6]);  // FSAL: creation of the accepted state
            s_now = clipped ? s_target : s_now + hs;
            if (clipped) {
                emit(next_sample);
                ++next_sample;
                while (next_sample < s_samples.size() &&
                       s_samples[next_sample] == s_now) {
                    emit(next_sample);
                    ++next_sample;
                }
            }
            h = clipped ? std::max(h, hs * grow) : hs * grow;
        } else {
            h = hs * grow;
        }
    }
    (void)maxG;
    return out;
}

namespace {

std::size_t sigma_index(const GapSlice& slice) {
    if (slice.dl <= 0)
        throw std::invalid_argument("gap slice: dl must be > 0");
    return static_cast<std::size_t>(std::llround(slice.sigma / slice.dl));
}

}  // namespace

double density_from_gaps(const GapSlice& slice) {
    return integral4(slice.G.data(), slice.G.size(), slice.dl);
}

double gap_mass(const GapSlice& slice) {
    std::vector<double> w(slice.G.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = (slice.l[i] + slice.sigma) * slice.G[i];
    return integral4(w.data(), w.size(), slice.dl);
}

double available_fraction(const GapSlice& slice) {
    const std::size_t j0 = sigma_index(slice);
    if (j0 + 1 >= slice.G.size()) return 0.0;
    std::vector<double> w(slice.G.size() - j0);
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = (slice.l[j0 + i] - slice.sigma) * slice.G[j0 + i];
    return integral4(w.data(), w.size(), slice.dl);
}

double short_gap_fraction(const GapSlice& slice) {
    const std::size_t j0 = sigma_index(slice);
    const double total = density_from_gaps(slice);
    if (total <= 0) return 0.0;
    const std::size_t m = std::min(j0 + 1, slice.G.size());
    return integral4(slice.G.data(), m, slice.dl) / total;
}

}  // namespace mlrsa
