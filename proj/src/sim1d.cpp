#include "mlrsa/sim1d.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mlrsa {

std::vector<Arrival1D> generate_arrivals(const Params1D& params, Rng& rng,
                                         std::size_t max_events) {
    params.validate();
    std::vector<Arrival1D> out;
    const double total_rate = params.rate * params.domain_length;
    double t = rng.exponential(total_rate);
    while (t <= params.horizon) {
        if (out.size() >= max_events)
            throw std::runtime_error(
                "generate_arrivals: event budget exceeded; lower the horizon "
                "or stream arrivals instead");
        out.push_back({t, rng.uniform(0.0, params.domain_length)});
        t += rng.exponential(total_rate);
    }
    return out;
}

Deposition1D::Deposition1D(const Params1D& params, Assignment assignment)
    : params_(params), assignment_(assignment), rods_(params.num_colors) {
    params_.validate();
}

std::vector<ColorId> Deposition1D::available_colors(double x) const {
    std::vector<ColorId> avail;
    avail.reserve(rods_.size());
    const double L = params_.domain_length;
    for (ColorId c = 0; c < static_cast<ColorId>(rods_.size()); ++c) {
        const auto& v = rods_[c];
        bool blocked = false;
        if (!v.empty()) {
            auto it = std::lower_bound(v.begin(), v.end(), x);
            const double succ = (it == v.end()) ? v.front() : *it;
            const double pred = (it == v.begin()) ? v.back() : *(it - 1);
            blocked = torus_distance(x, succ, L) < params_.sigma ||
                      torus_distance(x, pred, L) < params_.sigma;
        }
        if (!blocked) avail.push_back(c);
    }
    return avail;
}

ColorId Deposition1D::try_deposit(double t, double x, Rng& rng) {
    if (t < time_)
        throw std::invalid_argument(
            "Deposition1D::try_deposit: arrival times must be non-decreasing");
    if (!(x >= 0.0) || x >= params_.domain_length)
        throw std::invalid_argument(
            "Deposition1D::try_deposit: position outside [0, L)");
    time_ = t;
    ++attempts_;
    const std::vector<ColorId> avail = available_colors(x);
    if (avail.empty()) {
        ++rejected_;
        return -1;
    }
    ColorId color;
    if (assignment_ == Assignment::lowest_index || avail.size() == 1)
        color = avail.front();
    else
        color = avail[rng.uniform_int(avail.size())];
    auto& v = rods_[color];
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    return color;
}

const std::vector<double>& Deposition1D::positions(ColorId color) const {
    return rods_.at(static_cast<std::size_t>(color));
}

std::size_t Deposition1D::count(ColorId color) const {
    return rods_.at(static_cast<std::size_t>(color)).size();
}

std::size_t Deposition1D::total_count() const {
    std::size_t n = 0;
    for (const auto& v : rods_) n += v.size();
    return n;
}

std::vector<double> Deposition1D::gap_lengths(ColorId color) const {
    const auto& v = rods_.at(static_cast<std::size_t>(color));
    if (v.size() < 2)
        throw std::invalid_argument(
            "Deposition1D::gap_lengths: need at least 2 rods of that color");
    std::vector<double> gaps(v.size());
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        gaps[i] = v[i + 1] - v[i] - params_.sigma;
    gaps.back() = v.front() + params_.domain_length - v.back() - params_.sigma;
    return gaps;
}

DensityCurve run_sim_1d(const Params1D& params,
                        const std::vector<double>& sample_times,
                        Assignment assignment, int stream) {
    params.validate();
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        if (!(sample_times[i] >= 0))
            throw std::invalid_argument("run_sim_1d: sample times must be >= 0");
        if (i > 0 && sample_times[i] < sample_times[i - 1])
            throw std::invalid_argument(
                "run_sim_1d: sample times must be ascending");
    }
    Rng rng(params.seed, static_cast<std::uint64_t>(stream));
    Deposition1D state(params, assignment);

    DensityCurve curve;
    curve.times = sample_times;
    curve.num_colors = params.num_colors;
    curve.values.assign(sample_times.size(),
                        std::vector<double>(params.num_colors, 0.0));

    const double total_rate = params.rate * params.domain_length;
    const double per_rod = params.sigma / params.domain_length;
    double t_next = rng.exponential(total_rate);
    double x_next = rng.uniform(0.0, params.domain_length);
    for (std::size_t s = 0; s < sample_times.size(); ++s) {
        while (t_next <= sample_times[s]) {
            state.try_deposit(t_next, x_next, rng);
            t_next += rng.exponential(total_rate);
            x_next = rng.uniform(0.0, params.domain_length);
        }
        for (ColorId c = 0; c < params.num_colors; ++c)
            curve.values[s][c] = per_rod * static_cast<double>(state.count(c));
    }
    return curve;
}

DensityCurve run_replicated_1d(const Params1D& params,
                               const std::vector<double>& sample_times,
                               int replications, int jobs,
                               Assignment assignment) {
    if (replications < 1)
        throw std::invalid_argument("run_replicated_1d: replications must be >= 1");
    if (jobs < 1)
        throw std::invalid_argument("run_replicated_1d: jobs must be >= 1");
    std::vector<DensityCurve> runs(static_cast<std::size_t>(replications));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= replications) return;
            runs[static_cast<std::size_t>(r)] =
                run_sim_1d(params, sample_times, assignment, r);
        }
    };
    const int nthreads = std::min(jobs, replications);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return aggregate_curves(runs);
}

GapHistogram empirical_gap_density(const Deposition1D& state, ColorId color,
                                   double bin_width) {
    if (!(bin_width > 0))
        throw std::invalid_argument(
            "empirical_gap_density: bin_width must be > 0");
    const std::vector<double> gaps = state.gap_lengths(color);
    double g_max = 0.0;
    for (double g : gaps) g_max = std::max(g_max, g);
    const std::size_t nbins =
        static_cast<std::size_t>(std::floor(g_max / bin_width)) + 1;
    GapHistogram h;
    h.bin_width = bin_width;
    h.total_gaps = gaps.size();
    h.centers.resize(nbins);
    h.density.assign(nbins, 0.0);
    for (std::size_t k = 0; k < nbins; ++k)
        h.centers[k] = (static_cast<double>(k) + 0.5) * bin_width;
    const double norm =
        1.0 / (state.params().domain_length * bin_width);
    for (double g : gaps) {
        const auto k = static_cast<std::size_t>(std::floor(g / bin_width));
        h.density[std::min(k, nbins - 1)] += norm;
    }
    return h;
}

}  // namespace mlrsa
