#include "mlrsa/sim2d.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mlrsa {

namespace {

double torus_dist2(const Point2& a, const Point2& b, double L) {
    double dx = std::fabs(a.x - b.x);
    if (dx > 0.5 * L) dx = L - dx;
    double dy = std::fabs(a.y - b.y);
    if (dy > 0.5 * L) dy = L - dy;
    return dx * dx + dy * dy;
}

}  // namespace

Deposition2D::Deposition2D(const Params2D& params, Assignment assignment,
                           NeighborMethod method)
    : params_(params),
      assignment_(assignment),
      method_(method),
      pts_(params.num_colors) {
    params_.validate();
    m_ = static_cast<std::size_t>(
        std::floor(params_.domain_side / params_.sigma));
    cell_ = params_.domain_side / static_cast<double>(m_);
    if (method_ == NeighborMethod::grid)
        cells_.assign(static_cast<std::size_t>(params_.num_colors),
                      std::vector<std::vector<Point2>>(m_ * m_));
}

std::size_t Deposition2D::cell_index(double x, double y) const {
    auto ix = static_cast<std::size_t>(x / cell_);
    auto iy = static_cast<std::size_t>(y / cell_);
    if (ix >= m_) ix = m_ - 1;
    if (iy >= m_) iy = m_ - 1;
    return iy * m_ + ix;
}

bool Deposition2D::blocked(ColorId color, double x, double y) const {
    const double L = params_.domain_side;
    const double s2 = params_.sigma * params_.sigma;
    const Point2 p{x, y};
    if (method_ == NeighborMethod::brute_force) {
        for (const Point2& q : pts_[static_cast<std::size_t>(color)])
            if (torus_dist2(p, q, L) < s2) return true;
        return false;
    }
    auto ix = static_cast<std::size_t>(x / cell_);
    auto iy = static_cast<std::size_t>(y / cell_);
    if (ix >= m_) ix = m_ - 1;
    if (iy >= m_) iy = m_ - 1;
    const auto& grid = cells_[static_cast<std::size_t>(color)];
    for (std::size_t a = 0; a < 3; ++a) {
        const std::size_t jy = (iy + m_ + a - 1) % m_;
        for (std::size_t b = 0; b < 3; ++b) {
            const std::size_t jx = (ix + m_ + b - 1) % m_;
            for (const Point2& q : grid[jy * m_ + jx])
                if (torus_dist2(p, q, L) < s2) return true;
        }
    }
    return false;
}

std::vector<ColorId> Deposition2D::available_colors(double x, double y) const {
    std::vector<ColorId> avail;
    avail.reserve(static_cast<std::size_t>(params_.num_colors));
    for (ColorId c = 0; c < params_.num_colors; ++c)
        if (!blocked(c, x, y)) avail.push_back(c);
    return avail;
}

ColorId Deposition2D::try_deposit(double t, double x, double y, Rng& rng) {
    if (t < time_)
        throw std::invalid_argument(
            "Deposition2D::try_deposit: arrival times must be non-decreasing");
    const double L = params_.domain_side;
    if (!(x >= 0) || x >= L || !(y >= 0) || y >= L)
        throw std::invalid_argument(
            "Deposition2D::try_deposit: position outside [0, L)^2");
    time_ = t;
    ++attempts_;
    const std::vector<ColorId> avail = available_colors(x, y);
    if (avail.empty()) {
        ++rejected_;
        return -1;
    }
    ColorId color;
    if (assignment_ == Assignment::lowest_index || avail.size() == 1)
        color = avail.front();
    else
        color = avail[rng.uniform_int(avail.size())];
    pts_[static_cast<std::size_t>(color)].push_back({x, y});
    if (method_ == NeighborMethod::grid)
        cells_[static_cast<std::size_t>(color)][cell_index(x, y)].push_back(
            {x, y});
    return color;
}

const std::vector<Point2>& Deposition2D::positions(ColorId color) const {
    return pts_.at(static_cast<std::size_t>(color));
}

std::size_t Deposition2D::count(ColorId color) const {
    return pts_.at(static_cast<std::size_t>(color)).size();
}

std::size_t Deposition2D::total_count() const {
    std::size_t n = 0;
    for (const auto& v : pts_) n += v.size();
    return n;
}

bool Deposition2D::verify_hard_core() const {
    const double L = params_.domain_side;
    const double s2 = params_.sigma * params_.sigma;
    for (const auto& v : pts_)
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (torus_dist2(v[i], v[j], L) < s2) return false;
    return true;
}

std::vector<ColorId> available_colors_2d(const Deposition2D& state, double x,
                                         double y) {
    return state.available_colors(x, y);
}

DensityCurve run_sim_2d(const Params2D& params,
                        const std::vector<double>& sample_times,
                        Assignment assignment, int stream,
                        NeighborMethod method) {
    params.validate();
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        if (!(sample_times[i] >= 0))
            throw std::invalid_argument("run_sim_2d: sample times must be >= 0");
        if (i > 0 && sample_times[i] < sample_times[i - 1])
            throw std::invalid_argument(
                "run_sim_2d: sample times must be ascending");
    }
    Rng rng(params.seed, static_cast<std::uint64_t>(stream));
    Deposition2D state(params, assignment, method);

    DensityCurve curve;
    curve.times = sample_times;
    curve.num_colors = params.num_colors;
    curve.values.assign(sample_times.size(),
                        std::vector<double>(params.num_colors, 0.0));

    const double L = params.domain_side;
    const double total_rate = params.rate * L * L;
    const double per_disk = params.kappa() / (L * L);
    double t_next = rng.exponential(total_rate);
    double x_next = rng.uniform(0.0, L);
    double y_next = rng.uniform(0.0, L);
    for (std::size_t s = 0; s < sample_times.size(); ++s) {
        while (t_next <= sample_times[s]) {
            state.try_deposit(t_next, x_next, y_next, rng);
            t_next += rng.exponential(total_rate);
            x_next = rng.uniform(0.0, L);
            y_next = rng.uniform(0.0, L);
        }
        for (ColorId c = 0; c < params.num_colors; ++c)
            curve.values[s][c] = per_disk * static_cast<double>(state.count(c));
    }
    return curve;
}

DensityCurve run_replicated_2d(const Params2D& params,
                               const std::vector<double>& sample_times,
                               int replications, int jobs,
                               Assignment assignment) {
    if (replications < 1)
        throw std::invalid_argument("run_replicated_2d: replications must be >= 1");
    if (jobs < 1)
        throw std::invalid_argument("run_replicated_2d: jobs must be >= 1");
    std::vector<DensityCurve> runs(static_cast<std::size_t>(replications));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= replications) return;
            runs[static_cast<std::size_t>(r)] =
                run_sim_2d(params, sample_times, assignment, r);
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

}  // namespace mlrsa
