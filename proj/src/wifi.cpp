#include "mlrsa/wifi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mlrsa {

namespace {

// Coverage as a function of u = d_inh^2 * lambda_t, the only combination the
// deposition problem sees.
double coverage_of_u(double u, int K, const Monolayer2D& mono) {
    const double tau = 0.25 * std::numbers::pi * u;
    return multilayer_density_2d(tau, K, mono);
}

}  // namespace

double inhibition_distance(const RadioParams& radio) {
    if (!(radio.transmit_power > 0))
        throw std::invalid_argument(
            "inhibition_distance: transmit_power must be > 0");
    if (!(radio.sensing_threshold > 0))
        throw std::invalid_argument(
            "inhibition_distance: sensing_threshold must be > 0");
    if (!(radio.path_loss_exponent > 0))
        throw std::invalid_argument(
            "inhibition_distance: path_loss_exponent must be > 0");
    return std::pow(radio.sensing_threshold / radio.transmit_power,
                    -1.0 / radio.path_loss_exponent);
}

bool path_loss_exponent_typical(double alpha) {
    return alpha >= 2.0 && alpha <= 6.0;
}

int band_channels(Band band) {
    return band == Band::ghz_2_4 ? 11 : 23;
}

double coverage_at(double d_inh, double lambda_t, int num_channels,
                   const Monolayer2D& mono) {
    if (!(d_inh >= 0))
        throw std::invalid_argument("coverage_at: d_inh must be >= 0");
    if (!(lambda_t >= 0))
        throw std::invalid_argument("coverage_at: lambda_t must be >= 0");
    if (num_channels < 1)
        throw std::invalid_argument("coverage_at: num_channels must be >= 1");
    return coverage_of_u(d_inh * d_inh * lambda_t, num_channels, mono);
}

double plan_dinh(const PlanQuery& query, const Monolayer2D& mono) {
    if (!(query.ap_density > 0))
        throw std::invalid_argument("plan_dinh: ap_density must be > 0");
    if (query.num_channels < 1)
        throw std::invalid_argument("plan_dinh: num_channels must be >= 1");
    if (!(query.target_fraction > 0.0 && query.target_fraction < 1.0))
        throw std::invalid_argument(
            "plan_dinh: target_fraction must be in (0, 1), got " +
            std::to_string(query.target_fraction));
    const int K = query.num_channels;
    const double target = query.target_fraction * mono.model().theta_inf;

    // Coverage is 0 at u = 0 and increases with u; bracket the crossing in u
    // (independent of the AP density), then bisect.
    double lo = 0.0;
    double hi = 1.0;
    while (coverage_of_u(hi, K, mono) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) {
            const double reachable = coverage_of_u(1e12, K, mono);
            throw std::runtime_error(
                "plan_dinh: target coverage " + std::to_string(target) +
                " not bracketed; attainable range is (0, " +
                std::to_string(reachable) + ")");
        }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double cov = coverage_of_u(mid, K, mono);
        if (std::fabs(cov - target) <= 1e-9) {
            lo = hi = mid;
            break;
        }
        (cov < target ? lo : hi) = mid;
    }
    const double u_star = 0.5 * (lo + hi);
    return std::sqrt(u_star / query.ap_density);
}

std::vector<PlanPoint> plan_curve(const std::vector<double>& lambda_grid,
                                  int num_channels, double target_fraction,
                                  const Monolayer2D& mono) {
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
        if (lambda_grid[i] < lambda_grid[i - 1])
            throw std::invalid_argument(
                "plan_curve: lambda grid must be ascending");
    std::vector<PlanPoint> out;
    out.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        PlanQuery q;
        q.ap_density = lam;
        q.num_channels = num_channels;
        q.target_fraction = target_fraction;
        out.push_back({lam, plan_dinh(q, mono)});
    }
    return out;
}

}  // namespace mlrsa
