#include "mlrsa/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mlrsa {

namespace {

void check(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void Params1D::validate() const {
    check(sigma > 0, "Params1D: sigma must be > 0");
    check(rate > 0, "Params1D: rate must be > 0");
    check(num_colors >= 1, "Params1D: num_colors must be >= 1");
    check(domain_length >= 10 * sigma,
          "Params1D: domain_length must be >= 10 * sigma");
    check(horizon >= 0, "Params1D: horizon must be >= 0");
    check(std::isfinite(tau_max()), "Params1D: tau = rate*sigma*horizon not finite");
}

double Params2D::kappa() const { return std::numbers::pi * sigma * sigma / 4.0; }

void Params2D::validate() const {
    check(sigma > 0, "Params2D: sigma must be > 0");
    check(rate > 0, "Params2D: rate must be > 0");
    check(num_colors >= 1, "Params2D: num_colors must be >= 1");
    check(domain_side >= 10 * sigma,
          "Params2D: domain_side must be >= 10 * sigma");
    check(horizon >= 0, "Params2D: horizon must be >= 0");
    check(std::isfinite(tau_max()), "Params2D: tau = rate*kappa*horizon not finite");
}

double DensityCurve::mean_over_colors(std::size_t i) const {
    double s = 0;
    for (double v : values.at(i)) s += v;
    return s / static_cast<double>(num_colors);
}

DensityCurve aggregate_curves(const std::vector<DensityCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("aggregate_curves: no curves");
    const DensityCurve& first = curves.front();
    const std::size_t ns = first.num_samples();
    const int nc = first.num_colors;
    for (const DensityCurve& c : curves) {
        if (c.num_samples() != ns || c.num_colors != nc || c.times != first.times)
            throw std::invalid_argument("aggregate_curves: mismatched curve shapes");
    }
    const double r = static_cast<double>(curves.size());
    DensityCurve out;
    out.times = first.times;
    out.num_colors = nc;
    out.values.assign(ns, std::vector<double>(nc, 0.0));
    out.errs.assign(ns, std::vector<double>(nc, 0.0));
    for (std::size_t i = 0; i < ns; ++i) {
        for (int c = 0; c < nc; ++c) {
            double mean = 0;
            for (const DensityCurve& cur : curves) mean += cur.values[i][c];
            mean /= r;
            double var = 0;
            for (const DensityCurve& cur : curves) {
                const double d = cur.values[i][c] - mean;
                var += d * d;
            }
            out.values[i][c] = mean;
            // standard error of the mean; zero for a single replication
            out.errs[i][c] = curves.size() > 1
                                 ? std::sqrt(var / (r * (r - 1.0)))
                                 : 0.0;
        }
    }
    return out;
}

double torus_distance(double a, double b, double L) {
    double d = std::fabs(a - b);
    if (d > L) d = std::fmod(d, L);
    return std::min(d, L - d);
}

}  // namespace mlrsa
