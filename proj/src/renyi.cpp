#include "mlrsa/renyi.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/dp45.hpp"

namespace mlrsa {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

// (1 - e^-u)/u, continuous at 0.
double g(double u) {
    if (u < 1e-6) return 1.0 - 0.5 * u;
    return -std::expm1(-u) / u;
}

double hermite(double x, double x0, double x1, double f0, double f1, double d0,
               double d1) {
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return f0 * (2 * t3 - 3 * t2 + 1) + d0 * h * (t3 - 2 * t2 + t) +
           f1 * (3 * t2 - 2 * t3) + d1 * h * (t3 - t2);
}

constexpr int kDensePerUnit = 400;   // [0, 10] spacing 1/400
constexpr double kDenseEnd = 10.0;
constexpr int kLogPerDecade = 400;   // [10, 1000]
constexpr int kLogDecades = 2;

}  // namespace

MonolayerKernel::MonolayerKernel() {
    const int n_dense = kDensePerUnit * 10;  // intervals on [0, 10]
    const int n_log = kLogPerDecade * kLogDecades;
    u_.reserve(n_dense + n_log + 1);
    for (int i = 0; i <= n_dense; ++i)
        u_.push_back(static_cast<double>(i) / kDensePerUnit);
    for (int i = 1; i <= n_log; ++i)
        u_.push_back(std::pow(10.0, 1.0 + static_cast<double>(i) / kLogPerDecade));
    u_max_ = u_.back();
    tail_amp_ = std::exp(-2.0 * kEulerGamma);

    k_.reserve(u_.size());
    dk_.reserve(u_.size());
    F_.reserve(u_.size());

    auto rhs = [](double u, const std::vector<double>& y,
                  std::vector<double>& dy) {
        dy[0] = -2.0 * g(u) * y[0];  // k' = -2 g k
        dy[1] = y[0];                // F' = k
    };
    detail::OdeOptions opt;
    opt.rtol = 1e-10;
    opt.atol = 1e-15;
    opt.h0 = 1e-6;
    detail::integrate_dp45(
        rhs, {1.0, 0.0}, 0.0, u_,
        [this](double u, const std::vector<double>& y) {
            k_.push_back(y[0]);
            dk_.push_back(-2.0 * g(u) * y[0]);
            F_.push_back(y[1]);
        },
        opt);
}

const MonolayerKernel& MonolayerKernel::instance() {
    static const MonolayerKernel table;
    return table;
}

std::size_t MonolayerKernel::locate(double u) const {
    std::size_t i;
    if (u < kDenseEnd) {
        i = static_cast<std::size_t>(u * kDensePerUnit);
    } else {
        const double frac = (std::log10(u) - 1.0) * kLogPerDecade;
        i = kDensePerUnit * 10 + static_cast<std::size_t>(frac);
    }
    if (i + 1 >= u_.size()) i = u_.size() - 2;
    // guard against rounding at zone boundaries
    while (i > 0 && u < u_[i]) --i;
    while (i + 2 < u_.size() && u > u_[i + 1]) ++i;
    return i;
}

double MonolayerKernel::kernel(double u) const {
    if (!(u >= 0)) throw std::invalid_argument("kernel: requires u >= 0");
    if (u >= u_max_) return tail_amp_ / (u * u);
    const std::size_t i = locate(u);
    return hermite(u, u_[i], u_[i + 1], k_[i], k_[i + 1], dk_[i], dk_[i + 1]);
}

double MonolayerKernel::F(double tau) const {
    if (!(tau >= 0)) throw std::invalid_argument("renyi_F: requires tau >= 0");
    if (tau >= u_max_)
        return F_.back() + tail_amp_ * (1.0 / u_max_ - 1.0 / tau);
    const std::size_t i = locate(tau);
    return hermite(tau, u_[i], u_[i + 1], F_[i], F_[i + 1], k_[i], k_[i + 1]);
}

double MonolayerKernel::F_infinity() const {
    return F_.back() + tail_amp_ / u_max_;
}

double renyi_F(double tau) { return MonolayerKernel::instance().F(tau); }

double renyi_jamming() { return MonolayerKernel::instance().F_infinity(); }

std::vector<double> sequential_densities(double tau, int K) {
    if (!(tau >= 0)) throw std::invalid_argument("sequential_densities: tau >= 0");
    if (K < 1) throw std::invalid_argument("sequential_densities: K >= 1");
    const MonolayerKernel& tbl = MonolayerKernel::instance();
    std::vector<double> layers;
    layers.reserve(K);
    double used = 0;
    for (int k = 0; k < K; ++k) {
        const double arg = std::max(0.0, tau - used);
        const double v = tbl.F(arg);
        layers.push_back(v);
        used += v;
    }
    return layers;
}

double density_iterative(double tau, int K) {
    const std::vector<double> layers = sequential_densities(tau, K);
    double s = 0;
    for (double v : layers) s += v;
    return s / static_cast<double>(K);
}

}  // namespace mlrsa
