#include "mlrsa/kinetics2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "detail/dp45.hpp"
#include "mlrsa/quadrature.hpp"

namespace mlrsa {

namespace {

double hermite(double x0, double x1, double f0, double f1, double d0,
               double d1, double x) {
    const double h = x1 - x0;
    const double s = (x - x0) / h;
    const double s2 = s * s, s3 = s2 * s;
    return f0 * (2 * s3 - 3 * s2 + 1) + f1 * (-2 * s3 + 3 * s2) +
           h * (d0 * (s3 - 2 * s2 + s) + d1 * (s3 - s2));
}

// Series coefficients from the exclusion-overlap integrals, computed once.
struct SeriesCoeffs {
    double m1;  // Int_{sigma}^{2 sigma} 2 pi r A2(r) dr            (sigma = 1)
    double m2;  // Int_{sigma}^{2 sigma} 2 pi r A2(r)^2 dr          (sigma = 1)
    double c2;
    double c3;
    SeriesCoeffs() {
        const double pi = std::numbers::pi;
        m1 = integrate([&](double r) { return 2 * pi * r * lens_area(r, 1.0); },
                       1.0, 2.0, 1e-13);
        m2 = integrate(
            [&](double r) {
                const double a = lens_area(r, 1.0);
                return 2 * pi * r * a * a;
            },
            1.0, 2.0, 1e-13);
        // Third-order triple-overlap constant has a closed form.
        const double triple = (pi / 8.0) * (std::sqrt(3.0) * pi - 14.0 / 3.0);
        c2 = 8.0 * m1 / (pi * pi);
        c3 = 64.0 / (pi * pi * pi) * (m2 / 3.0 - triple);
    }
};

const SeriesCoeffs& series_coeffs() {
    static const SeriesCoeffs c;
    return c;
}

}  // namespace

double lens_area(double r, double radius) {
    if (!(radius > 0))
        throw std::invalid_argument("lens_area: radius must be > 0");
    if (!(r >= 0)) throw std::invalid_argument("lens_area: requires r >= 0");
    if (r >= 2 * radius) return 0.0;
    const double half = r / (2 * radius);
    return 2 * radius * radius * std::acos(half) -
           0.5 * r * std::sqrt(4 * radius * radius - r * r);
}

double phi_series(double theta) {
    if (!(theta >= 0))
        throw std::invalid_argument("phi_series: requires theta >= 0");
    const SeriesCoeffs& s = series_coeffs();
    return 1.0 + theta * (-4.0 + theta * (s.c2 + theta * s.c3));
}

double phi_fit(double theta, const RetentionModel& model) {
    if (!(model.theta_inf > 0))
        throw std::invalid_argument("phi_fit: theta_inf must be > 0");
    if (!(theta >= 0) || theta > model.theta_inf)
        throw std::invalid_argument(
            "phi_fit: theta outside [0, theta_inf]");
    const double x = theta / model.theta_inf;
    const double poly = 1.0 + x * (model.b1 + x * (model.b2 + x * model.b3));
    const double om = 1.0 - x;
    const double bracket = model.bracket == FitBracket::pow3_outside
                               ? om * om * om
                               : 1.0 - x * x * x;
    return poly * bracket;
}

Monolayer2D::Monolayer2D(const RetentionModel& model) : model_(model) {
    if (!(model_.theta_inf > 0 && model_.c > 0))
        throw std::invalid_argument(
            "Monolayer2D: theta_inf and c must be > 0");
    // Knots: uniform step 1e-3 on [0, 10], then 240 per decade up to 1e6.
    constexpr int kLinear = 10'000;      // tau = j * 1e-3, j = 0..10000
    constexpr int kPerDecade = 240;      // five decades past tau = 10
    constexpr int kDecades = 5;
    tau_.reserve(kLinear + 1 + kPerDecade * kDecades);
    for (int j = 0; j <= kLinear; ++j) tau_.push_back(j * 1e-3);
    for (int j = 1; j <= kPerDecade * kDecades; ++j)
        tau_.push_back(std::pow(10.0, 1.0 + static_cast<double>(j) / kPerDecade));
    theta_.resize(tau_.size());
    dtheta_.resize(tau_.size());

    auto clamped_phi = [this](double th) {
        th = std::clamp(th, 0.0, model_.theta_inf);
        return model_.c * phi_fit(th, model_);
    };
    auto rhs = [&](double, const std::vector<double>& y,
                   std::vector<double>& dy) { dy[0] = clamped_phi(y[0]); };
    std::size_t idx = 0;
    detail::OdeOptions opt;
    opt.rtol = 1e-10;
    opt.atol = 1e-14;
    opt.h0 = 1e-4;
    detail::integrate_dp45(rhs, {0.0}, 0.0, tau_,
                           [&](double, const std::vector<double>& y) {
                               theta_[idx] = std::min(y[0], model_.theta_inf);
                               dtheta_[idx] = clamped_phi(y[0]);
                               ++idx;
                           },
                           opt);
}

std::size_t Monolayer2D::locate(double tau) const {
    std::size_t i;
    if (tau <= 10.0) {
        i = static_cast<std::size_t>(tau * 1e3);
    } else {
        const double pos = (std::log10(tau) - 1.0) * 240.0;
        i = 10'000 + static_cast<std::size_t>(std::max(0.0, pos));
    }
    if (i >= tau_.size() - 1) i = tau_.size() - 2;
    while (i > 0 && tau < tau_[i]) --i;
    while (i + 2 < tau_.size() && tau >= tau_[i + 1]) ++i;
    return i;
}

double Monolayer2D::theta(double tau) const {
    if (!(tau >= 0))
        throw std::invalid_argument("Monolayer2D::theta: requires tau >= 0");
    if (tau == 0) return 0.0;
    if (tau >= tau_.back()) return theta_.back();
    const std::size_t i = locate(tau);
    return std::clamp(hermite(tau_[i], tau_[i + 1], theta_[i], theta_[i + 1],
                              dtheta_[i], dtheta_[i + 1], tau),
                      0.0, model_.theta_inf);
}

double Monolayer2D::rate(double tau) const {
    return model_.c * phi_fit(theta(tau), model_);
}

const Monolayer2D& Monolayer2D::standard() {
    static const Monolayer2D m;
    return m;
}

std::vector<double> solve_monolayer_2d(const std::vector<double>& tau_samples,
                                       const Monolayer2D& mono) {
    std::vector<double> out(tau_samples.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mono.theta(tau_samples[i]);
    return out;
}

std::vector<double> multilayer_layers_2d(double tau, int K,
                                         const Monolayer2D& mono) {
    if (K < 1)
        throw std::invalid_argument("multilayer_layers_2d: requires K >= 1");
    if (!(tau >= 0))
        throw std::invalid_argument("multilayer_layers_2d: requires tau >= 0");
    std::vector<double> layers(static_cast<std::size_t>(K));
    double used = 0.0;
    for (int k = 0; k < K; ++k) {
        const double arg = tau - used;
        layers[static_cast<std::size_t>(k)] = arg > 0 ? mono.theta(arg) : 0.0;
        used += layers[static_cast<std::size_t>(k)];
    }
    return layers;
}

double multilayer_density_2d(double tau, int K, const Monolayer2D& mono) {
    const std::vector<double> layers = multilayer_layers_2d(tau, K, mono);
    double sum = 0.0;
    for (double v : layers) sum += v;
    return sum / static_cast<double>(K);
}

}  // namespace mlrsa
