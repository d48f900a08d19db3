#pragma once

#include <vector>

#include "mlrsa/types.hpp"

namespace mlrsa {

// Bracket placement in the rational fit of the retention function.
enum class FitBracket {
    pow3_outside,  // (1 + b1 x + b2 x^2 + b3 x^3) * (1 - x)^3   (physical)
    cubed_inside,  // (1 + b1 x + b2 x^2 + b3 x^3) * (1 - x^3)   (contrast case)
};

// Retention (available-area) model for disk deposition: the fraction of the
// plane where a new disk center can land, as a function of coverage theta.
struct RetentionModel {
    double b1 = 0.8120;
    double b2 = 0.4258;
    double b3 = 0.0716;
    double theta_inf = 0.5474;  // jamming coverage
    FitBracket bracket = FitBracket::pow3_outside;
    double c = 1.0;  // kinetic prefactor in d theta/d tau = c * phi(theta)
};

// Overlap area of two disks of radius `radius` whose centers are `r` apart.
// Zero for r >= 2*radius; throws std::invalid_argument for r < 0 or
// radius <= 0.
double lens_area(double r, double radius);

// Low-coverage series for the retention function,
//   phi(theta) = 1 - 4 theta + c2 theta^2 + c3 theta^3,
// with c2, c3 evaluated from pair/triple exclusion-overlap integrals (cached).
double phi_series(double theta);

// Rational jamming-limit fit of the retention function on [0, theta_inf].
// Throws std::invalid_argument for theta < 0 or theta > theta_inf.
double phi_fit(double theta, const RetentionModel& model = {});

// Tabulated solution of d theta/d tau = c * phi(theta), theta(0) = 0, for
// the dimensionless time tau = kappa * rate * t (kappa = pi sigma^2 / 4).
// Coverage is cached on a dense grid up to tau = 1e6 and evaluated by cubic
// Hermite interpolation with the exact slope c * phi(theta).
class Monolayer2D {
  public:
    explicit Monolayer2D(const RetentionModel& model = {});

    double theta(double tau) const;  // clamps to the cached end value beyond tau_max
    double rate(double tau) const;   // d theta/d tau = c * phi(theta(tau))
    double tau_max() const { return tau_.back(); }
    const RetentionModel& model() const { return model_; }

    static const Monolayer2D& standard();

  private:
    std::size_t locate(double tau) const;

    RetentionModel model_;
    std::vector<double> tau_;
    std::vector<double> theta_;
    std::vector<double> dtheta_;
};

// Coverage at the given sample times for a single color (K = 1).
std::vector<double> solve_monolayer_2d(const std::vector<double>& tau_samples,
                                       const Monolayer2D& mono = Monolayer2D::standard());

// Sequential-filling approximation for K colors: layer k sees the clock
// retarded by the coverage already laid down by layers 0..k-1.  Returns the
// K per-layer coverages (non-increasing in k).
std::vector<double> multilayer_layers_2d(double tau, int K,
                                         const Monolayer2D& mono = Monolayer2D::standard());

// Per-color coverage theta_i under random color assignment: the layer
// coverages averaged over colors.
double multilayer_density_2d(double tau, int K,
                             const Monolayer2D& mono = Monolayer2D::standard());

}  // namespace mlrsa
