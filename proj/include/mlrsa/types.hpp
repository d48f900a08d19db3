#pragma once

#include <cstdint>
#include <vector>

namespace mlrsa {

/// Index of a color (layer), in [0, num_colors).
using ColorId = int;

/// Parameters of the 1D deposition process on a periodic interval.
///
/// Rods of length `sigma` arrive at rate `rate` per unit length per unit
/// time, uniformly on [0, domain_length), during [0, horizon].  The
/// dimensionless time of the process is tau = rate * sigma * t.
struct Params1D {
    double sigma = 1.0;          ///< rod length, > 0
    double rate = 1.0;           ///< arrivals per unit length per unit time
    int num_colors = 1;          ///< K >= 1
    double domain_length = 1e4;  ///< periodic domain length, >= 10 sigma
    double horizon = 0.0;        ///< simulated time span, >= 0
    std::uint64_t seed = 0;      ///< base RNG seed

    /// Dimensionless horizon tau = rate * sigma * horizon.
    double tau_max() const { return rate * sigma * horizon; }

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Parameters of the 2D deposition process on a periodic square.
///
/// Circles of diameter `sigma` arrive at rate `rate` per unit area per unit
/// time.  kappa() is the area covered by one circle; the dimensionless time
/// is tau = rate * kappa * t.
struct Params2D {
    double sigma = 1.0;        ///< circle diameter, > 0
    double rate = 1.0;         ///< arrivals per unit area per unit time
    int num_colors = 1;        ///< K >= 1
    double domain_side = 100;  ///< periodic square side, >= 10 sigma
    double horizon = 0.0;      ///< simulated time span, >= 0
    std::uint64_t seed = 0;    ///< base RNG seed

    /// Area of one circle, pi sigma^2 / 4.
    double kappa() const;

    /// Dimensionless horizon tau = rate * kappa * horizon.
    double tau_max() const { return rate * kappa() * horizon; }

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Per-color density (1D: rods per unit length; 2D: coverage fraction)
/// sampled on an ascending time grid.  For Monte Carlo curves `errs` holds
/// the standard error of each entry; analytic curves carry zeros.
struct DensityCurve {
    std::vector<double> times;                ///< ascending sample times
    int num_colors = 0;                       ///< K
    std::vector<std::vector<double>> values;  ///< [sample][color]
    std::vector<std::vector<double>> errs;    ///< [sample][color], std. errors

    std::size_t num_samples() const { return times.size(); }

    /// Mean of the per-color values at sample i.
    double mean_over_colors(std::size_t i) const;
};

/// Mean curve with per-entry standard errors over independent replications.
/// All curves must share times and num_colors; `reps >= 1`.
DensityCurve aggregate_curves(const std::vector<DensityCurve>& curves);

/// Shortest distance between a and b on a circle of circumference L.
double torus_distance(double a, double b, double L);

}  // namespace mlrsa
