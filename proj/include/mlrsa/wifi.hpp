#pragma once

#include <vector>

#include "mlrsa/kinetics2d.hpp"

namespace mlrsa {

// Radio-level inputs.  Powers may be in any common unit; only the ratio
// sensing_threshold / transmit_power enters.
struct RadioParams {
    double transmit_power = 1.0;     // P_t
    double sensing_threshold = 1e-8; // I_th
    double path_loss_exponent = 4.0; // alpha, single-slope loss r^-alpha
};

// Distance out to which a transmitter still blocks its channel: with path
// loss l(r) = r^-alpha, received power stays above the sensing threshold up
// to (I_th / P_t)^(-1/alpha).
double inhibition_distance(const RadioParams& radio);

// True when the path-loss exponent is in the range typical of indoor/urban
// propagation ([2, 6]); the CLI warns outside it.
bool path_loss_exponent_typical(double alpha);

// Standard non-overlapping channel counts: 11 at 2.4 GHz, 23 at 5 GHz.
enum class Band { ghz_2_4, ghz_5 };
int band_channels(Band band);

inline constexpr double kDefaultTargetFraction = 0.7;

// Per-channel coverage fraction: the area fraction covered by the disks of
// one channel when lambda_t APs per unit area have arrived, each needing a
// channel unused within d_inh.  Maps onto disk deposition with sigma = d_inh
// and tau = (pi d_inh^2 / 4) lambda_t; approaches the jamming coverage
// 0.5474 for K = 1 and large lambda_t.
double coverage_at(double d_inh, double lambda_t, int num_channels,
                   const Monolayer2D& mono = Monolayer2D::standard());

// One planning question: at AP density lambda_t with K channels, which
// inhibition distance reaches target_fraction of the jamming coverage?
struct PlanQuery {
    double ap_density = 1.0;  // lambda_t, cumulative arrived APs per unit area
    int num_channels = 1;
    double target_fraction = kDefaultTargetFraction;  // f in (0, 1)
};

// Solves coverage_at(d, lambda_t, K) = f * 0.5474 for d by bracketed
// bisection (the coverage is increasing in d).  Throws std::invalid_argument
// for f outside (0, 1) and std::runtime_error, reporting the attainable
// coverage range, if no bracket is found.
double plan_dinh(const PlanQuery& query,
                 const Monolayer2D& mono = Monolayer2D::standard());

struct PlanPoint {
    double ap_density;  // lambda_t
    double d_inh;
};

// plan_dinh along an ascending grid of AP densities.
std::vector<PlanPoint> plan_curve(const std::vector<double>& lambda_grid,
                                  int num_channels, double target_fraction,
                                  const Monolayer2D& mono = Monolayer2D::standard());

}  // namespace mlrsa
