#pragma once

#include <vector>

#include "mlrsa/types.hpp"

namespace mlrsa {

/// Which admission-probability factor multiplies the gap rate equation.
///   exact_k2  - the K = 2 closed form (1 + t2 + (5/72) t2^2) / (2 + t2 + (5/72) t2^2)
///   generic_k - the all-K form  [sum_{n<K} t2^n/n!] / [sum_{n<K} (K-n) t2^n/n!]
/// with t2 = 2 * rate * sigma * t the dimensionless neighborhood load.
enum class AdmissionVariant { generic_k, exact_k2 };

/// P[arriving rod gets color i | it lands in a color-i gap] at load tau2.
/// Requires tau2 >= 0; exact_k2 requires K == 2 (throws otherwise).
/// Lies in [1/K, 1], non-decreasing in tau2.
double admission_factor(double tau2, int K, AdmissionVariant variant);

/// The order-statistics constant 5/18 whose quarter, 5/72, is the tau2^2
/// coefficient of the exact K=2 factor.
constexpr double order_stat_constant() { return 5.0 / 18.0; }

/// One time slice of the evolved per-color gap density G(l, t): gaps per
/// unit line length per unit gap length, on a uniform l grid.
struct GapSlice {
    double tau = 0;         ///< dimensionless time rate*sigma*t
    double sigma = 1;       ///< rod length (physical units)
    double dl = 0;          ///< grid spacing
    std::vector<double> l;  ///< gap lengths, l[0] = 0
    std::vector<double> G;  ///< gap density values
};

/// Low-coverage seed profile G(l) = rho0^2/(1 + sigma*rho0) * exp(-rho0*l)
/// evaluated on l_grid.  Normalized so that Int (l + sigma) G dl = 1.
/// Requires rho0 * sigma <= 0.02 (the seed is only valid where the process
/// is still Poisson-like); throws std::invalid_argument otherwise.
std::vector<double> seed_gap_density(double rho0, double sigma,
                                     const std::vector<double>& l_grid);

struct GapSolveOptions {
    double rho0_sigma = 0.01;    ///< per-color seed coverage rho0 * sigma
    int cells_per_sigma = 400;   ///< grid resolution, dl = sigma / cells
    double l_max_factor = 12.0;  ///< l_max = factor / rho0 (seed tail <= 1e-6)
    double rtol = 1e-6;          ///< time-stepper relative tolerance
    double keep_l_max = -1.0;    ///< trim returned slices to l <= this; < 0 keeps all
};

/// Evolves the per-color gap density under
///   dG/dt = factor(tau2) * rate * [ -(l - sigma)^+ G + 2 Int_{l+sigma} G dy ]
/// from the low-coverage seed at tau0 = K * rho0 * sigma, and returns slices
/// at the requested dimensionless times (ascending, all >= tau0).
///
/// K is params.num_colors.  Time is stepped in the exactly rescaled variable
/// ds = factor dtau with an integrating-factor Dormand-Prince 5(4) pair, so
/// the linear destruction term is integrated exactly; suffix integrals and
/// the returned functionals use 4th-order segment quadrature.
///
/// Throws std::invalid_argument on bad samples/options and std::runtime_error
/// on stepper failure (step underflow) or loss of positivity
/// (min G < -1e-10 * max G).
std::vector<GapSlice> evolve_gap_density(const Params1D& params,
                                         AdmissionVariant variant,
                                         const std::vector<double>& tau_samples,
                                         const GapSolveOptions& opt = {});

/// Int G dl: the per-color rod density carried by the slice.
double density_from_gaps(const GapSlice& slice);

/// Int (l + sigma) G dl: the conserved torus-partition mass (1 at the seed).
double gap_mass(const GapSlice& slice);

/// Int_sigma (l - sigma) G dl: the line fraction available to this color.
double available_fraction(const GapSlice& slice);

/// Fraction of gaps shorter than sigma: Int_0^sigma G dl / Int G dl.
double short_gap_fraction(const GapSlice& slice);

}  // namespace mlrsa
