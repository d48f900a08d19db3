#pragma once

#include <cstddef>
#include <vector>

#include "mlrsa/rng.hpp"
#include "mlrsa/sim1d.hpp"  // Assignment
#include "mlrsa/types.hpp"

namespace mlrsa {

struct Point2 {
    double x;
    double y;
};

// Neighbor search used for the hard-core test at an attempt point.
enum class NeighborMethod {
    grid,         // per-color cell lists, O(1) per attempt
    brute_force,  // linear scan, used to cross-check the grid
};

// Deposition state for disks of diameter sigma on the L x L torus, one
// independent hard-core constraint per color.
class Deposition2D {
  public:
    explicit Deposition2D(const Params2D& params,
                          Assignment assignment = Assignment::uniform_random,
                          NeighborMethod method = NeighborMethod::grid);

    // Colors with no own-color disk center strictly within distance sigma of
    // (x, y), ascending.
    std::vector<ColorId> available_colors(double x, double y) const;

    // Processes one arrival; returns the assigned color or -1 if blocked.
    // Times must be non-decreasing.
    ColorId try_deposit(double t, double x, double y, Rng& rng);

    const std::vector<Point2>& positions(ColorId color) const;
    std::size_t count(ColorId color) const;
    std::size_t total_count() const;
    std::size_t attempts() const { return attempts_; }
    std::size_t rejected() const { return rejected_; }
    double time() const { return time_; }
    const Params2D& params() const { return params_; }

    // Exhaustive O(N^2) same-color pair check of the hard-core condition.
    bool verify_hard_core() const;

  private:
    bool blocked(ColorId color, double x, double y) const;
    std::size_t cell_index(double x, double y) const;

    Params2D params_;
    Assignment assignment_;
    NeighborMethod method_;
    std::size_t m_ = 0;     // cells per side
    double cell_ = 0.0;     // cell edge length (>= sigma)
    std::vector<std::vector<Point2>> pts_;                // per color
    std::vector<std::vector<std::vector<Point2>>> cells_; // per color, per cell
    std::size_t attempts_ = 0;
    std::size_t rejected_ = 0;
    double time_ = 0.0;
};

// Helper mirroring Deposition2D::available_colors for a standalone state.
std::vector<ColorId> available_colors_2d(const Deposition2D& state, double x,
                                         double y);

// One replication.  Values are the per-color coverages
// theta_c = N_c * (pi sigma^2 / 4) / L^2 at each sample time.
DensityCurve run_sim_2d(const Params2D& params,
                        const std::vector<double>& sample_times,
                        Assignment assignment = Assignment::uniform_random,
                        int stream = 0,
                        NeighborMethod method = NeighborMethod::grid);

// Averages independent replications (streams 0..replications-1); results do
// not depend on the job count.
DensityCurve run_replicated_2d(const Params2D& params,
                               const std::vector<double>& sample_times,
                               int replications, int jobs = 1,
                               Assignment assignment = Assignment::uniform_random);

}  // namespace mlrsa
