#pragma once

#include <cstddef>
#include <vector>

#include "mlrsa/rng.hpp"
#include "mlrsa/types.hpp"

namespace mlrsa {

// How a color is picked when more than one is admissible at the attempt point.
enum class Assignment {
    uniform_random,  // uniform over the admissible set (the model studied here)
    lowest_index,    // deterministic greedy pick, useful as a contrast case
};

struct Arrival1D {
    double t;  // arrival time
    double x;  // attempt position in [0, L)
};

// Materializes the space-time Poisson arrival stream up to params.horizon,
// sorted by time.  Throws std::runtime_error if more than max_events arrivals
// would be generated (memory guard); the simulator itself streams arrivals and
// has no such limit.
std::vector<Arrival1D> generate_arrivals(const Params1D& params, Rng& rng,
                                         std::size_t max_events = 10'000'000);

// Deposition state for one replication: per-color sorted rod positions on the
// circle of circumference L, plus attempt bookkeeping.
class Deposition1D {
  public:
    explicit Deposition1D(const Params1D& params,
                          Assignment assignment = Assignment::uniform_random);

    // Colors not blocked at x, i.e. with no own-color rod center strictly
    // within torus distance sigma.  Ascending order.
    std::vector<ColorId> available_colors(double x) const;

    // Processes one arrival.  Returns the assigned color, or -1 if every
    // color is blocked.  Times must be fed in non-decreasing order.
    ColorId try_deposit(double t, double x, Rng& rng);

    const std::vector<double>& positions(ColorId color) const;
    std::size_t count(ColorId color) const;
    std::size_t total_count() const;
    std::size_t attempts() const { return attempts_; }
    std::size_t rejected() const { return rejected_; }
    double time() const { return time_; }
    const Params1D& params() const { return params_; }

    // Cyclic gaps between consecutive same-color rods (surface-to-surface,
    // i.e. center spacing minus sigma).  Requires at least 2 rods.
    std::vector<double> gap_lengths(ColorId color) const;

  private:
    Params1D params_;
    Assignment assignment_;
    std::vector<std::vector<double>> rods_;  // per color, sorted positions
    std::size_t attempts_ = 0;
    std::size_t rejected_ = 0;
    double time_ = 0.0;
};

// One replication.  Returns the per-color dimensionless density sigma*N_c/L
// at each sample time (ascending, within [0, horizon]).  `stream` selects the
// RNG substream, so distinct replications are independent but reproducible.
DensityCurve run_sim_1d(const Params1D& params,
                        const std::vector<double>& sample_times,
                        Assignment assignment = Assignment::uniform_random,
                        int stream = 0);

// Averages `replications` independent runs (streams 0..replications-1) and
// fills the standard-error field.  `jobs` worker threads; the result is
// byte-identical for any jobs value.
DensityCurve run_replicated_1d(const Params1D& params,
                               const std::vector<double>& sample_times,
                               int replications, int jobs = 1,
                               Assignment assignment = Assignment::uniform_random);

struct GapHistogram {
    double bin_width = 0.0;
    std::vector<double> centers;  // bin midpoints
    std::vector<double> density;  // gaps per unit line length per unit gap length
    std::size_t total_gaps = 0;
};

// Histogram of one color's gap lengths, normalized so that integrating the
// density over gap length gives the rod number density N_c/L (one cyclic gap
// per rod).  Requires at least 2 rods of that color.
GapHistogram empirical_gap_density(const Deposition1D& state, ColorId color,
                                   double bin_width);

}  // namespace mlrsa
