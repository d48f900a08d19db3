#pragma once

#include <string>

#include "mlrsa/artifact.hpp"

namespace mlrsa {

// Outcome of one config-driven run.  `config_json` is the canonical form of
// the input config (reruns of it are byte-identical); `report` is a short
// human-readable summary; `gates_passed` is meaningful for compare mode and
// true otherwise.
struct ExperimentResult {
    std::string config_json;
    Table table;
    std::string report;
    bool gates_passed = true;
};

// Runs the experiment described by a JSON config object with a "mode" key:
// sim1d, sim2d, solve1d-iter, solve1d-gap, solve1d-gap-profile, solve2d,
// plan-wifi, compare, or figure.  Unknown modes/keys and invalid values
// throw std::invalid_argument.  `jobs` caps simulation worker threads and
// never affects the results.
ExperimentResult run_experiment(const std::string& config_json, int jobs = 1);

// Canonical config for the bundled figure datasets (ids 4..9).  Unknown ids
// throw std::invalid_argument naming the supported range.
std::string figure_config(int figure_id);

}  // namespace mlrsa
