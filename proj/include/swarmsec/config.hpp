#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmsec/montecarlo.hpp"
#include "swarmsec/placement.hpp"

// JSON experiment configuration: one file fully determines a run.  Parsing
// is strict. Unknown keys are rejected, and every violated constraint is
// collected into a single error whose message names the offending field
// paths.

namespace swarmsec {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which (scheme, jamming, method) combinations a run evaluates.
struct EvaluationPlan {
    std::vector<Scheme> schemes = {Scheme::sc, Scheme::mrc};
    std::vector<bool> jamming = {false, true};
    bool use_analytic = true;
    bool use_mc = true;
    bool random_eve = false;
};

struct SweepSpec {
    std::string axis;
    std::vector<double> values;
};

struct ExperimentConfig {
    std::string description;
    SystemConfig system;
    Scenario scenario;
    EavesdropperDisc disc;                    // r_c == 0 when not configured
    std::vector<NodePosition> eve_positions;  // targets of the position sweep
    EvaluationPlan evaluation;
    McPlan mc;  // scheme, jamming, and eavesdropper mode are filled per run
    std::optional<SweepSpec> sweep;
    std::optional<CorridorSearchSpec> corridor;
    std::string output_path;
};

// Parses and validates a JSON experiment file.  Optional fields default to
// tau=2, d0=100, one million trials, both schemes, both jamming states, and
// both methods.  Throws ConfigError naming the field path of every problem.
ExperimentConfig load_config(const std::string& path);

// Axis names a sweep accepts.
const std::vector<std::string>& sweep_axes();

}  // namespace swarmsec
