#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "swarmsec/config.hpp"

// Command implementations behind the command-line tool.  Each takes a
// loaded configuration and the run options, writes its artifact (CSV or
// plain-text report) to `out` and warnings to `log`, and returns the
// process exit code: 0 success, 2 configuration error, 3 numerical
// failure, 4 validation breach.

namespace swarmsec {

struct RunOptions {
    int threads = 1;
    std::optional<std::uint64_t> seed;  // overrides mc.seed when set
};

int cmd_eval(const ExperimentConfig& cfg, const RunOptions& opt,
             std::ostream& out, std::ostream& log);
int cmd_sweep(const ExperimentConfig& cfg, const RunOptions& opt,
              std::ostream& out, std::ostream& log);
int cmd_validate(const ExperimentConfig& cfg, const RunOptions& opt,
                 std::ostream& out, std::ostream& log);
int cmd_optimize(const ExperimentConfig& cfg, const RunOptions& opt,
                 std::ostream& out, std::ostream& log);

// Decimal form with exactly ten significant digits, used for every CSV
// cell and report number.
std::string format_sig10(double v);

}  // namespace swarmsec
