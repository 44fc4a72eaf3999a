#pragma once

#include <string>
#include <vector>

#include "swarmsec/analytic.hpp"

// Exhaustive grid search for the swarm hovering position that minimizes the
// random-eavesdropper secrecy outage bound.  The swarm is a single centroid
// constrained to the vertical plane through the source-destination ground
// line, so the search runs over the along-line horizontal coordinate and the
// altitude.

namespace swarmsec {

struct CorridorSearchSpec {
    double x_min = 300.0;
    double x_max = 600.0;
    double h_min = 60.0;
    double h_max = 120.0;
    int nx = 16;
    int nh = 16;
    // Horizontal displacement perpendicular to the source-destination line.
    // Zero keeps the planar reduction; nonzero values let callers test it.
    double lateral_offset = 0.0;
};

struct CorridorCell {
    NodePosition position;
    double sop = 0.0;
    bool ok = false;
    std::string error;  // empty when ok
};

struct CorridorResult {
    NodePosition best;
    double best_sop = 0.0;
    // Altitude-major: h ascending, x ascending within each altitude row.
    std::vector<CorridorCell> surface;
    int failed_cells = 0;
};

// Evaluates the outage bound at every grid cell and returns the minimizer
// with deterministic tie-breaking: lowest altitude first, then smallest x.
// The objective query must ask for maximum ratio combining with jamming and
// a random eavesdropper; its relay position is overwritten per cell.  Cells
// whose evaluation throws are recorded and skipped; if every cell fails the
// search throws.
CorridorResult optimize_corridor(const CorridorSearchSpec& spec,
                                 const SopQuery& objective, int threads = 1);

}  // namespace swarmsec
