#pragma once

#include <map>
#include <string>

#include "swarmsec/geometry.hpp"
#include "swarmsec/protocol.hpp"

// Closed-form asymptotic secrecy outage probabilities.  Four evaluators
// cover the (combining scheme) x (friendly jamming) grid for a fixed
// eavesdropper; a fifth substitutes disc-mean distances to bound the
// random-eavesdropper case from below.  Every evaluator has an independent
// direct-quadrature counterpart in analytic_detail used by the tests.

namespace swarmsec {

struct SopQuery {
    Scheme scheme = Scheme::sc;
    bool jamming = false;
    bool random_eve = false;     // use the disc model instead of scenario.eve
    EavesdropperDisc disc{0.0};  // meaningful when random_eve
    SystemConfig cfg;
    Scenario scenario;
};

enum class SopMethod { analytic, mc };

struct SopResult {
    double value = 0.0;  // clamped to [0,1]
    SopMethod method = SopMethod::analytic;
    Scheme scheme = Scheme::sc;
    bool jamming = false;
    // raw_value plus per-piece values and quadrature error bounds.
    std::map<std::string, double> diagnostics;
};

// Selection combining at the eavesdropper, no jamming.
SopResult sop_sc_nojam(const SopQuery& q);

// Selection combining, idle UAVs jam at the average harvested power.
SopResult sop_sc_jam(const SopQuery& q);

// Maximum ratio combining, no jamming.
SopResult sop_mrc_nojam(const SopQuery& q);

// Maximum ratio combining with jamming.
SopResult sop_mrc_jam(const SopQuery& q);

// Mean-distance substitution for an eavesdropper uniform on the disc: the
// fixed-E expression matching (scheme, jamming) evaluated at the expected
// source-to-E and relay-to-E distances.  The Jensen argument makes this a
// lower bound on the disc-averaged outage wherever the outage is convex
// over the disc; empirically that holds with jamming at every tested
// radius, and without jamming only once the disc is large enough that the
// outage is not saturated near the source (roughly r_c >= 500 at the
// reference geometry).  On small discs without jamming, treat the value as
// an approximation that can overshoot the average by about 0.01.
SopResult sop_lower_bound_random_e(const SopQuery& q);

// Dispatch on (random_eve, scheme, jamming).
SopResult evaluate_sop(const SopQuery& q);

namespace analytic_detail {

// Direct-quadrature reference evaluators sharing nothing with the kernel
// layer: the no-jamming pair integrates the outage probability over the
// channel gains literally; the jamming pair collapses the jam sum and the
// relay-eavesdropper gain into one variable whose density has a closed
// form, leaving a 2-D integral.  Slow but independently derived.
double sop_sc_nojam_reference(const SopQuery& q);
double sop_sc_jam_reference(const SopQuery& q);
double sop_mrc_nojam_reference(const SopQuery& q);
double sop_mrc_jam_reference(const SopQuery& q);

}  // namespace analytic_detail

}  // namespace swarmsec
