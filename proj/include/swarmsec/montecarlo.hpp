#pragma once

#include <cstdint>
#include <vector>

#include "swarmsec/fading.hpp"
#include "swarmsec/geometry.hpp"
#include "swarmsec/protocol.hpp"
#include "swarmsec/rng.hpp"

// Trial-level simulator of the full relaying protocol.  It shares no code
// with the closed-form evaluator beyond the SNR formulas, so agreement
// between the two is a meaningful check.

namespace swarmsec {

// exact: outage when the achieved secrecy capacity falls below c_th, using
// the two-hop SNR with the amplification factor substituted.
// asymptotic: outage when gamma_d / gamma_e < gamma_s, using the high-SNR
// formulas the closed forms are built on.
enum class SopDefinition { exact, asymptotic };

// approximate: every jammer transmits at the average harvested power.
// exact: per-jammer harvested energy, including the captured noise term.
enum class JammingModel { exact, approximate };

enum class EveModel { fixed, random_disc };

struct McPlan {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::mrc;
    bool jamming = false;
    SopDefinition sop_definition = SopDefinition::asymptotic;
    JammingModel jamming_model = JammingModel::approximate;
    EveModel eavesdropper = EveModel::fixed;
    double disc_radius = 0.0;  // radius of the eavesdropper disc when random
};

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outage_count = 0;
};

// Draws the squared shadowed-Rician envelope: pick a gamma mixture
// component, then form the Erlang variate from uniforms.
class SrSampler {
  public:
    explicit SrSampler(const ShadowedRician& ch);
    double draw(TrialRng& rng) const;

  private:
    std::vector<double> cumulative_;
    double rate_ = 1.0;
};

// One protocol round; true means secrecy outage under the plan's
// definition.  Draw order is fixed: eavesdropper position (random mode),
// the U source-to-UAV gains, the UAV-to-destination and UAV-to-eavesdropper
// gains, the terrestrial wiretap gain, then any jamming gains.
bool run_trial(TrialRng& rng, const Scenario& sc, const SystemConfig& cfg,
               const McPlan& plan);

// Mean outage indicator with binomial standard error.  Identical
// (seed, plan) inputs give identical counts for any thread count: each
// trial owns an RNG stream keyed by (seed, trial index) and the reduction
// is an integer sum.
McEstimate estimate_sop(const McPlan& plan, const Scenario& sc, const SystemConfig& cfg,
                        int threads = 1);

// As estimate_sop, with the eavesdropper placed uniformly on the disc
// (centered at the source's ground projection) afresh in every trial.
McEstimate estimate_sop_random_e(const McPlan& plan, const EavesdropperDisc& disc,
                                 const Scenario& sc, const SystemConfig& cfg,
                                 int threads = 1);

}  // namespace swarmsec
