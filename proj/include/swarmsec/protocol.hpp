#pragma once

#include <vector>

#include "swarmsec/fading.hpp"
#include "swarmsec/geometry.hpp"

// Time-switching wireless-powered relaying: the source charges the UAV swarm
// for a fraction alpha of each block, the best-channel UAV amplifies and
// forwards during the second half of the remainder, and the idle UAVs may
// spend their harvested energy jamming the eavesdropper.  All powers are
// normalized by the noise power, so psi = P_S / sigma^2 carries the scale.

namespace swarmsec {

struct SystemConfig {
    double psi = 1e4;     // source power to noise ratio, linear
    double alpha = 0.5;   // harvesting time fraction, in (0,1)
    double eta_eh = 0.5;  // energy conversion efficiency, in (0,1)
    double delta = 1.0;   // fraction of harvested energy spent jamming, in (0,1]
    int num_uavs = 1;     // swarm size U
    double c_th = 0.1;    // target secrecy rate, bits/s/Hz
};

struct DerivedConstants {
    double epsilon;  // 2 eta_eh alpha / (1 - alpha)
    double gamma_s;  // 2^{2 c_th / (1 - alpha)}
};

// Throws std::domain_error when a field is out of range (alpha = 1 in
// particular makes both constants blow up).
DerivedConstants derived_constants(const SystemConfig& cfg);

struct Scenario {
    NodePosition source;
    NodePosition destination;
    NodePosition relay;  // swarm centroid; the selected UAV's position
    NodePosition eve;    // fixed eavesdropper (ignored in disc mode)
    PathLossModel loss;
    ShadowedRician air;  // fading of every air-ground link
};

// Path-loss factors of the four links that enter the SNR formulas.
struct LinkGains {
    double su;  // source -> selected UAV
    double ud;  // selected UAV -> destination
    double se;  // source -> eavesdropper
    double ue;  // selected UAV -> eavesdropper
};

LinkGains link_gains_at(const Scenario& sc, const NodePosition& eve);
LinkGains link_gains(const Scenario& sc);

// Gains with the eavesdropper path losses evaluated at the disc-mean
// distances (the Jensen substitution used by the random-eavesdropper bound).
LinkGains mean_link_gains_disc(const Scenario& sc, const EavesdropperDisc& disc);

// High-SNR destination SNR: eps psi l_su l_ud x y / (eps l_ud y + 1).
double snr_destination(const SystemConfig& cfg, const LinkGains& g, double x, double y);

// Exact two-hop destination SNR with the amplification factor substituted;
// converges to snr_destination as psi grows.
double snr_destination_exact(const SystemConfig& cfg, const LinkGains& g, double x,
                             double y);

// Direct wiretap SNR psi l_se w.
double snr_eve_direct(const SystemConfig& cfg, const LinkGains& g, double w);

// Relayed wiretap SNR with received jamming power (normalized by noise) in
// the denominator; jamming_power = 0 gives the unjammed formula.
double snr_eve_relay(const SystemConfig& cfg, const LinkGains& g, double x, double z,
                     double jamming_power = 0.0);
double snr_eve_relay_exact(const SystemConfig& cfg, const LinkGains& g, double x,
                           double z, double jamming_power = 0.0);

// P_J = delta eps psi l_su g, the average-harvest approximation of a single
// jammer's transmit power (g = mean air-ground gain).
double jamming_power_scale(const SystemConfig& cfg, const Scenario& sc,
                           const LinkGains& g);

// Approximate-mode received jamming power P_J l_ue J, where j_sum is the sum
// of the U-1 jammer-to-eavesdropper gains.
double jamming_power_approximate(const SystemConfig& cfg, const Scenario& sc,
                                 const LinkGains& g, double j_sum);

// Exact-mode received jamming power delta eps sum_j (psi l_su h_sj + 1) l_ue
// h_je, with per-jammer harvested gains h_sj and jammer-to-eavesdropper
// gains h_je.
double jamming_power_exact(const SystemConfig& cfg, const LinkGains& g,
                           const std::vector<double>& h_sj,
                           const std::vector<double>& h_je);

enum class Scheme { sc, mrc };

// Eavesdropper combining: selection takes the larger branch SNR, maximum
// ratio sums them.
double combine_eve(Scheme scheme, double gamma_se, double gamma_re);

// C_S = max(0, (1-alpha)/2 log2((1+gamma_d)/(1+gamma_e))).
double secrecy_capacity(const SystemConfig& cfg, double gamma_d, double gamma_e);

}  // namespace swarmsec
