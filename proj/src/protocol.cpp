#include "swarmsec/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmsec {

DerivedConstants derived_constants(const SystemConfig& cfg) {
    if (!(cfg.psi > 0.0)) throw std::domain_error("SystemConfig: psi must be > 0");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw std::domain_error("SystemConfig: alpha must lie in (0,1)");
    if (!(cfg.eta_eh > 0.0 && cfg.eta_eh < 1.0))
        throw std::domain_error("SystemConfig: eta_eh must lie in (0,1)");
    if (!(cfg.delta > 0.0 && cfg.delta <= 1.0))
        throw std::domain_error("SystemConfig: delta must lie in (0,1]");
    if (cfg.num_uavs < 1) throw std::domain_error("SystemConfig: num_uavs must be >= 1");
    if (!(cfg.c_th > 0.0)) throw std::domain_error("SystemConfig: c_th must be > 0");
    DerivedConstants d;
    d.epsilon = 2.0 * cfg.eta_eh * cfg.alpha / (1.0 - cfg.alpha);
    d.gamma_s = std::exp2(2.0 * cfg.c_th / (1.0 - cfg.alpha));
    return d;
}

LinkGains link_gains_at(const Scenario& sc, const NodePosition& eve) {
    LinkGains g;
    g.su = path_loss(sc.loss, distance(sc.source, sc.relay));
    g.ud = path_loss(sc.loss, distance(sc.relay, sc.destination));
    g.se = path_loss(sc.loss, distance(sc.source, eve));
    g.ue = path_loss(sc.loss, distance(sc.relay, eve));
    return g;
}

LinkGains link_gains(const Scenario& sc) { return link_gains_at(sc, sc.eve); }

LinkGains mean_link_gains_disc(const Scenario& sc, const EavesdropperDisc& disc) {
    DiscMeanDistances d = expected_disc_distances(disc, sc.source, sc.relay);
    LinkGains g;
    g.su = path_loss(sc.loss, distance(sc.source, sc.relay));
    g.ud = path_loss(sc.loss, distance(sc.relay, sc.destination));
    g.se = path_loss(sc.loss, d.source_to_eve);
    g.ue = path_loss(sc.loss, d.relay_to_eve);
    return g;
}

double snr_destination(const SystemConfig& cfg, const LinkGains& g, double x, double y) {
    DerivedConstants d = derived_constants(cfg);
    return d.epsilon * cfg.psi * g.su * g.ud * x * y / (d.epsilon * g.ud * y + 1.0);
}

double snr_destination_exact(const SystemConfig& cfg, const LinkGains& g, double x,
                             double y) {
    DerivedConstants d = derived_constants(cfg);
    double rx = cfg.psi * g.su * x;  // received SNR at the relay
    return d.epsilon * rx * rx * g.ud * y / (d.epsilon * rx * g.ud * y + rx + 1.0);
}

double snr_eve_direct(const SystemConfig& cfg, const LinkGains& g, double w) {
    return cfg.psi * g.se * w;
}

double snr_eve_relay(const SystemConfig& cfg, const LinkGains& g, double x, double z,
                     double jamming_power) {
    DerivedConstants d = derived_constants(cfg);
    return d.epsilon * cfg.psi * g.su * g.ue * x * z /
           (d.epsilon * g.ue * z + 1.0 + jamming_power);
}

double snr_eve_relay_exact(const SystemConfig& cfg, const LinkGains& g, double x,
                           double z, double jamming_power) {
    DerivedConstants d = derived_constants(cfg);
    double rx = cfg.psi * g.su * x;
    return d.epsilon * rx * rx * g.ue * z /
           (d.epsilon * rx * g.ue * z + (rx + 1.0) * (1.0 + jamming_power));
}

double jamming_power_scale(const SystemConfig& cfg, const Scenario& sc,
                           const LinkGains& g) {
    if (cfg.num_uavs == 1) return 0.0;
    DerivedConstants d = derived_constants(cfg);
    return cfg.delta * d.epsilon * cfg.psi * g.su * sc.air.mean();
}

double jamming_power_approximate(const SystemConfig& cfg, const Scenario& sc,
                                 const LinkGains& g, double j_sum) {
    return jamming_power_scale(cfg, sc, g) * g.ue * j_sum;
}

double jamming_power_exact(const SystemConfig& cfg, const LinkGains& g,
                           const std::vector<double>& h_sj,
                           const std::vector<double>& h_je) {
    if (h_sj.size() != h_je.size())
        throw std::domain_error("jamming_power_exact: mismatched gain lists");
    DerivedConstants d = derived_constants(cfg);
    double sum = 0.0;
    for (std::size_t j = 0; j < h_sj.size(); ++j)
        sum += (cfg.psi * g.su * h_sj[j] + 1.0) * g.ue * h_je[j];
    return cfg.delta * d.epsilon * sum;
}

double combine_eve(Scheme scheme, double gamma_se, double gamma_re) {
    return scheme == Scheme::sc ? std::max(gamma_se, gamma_re) : gamma_se + gamma_re;
}

double secrecy_capacity(const SystemConfig& cfg, double gamma_d, double gamma_e) {
    double cs = 0.5 * (1.0 - cfg.alpha) * std::log2((1.0 + gamma_d) / (1.0 + gamma_e));
    return std::max(0.0, cs);
}

}  // namespace swarmsec
