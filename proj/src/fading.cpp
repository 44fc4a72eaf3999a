#include "swarmsec/fading.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace swarmsec {

namespace {

struct SrParams {
    double eta;
    std::vector<double> zeta;  // zeta[l], l = 0..m-1
};

SrParams sr_params(const ShadowedRician& ch) {
    if (ch.m < 1) throw std::domain_error("ShadowedRician: m must be >= 1");
    if (ch.b <= 0.0) throw std::domain_error("ShadowedRician: b must be > 0");
    if (ch.omega < 0.0) throw std::domain_error("ShadowedRician: omega must be >= 0");

    const double tb = 2.0 * ch.b;
    const double denom = tb * ch.m + ch.omega;
    const double A = std::pow(tb * ch.m / denom, ch.m) / tb;
    const double B = 1.0 / tb;
    const double theta = ch.omega / (denom * tb);

    SrParams p;
    p.eta = B - theta;
    p.zeta.resize(ch.m);
    // zeta_l = A poch(m-l, l) theta^l / (l!)^2
    double poch_ratio = 1.0;  // poch(m-l, l) = (m-1)! / (m-1-l)!
    double theta_l = 1.0;
    double lfact = 1.0;
    for (int l = 0; l < ch.m; ++l) {
        if (l > 0) {
            poch_ratio *= ch.m - l;
            theta_l *= theta;
            lfact *= l;
        }
        p.zeta[l] = A * poch_ratio * theta_l / (lfact * lfact);
    }
    return p;
}

}  // namespace

double sr_rate(const ShadowedRician& ch) { return sr_params(ch).eta; }

ExpPolyMix sr_power_pdf(const ShadowedRician& ch) {
    const SrParams p = sr_params(ch);
    ExpPolyMix f;
    for (int l = 0; l < ch.m; ++l) f.add_term(p.zeta[l], l, p.eta);
    return f;
}

ExpPolyMix sr_power_cdf(const ShadowedRician& ch) {
    const SrParams p = sr_params(ch);
    ExpPolyMix F = ExpPolyMix::constant(1.0);
    // int_0^x t^l e^{-eta t} dt = l!/eta^{l+1} (1 - e^{-eta x} sum_q (eta x)^q/q!)
    for (int l = 0; l < ch.m; ++l) {
        double kappa = p.zeta[l];  // zeta_l l!/q! eta^{q-l-1}, built downward in q
        for (int q = l; q >= 0; --q) {
            F.add_term(-kappa / std::pow(p.eta, l + 1.0 - q), q, p.eta);
            kappa *= q;
        }
    }
    F.consolidate();
    return F;
}

void sr_gamma_mixture_weights(const ShadowedRician& ch, double* weights) {
    const SrParams p = sr_params(ch);
    double lfact = 1.0;
    for (int l = 0; l < ch.m; ++l) {
        if (l > 0) lfact *= l;
        weights[l] = p.zeta[l] * lfact / std::pow(p.eta, l + 1.0);
    }
}

ExpPolyMix rayleigh_power_pdf() {
    ExpPolyMix f;
    f.add_term(1.0, 0, 1.0);
    return f;
}

ExpPolyMix rayleigh_power_cdf() {
    ExpPolyMix F = ExpPolyMix::constant(1.0);
    F.add_term(-1.0, 0, 1.0);
    return F;
}

}  // namespace swarmsec
