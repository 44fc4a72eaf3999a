#pragma once

#include "swarmsec/expmix.hpp"

namespace swarmsec {

// Shadowed-Rician air-to-ground channel with integer shadowing order m.
// b is half the average scattered power, omega the average LOS power.
// For integer m the confluent hypergeometric factor of the squared
// envelope's density terminates (Kummer transform), leaving the finite
// mixture  f(x) = sum_{l=0}^{m-1} zeta_l x^l e^{-eta x}.
struct ShadowedRician {
    int m = 1;
    double b = 0.0;
    double omega = 0.0;

    double mean() const { return 2.0 * b + omega; }
};

// pdf and CDF of the squared envelope as exponential-polynomial mixtures.
ExpPolyMix sr_power_pdf(const ShadowedRician& ch);
ExpPolyMix sr_power_cdf(const ShadowedRician& ch);

// Common exponential rate eta of the mixture terms.
double sr_rate(const ShadowedRician& ch);

// The same law seen as a mixture of gamma laws: pdf = sum_l w_l
// Gamma(l+1, eta).  Fills weights[0..m-1]; they are nonnegative and sum
// to one.  This is the form the simulator samples from.
void sr_gamma_mixture_weights(const ShadowedRician& ch, double* weights);

// Rayleigh squared envelope with unit mean power: Exp(1).
ExpPolyMix rayleigh_power_pdf();
ExpPolyMix rayleigh_power_cdf();

}  // namespace swarmsec
