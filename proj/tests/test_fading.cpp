#include <doctest.h>

#include <cmath>
#include <vector>

#include "reference_values.hpp"
#include "swarmsec/composite.hpp"
#include "swarmsec/fading.hpp"
#include "swarmsec/quadrature.hpp"

using namespace swarmsec;

TEST_CASE("shadowed-Rician mixture matches the hypergeometric density") {
    for (const auto& c : refvals::kSrPdf) {
        const ShadowedRician ch{c.m, c.b, c.omega};
        const ExpPolyMix f = sr_power_pdf(ch);
        CHECK(f(c.x) == doctest::Approx(c.value).epsilon(1e-12));
    }
    for (const auto& c : refvals::kSrCdf) {
        const ShadowedRician ch{c.m, c.b, c.omega};
        const ExpPolyMix F = sr_power_cdf(ch);
        CHECK(F(c.x) == doctest::Approx(c.value).epsilon(1e-11));
    }
}

TEST_CASE("normalization and mean across shadowing orders") {
    for (int m : {1, 2, 3, 5, 8}) {
        const ShadowedRician ch{m, 0.251, 0.279};
        const ExpPolyMix f = sr_power_pdf(ch);
        CHECK(std::fabs(f.integral_to_inf() - 1.0) <= 1e-12);
        CHECK(f.mean() == doctest::Approx(ch.mean()).epsilon(1e-12));
    }
    const ShadowedRician heavy{3, 0.063, 0.0005};
    CHECK(sr_power_pdf(heavy).integral_to_inf() == doctest::Approx(1.0));
}

TEST_CASE("CDF is consistent with the pdf") {
    const ShadowedRician ch{5, 0.251, 0.279};
    const ExpPolyMix f = sr_power_pdf(ch);
    const ExpPolyMix F = sr_power_cdf(ch);
    CHECK(std::fabs(F(0.0)) < 1e-12);
    CHECK(F(200.0) == doctest::Approx(1.0));
    for (double x : {0.1, 0.5, 1.2, 3.0}) {
        CHECK(F.derivative()(x) == doctest::Approx(f(x)).epsilon(1e-11));
        CHECK(F(x) == doctest::Approx(f.integral_zero_to(x)).epsilon(1e-12));
    }
}

TEST_CASE("gamma-mixture weights are a probability vector") {
    const ShadowedRician ch{5, 0.251, 0.279};
    std::vector<double> w(ch.m);
    sr_gamma_mixture_weights(ch, w.data());
    double sum = 0.0;
    for (double wi : w) {
        CHECK(wi >= 0.0);
        sum += wi;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));

    // Reassembling the gamma mixture must reproduce the pdf.
    const double eta = sr_rate(ch);
    const ExpPolyMix f = sr_power_pdf(ch);
    for (double x : {0.2, 0.9, 2.6}) {
        double mix = 0.0;
        double lfact = 1.0;
        for (int l = 0; l < ch.m; ++l) {
            if (l > 0) lfact *= l;
            mix += w[l] * std::pow(eta, l + 1.0) * std::pow(x, l) *
                   std::exp(-eta * x) / lfact;
        }
        CHECK(mix == doctest::Approx(f(x)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate LOS power reduces to an exponential") {
    const ShadowedRician ch{4, 0.35, 0.0};
    const ExpPolyMix f = sr_power_pdf(ch);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].power == 0);
    CHECK(f.terms()[0].rate == doctest::Approx(1.0 / 0.7));
}

TEST_CASE("Rayleigh power helpers") {
    CHECK(rayleigh_power_pdf()(0.7) == doctest::Approx(std::exp(-0.7)));
    CHECK(rayleigh_power_cdf()(0.7) == doctest::Approx(1.0 - std::exp(-0.7)));
    CHECK(rayleigh_power_pdf().mean() == doctest::Approx(1.0));
}
