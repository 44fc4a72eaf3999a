#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "swarmsec/composite.hpp"
#include "swarmsec/montecarlo.hpp"

using namespace swarmsec;

namespace {

SystemConfig baseline_config() {
    SystemConfig cfg;
    cfg.psi = 1e4;
    cfg.alpha = 0.8;
    cfg.eta_eh = 0.8;
    cfg.delta = 1.0;
    cfg.num_uavs = 5;
    cfg.c_th = 0.1;
    return cfg;
}

Scenario baseline_scenario() {
    Scenario sc;
    sc.source = {300, 300, 25};
    sc.destination = {600, 300, 0};
    sc.relay = {350, 300, 60};
    sc.eve = {600, 400, 0};
    sc.loss = PathLossModel{2.0, 100.0};
    sc.air = ShadowedRician{5, 0.251, 0.279};
    return sc;
}

// Two-sided Kolmogorov-Smirnov statistic of samples against a CDF.
double ks_statistic(std::vector<double>& samples,
                    const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
    }
    return d;
}

// 0.1% critical value of the two-sided KS statistic.
double ks_critical(std::size_t n) { return 1.9495 / std::sqrt(static_cast<double>(n)); }

}  // namespace

TEST_CASE("shadowed-Rician sampler matches its distribution") {
    for (int m : {1, 2, 5}) {
        const ShadowedRician ch{m, 0.251, 0.279};
        const SrSampler sampler(ch);
        const ExpPolyMix cdf = sr_power_cdf(ch);
        TrialRng rng(11, static_cast<std::uint64_t>(m));
        std::vector<double> samples(200000);
        for (double& s : samples) s = sampler.draw(rng);
        CHECK(ks_statistic(samples, [&](double x) { return cdf(x); }) <
              ks_critical(samples.size()));
    }
}

TEST_CASE("max and sum of sampled gains match the composite laws") {
    const ShadowedRician ch{5, 0.251, 0.279};
    const SrSampler sampler(ch);
    const ExpPolyMix pdf = sr_power_pdf(ch);
    const ExpPolyMix cdf = sr_power_cdf(ch);
    const int u = 5;

    const ExpPolyMix max_cdf = max_iid_cdf(cdf, u);
    TrialRng rng(12, 0);
    std::vector<double> maxima(100000);
    for (double& s : maxima) {
        double x = 0.0;
        for (int i = 0; i < u; ++i) x = std::max(x, sampler.draw(rng));
        s = x;
    }
    CHECK(ks_statistic(maxima, [&](double x) { return max_cdf(x); }) <
          ks_critical(maxima.size()));

    const ExpPolyMix sum_pdf = sum_iid_pdf(pdf, u - 1);
    std::vector<double> sums(100000);
    for (double& s : sums) {
        double x = 0.0;
        for (int i = 0; i < u - 1; ++i) x += sampler.draw(rng);
        s = x;
    }
    CHECK(ks_statistic(sums, [&](double x) { return sum_pdf.integral_zero_to(x); }) <
          ks_critical(sums.size()));
}

TEST_CASE("estimator is deterministic for any thread count") {
    McPlan plan;
    plan.trials = 100000;
    plan.seed = 99;
    plan.scheme = Scheme::mrc;
    plan.jamming = true;
    McEstimate a = estimate_sop(plan, baseline_scenario(), baseline_config(), 1);
    McEstimate b = estimate_sop(plan, baseline_scenario(), baseline_config(), 3);
    CHECK(a.outage_count == b.outage_count);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.std_err == doctest::Approx(std::sqrt(a.p_hat * (1 - a.p_hat) / 1e5)));
}

TEST_CASE("estimate equals the sum of individual trials") {
    McPlan plan;
    plan.trials = 2000;
    plan.seed = 5;
    plan.scheme = Scheme::sc;
    plan.jamming = true;
    Scenario sc = baseline_scenario();
    SystemConfig cfg = baseline_config();
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < plan.trials; ++t) {
        TrialRng rng(plan.seed, t);
        count += run_trial(rng, sc, cfg, plan) ? 1 : 0;
    }
    McEstimate e = estimate_sop(plan, sc, cfg);
    CHECK(e.outage_count == count);
}

TEST_CASE("single UAV: jamming plans change nothing") {
    SystemConfig cfg = baseline_config();
    cfg.num_uavs = 1;
    McPlan with;
    with.trials = 20000;
    with.seed = 8;
    with.jamming = true;
    McPlan without = with;
    without.jamming = false;
    Scenario sc = baseline_scenario();
    CHECK(estimate_sop(with, sc, cfg).outage_count ==
          estimate_sop(without, sc, cfg).outage_count);
}

TEST_CASE("shared-seed dominance: jamming helps, selection combining helps") {
    Scenario sc = baseline_scenario();
    SystemConfig cfg = baseline_config();
    McPlan plan;
    plan.trials = 100000;
    plan.seed = 21;

    plan.scheme = Scheme::mrc;
    plan.jamming = false;
    std::uint64_t mrc_nojam = estimate_sop(plan, sc, cfg).outage_count;
    plan.jamming = true;
    std::uint64_t mrc_jam = estimate_sop(plan, sc, cfg).outage_count;
    plan.scheme = Scheme::sc;
    std::uint64_t sc_jam = estimate_sop(plan, sc, cfg).outage_count;
    plan.jamming = false;
    std::uint64_t sc_nojam = estimate_sop(plan, sc, cfg).outage_count;

    CHECK(mrc_jam < mrc_nojam);
    CHECK(sc_jam <= sc_nojam);
    CHECK(sc_jam <= mrc_jam);
    CHECK(sc_nojam <= mrc_nojam);
}

TEST_CASE("vanishing harvesting time leaves no secrecy") {
    SystemConfig cfg = baseline_config();
    cfg.alpha = 1e-3;
    McPlan plan;
    plan.trials = 20000;
    plan.seed = 3;
    plan.scheme = Scheme::sc;
    McEstimate e = estimate_sop(plan, baseline_scenario(), cfg);
    CHECK(e.p_hat > 0.99);
}

TEST_CASE("exact and asymptotic outage definitions agree at high source power") {
    Scenario sc = baseline_scenario();
    SystemConfig cfg = baseline_config();
    McPlan plan;
    plan.trials = 100000;
    plan.seed = 14;
    plan.scheme = Scheme::mrc;
    plan.jamming = true;
    plan.sop_definition = SopDefinition::asymptotic;
    McEstimate asym = estimate_sop(plan, sc, cfg);
    plan.sop_definition = SopDefinition::exact;
    McEstimate exact = estimate_sop(plan, sc, cfg);
    CHECK(std::fabs(asym.p_hat - exact.p_hat) < 0.02);
}

TEST_CASE("exact and approximate jamming models agree at high source power") {
    Scenario sc = baseline_scenario();
    SystemConfig cfg = baseline_config();
    McPlan plan;
    plan.trials = 100000;
    plan.seed = 15;
    plan.scheme = Scheme::mrc;
    plan.jamming = true;
    plan.jamming_model = JammingModel::approximate;
    McEstimate approx = estimate_sop(plan, sc, cfg);
    plan.jamming_model = JammingModel::exact;
    McEstimate exact = estimate_sop(plan, sc, cfg);
    CHECK(std::fabs(approx.p_hat - exact.p_hat) < 0.02);
}

TEST_CASE("random eavesdropper with a tiny disc reduces to the fixed case") {
    Scenario sc = baseline_scenario();
    sc.eve = {sc.source.x, sc.source.y, 0.0};  // disc center
    SystemConfig cfg = baseline_config();
    McPlan plan;
    plan.trials = 100000;
    plan.seed = 33;
    plan.scheme = Scheme::mrc;
    plan.jamming = true;
    McEstimate fixed = estimate_sop(plan, sc, cfg);
    McEstimate random = estimate_sop_random_e(plan, EavesdropperDisc{1e-6}, sc, cfg);
    double joint = std::sqrt(fixed.std_err * fixed.std_err +
                             random.std_err * random.std_err);
    CHECK(std::fabs(fixed.p_hat - random.p_hat) < 4.0 * joint + 1e-9);
}

TEST_CASE("the closer the eavesdropper, the higher the outage") {
    Scenario sc = baseline_scenario();
    SystemConfig cfg = baseline_config();
    McPlan plan;
    plan.trials = 100000;
    plan.seed = 40;
    plan.scheme = Scheme::mrc;
    plan.jamming = true;
    sc.eve = {400, 350, 0};  // near the source
    double near = estimate_sop(plan, sc, cfg).p_hat;
    sc.eve = {900, 900, 0};  // far away
    double far = estimate_sop(plan, sc, cfg).p_hat;
    CHECK(near > far);
}

TEST_CASE("plan validation") {
    McPlan plan;
    plan.trials = 0;
    CHECK_THROWS_AS(estimate_sop(plan, baseline_scenario(), baseline_config()),
                    std::domain_error);
    plan.trials = 10;
    plan.eavesdropper = EveModel::random_disc;
    plan.disc_radius = 0.0;
    CHECK_THROWS_AS(estimate_sop(plan, baseline_scenario(), baseline_config()),
                    std::domain_error);
}
