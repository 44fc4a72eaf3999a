#include "swarmsec/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace swarmsec {

SrSampler::SrSampler(const ShadowedRician& ch) : rate_(sr_rate(ch)) {
    std::vector<double> w(static_cast<std::size_t>(ch.m));
    sr_gamma_mixture_weights(ch, w.data());
    cumulative_.resize(w.size());
    double acc = 0.0;
    for (std::size_t l = 0; l < w.size(); ++l) {
        acc += w[l];
        cumulative_[l] = acc;
    }
    cumulative_.back() = 1.0;
}

double SrSampler::draw(TrialRng& rng) const {
    double u = rng.next_u01();
    std::size_t l = 0;
    while (l + 1 < cumulative_.size() && u >= cumulative_[l]) ++l;
    // Erlang(l+1, rate) from one log of a product of uniform complements.
    double prod = 1.0;
    for (std::size_t k = 0; k <= l; ++k) prod *= 1.0 - rng.next_u01();
    return -std::log(prod) / rate_;
}

namespace {

struct TrialContext {
    SystemConfig cfg;
    Scenario sc;
    McPlan plan;
    DerivedConstants dc;
    LinkGains gains;
    SrSampler sampler;
    NodePosition disc_center;
};

TrialContext make_trial_context(const Scenario& sc, const SystemConfig& cfg,
                                const McPlan& plan) {
    return TrialContext{cfg,
                        sc,
                        plan,
                        derived_constants(cfg),
                        link_gains(sc),
                        SrSampler(sc.air),
                        NodePosition{sc.source.x, sc.source.y, 0.0}};
}

bool trial_outcome(TrialRng& rng, const TrialContext& ctx) {
    const SystemConfig& cfg = ctx.cfg;
    const McPlan& plan = ctx.plan;
    LinkGains g = ctx.gains;
    if (plan.eavesdropper == EveModel::random_disc) {
        double r = plan.disc_radius * std::sqrt(rng.next_u01());
        double th = 2.0 * std::numbers::pi * rng.next_u01();
        NodePosition e{ctx.disc_center.x + r * std::cos(th),
                       ctx.disc_center.y + r * std::sin(th), 0.0};
        g.se = path_loss(ctx.sc.loss, distance(ctx.sc.source, e));
        g.ue = path_loss(ctx.sc.loss, distance(ctx.sc.relay, e));
    }

    double x = 0.0;
    for (int i = 0; i < cfg.num_uavs; ++i) x = std::max(x, ctx.sampler.draw(rng));
    double y = ctx.sampler.draw(rng);
    double z = ctx.sampler.draw(rng);
    double w = rng.next_exponential(1.0);

    double jam = 0.0;
    if (plan.jamming && cfg.num_uavs > 1) {
        if (plan.jamming_model == JammingModel::approximate) {
            double j_sum = 0.0;
            for (int j = 0; j + 1 < cfg.num_uavs; ++j) j_sum += ctx.sampler.draw(rng);
            jam = jamming_power_approximate(cfg, ctx.sc, g, j_sum);
        } else {
            double sum = 0.0;
            for (int j = 0; j + 1 < cfg.num_uavs; ++j) {
                double h_sj = ctx.sampler.draw(rng);
                double h_je = ctx.sampler.draw(rng);
                sum += (cfg.psi * g.su * h_sj + 1.0) * g.ue * h_je;
            }
            jam = cfg.delta * ctx.dc.epsilon * sum;
        }
    }

    if (plan.sop_definition == SopDefinition::asymptotic) {
        double gd = snr_destination(cfg, g, x, y);
        double ge = combine_eve(plan.scheme, snr_eve_direct(cfg, g, w),
                                snr_eve_relay(cfg, g, x, z, jam));
        return gd < ctx.dc.gamma_s * ge;
    }
    double gd = snr_destination_exact(cfg, g, x, y);
    double ge = combine_eve(plan.scheme, snr_eve_direct(cfg, g, w),
                            snr_eve_relay_exact(cfg, g, x, z, jam));
    return 1.0 + gd < ctx.dc.gamma_s * (1.0 + ge);
}

void validate_plan(const McPlan& plan) {
    if (plan.trials < 1) throw std::domain_error("McPlan: trials must be >= 1");
    if (plan.eavesdropper == EveModel::random_disc && !(plan.disc_radius > 0.0))
        throw std::domain_error(
            "McPlan: disc_radius must be > 0 in random-eavesdropper mode");
}

}  // namespace

bool run_trial(TrialRng& rng, const Scenario& sc, const SystemConfig& cfg,
               const McPlan& plan) {
    validate_plan(plan);
    TrialContext ctx = make_trial_context(sc, cfg, plan);
    return trial_outcome(rng, ctx);
}

McEstimate estimate_sop(const McPlan& plan, const Scenario& sc, const SystemConfig& cfg,
                        int threads) {
    validate_plan(plan);
    TrialContext ctx = make_trial_context(sc, cfg, plan);

    const std::uint64_t n = plan.trials;
    constexpr std::uint64_t kChunk = 1u << 14;
    const std::uint64_t nchunks = (n + kChunk - 1) / kChunk;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> outages{0};

    auto worker = [&]() {
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (c >= nchunks) return;
            std::uint64_t lo = c * kChunk;
            std::uint64_t hi = std::min(n, lo + kChunk);
            std::uint64_t local = 0;
            for (std::uint64_t t = lo; t < hi; ++t) {
                TrialRng rng(plan.seed, t);
                local += trial_outcome(rng, ctx) ? 1 : 0;
            }
            outages.fetch_add(local, std::memory_order_relaxed);
        }
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    McEstimate est;
    est.trials = n;
    est.outage_count = outages.load();
    est.p_hat = static_cast<double>(est.outage_count) / static_cast<double>(n);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n));
    return est;
}

McEstimate estimate_sop_random_e(const McPlan& plan, const EavesdropperDisc& disc,
                                 const Scenario& sc, const SystemConfig& cfg,
                                 int threads) {
    McPlan p = plan;
    p.eavesdropper = EveModel::random_disc;
    p.disc_radius = disc.r_c;
    return estimate_sop(p, sc, cfg, threads);
}

}  // namespace swarmsec
