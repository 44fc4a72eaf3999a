#include "swarmsec/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swarmsec/composite.hpp"
#include "swarmsec/fading.hpp"
#include "swarmsec/quadrature.hpp"
#include "swarmsec/specfun.hpp"

namespace swarmsec {
namespace {

double factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n > 170) throw numerical_error("factorial: argument out of range");
    return table[static_cast<std::size_t>(n)];
}

double binom(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

double int_pow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Dense-coefficient view of a single-rate term list for fast pointwise
// evaluation: p(x) e^{-rate x}.
struct PolyExp {
    std::vector<double> coef;
    double rate = 0.0;

    double operator()(double x) const {
        double p = 0.0;
        for (std::size_t i = coef.size(); i-- > 0;) p = p * x + coef[i];
        return p * std::exp(-rate * x);
    }
};

PolyExp to_poly(const std::vector<ExpPolyTerm>& terms, double rate) {
    PolyExp p;
    p.rate = rate;
    for (const ExpPolyTerm& t : terms) {
        if (std::fabs(t.rate - rate) > 1e-9 * rate)
            throw numerical_error("to_poly: term list is not single-rate");
        if (p.coef.size() <= static_cast<std::size_t>(t.power))
            p.coef.resize(static_cast<std::size_t>(t.power) + 1, 0.0);
        p.coef[static_cast<std::size_t>(t.power)] += t.coef;
    }
    return p;
}

std::vector<ExpPolyTerm> survival_terms(const ExpPolyMix& cdf) {
    ExpPolyMix s = ExpPolyMix::constant(1.0) - cdf;
    s.consolidate();
    if (std::fabs(s.offset()) > 1e-9)
        throw numerical_error("survival_terms: CDF does not reach 1");
    return s.terms();
}

int max_power(const std::vector<ExpPolyTerm>& terms) {
    int p = 0;
    for (const ExpPolyTerm& t : terms) p = std::max(p, t.power);
    return p;
}

// Everything the four evaluators derive from (cfg, scenario, link gains).
struct Setup {
    SystemConfig cfg;
    const Scenario* sc = nullptr;
    LinkGains g;
    DerivedConstants dc;

    double eta = 0.0;                // shared air-fading rate
    std::vector<ExpPolyTerm> fx;     // pdf of the selected (max) gain
    std::vector<ExpPolyTerm> fy;     // air pdf terms (also the Z density)
    std::vector<ExpPolyTerm> sz;     // air survival terms
    PolyExp fy_poly;

    double a = 0.0;      // eps * lam_ud
    double inv_a = 0.0;
    double s = 0.0;      // lam_su / (gamma_s lam_se)
    double r_se = 0.0;   // lam_su / lam_se
    double c_ue = 0.0;   // 1 / (eps lam_ue)
    double gz = 0.0;     // 1 / (eps lam_ue (gamma_s - 1))
    double xi = 0.0;     // gamma_s / (eps lam_ud (gamma_s - 1))

    std::vector<double> fact_chi;  // chi_i!
    std::vector<double> wfac;      // c_i chi_i! (eta_i + s)^{-(chi_i+1)}
    std::vector<double> beta1;     // eta_i / (a (eta_i + s))

    double y_cut = 0.0;
    double z_cut = 0.0;

    // Jamming pieces, present when jamming was requested and U >= 2.
    bool jam = false;
    std::vector<ExpPolyTerm> fj;  // jam-sum pdf terms
    PolyExp fj_poly;
    double p_jam = 0.0;  // single-jammer power scale
    double b_jam = 0.0;  // p_jam * lam_ue
    double t_cut = 0.0;
    double v_max = 0.0;  // 1 / (eps gamma_s)
};

void check_unit_mass(const std::vector<ExpPolyTerm>& terms, const char* what) {
    long double mass = 0.0L;
    for (const ExpPolyTerm& t : terms)
        mass += static_cast<long double>(t.coef) * factorial(t.power) /
                int_pow(t.rate, t.power + 1);
    if (std::fabs(static_cast<double>(mass) - 1.0) > 1e-9)
        throw numerical_error(std::string(what) + ": density mass deviates from 1");
}

Setup make_setup(const SystemConfig& cfg, const Scenario& sc, const LinkGains& g,
                 bool jamming) {
    Setup st;
    st.cfg = cfg;
    st.sc = &sc;
    st.g = g;
    st.dc = derived_constants(cfg);
    if (!(st.dc.gamma_s > 1.0))
        throw std::domain_error("SopQuery: secrecy threshold gamma_s must exceed 1");

    const ExpPolyMix pdf = sr_power_pdf(sc.air);
    const ExpPolyMix cdf = sr_power_cdf(sc.air);
    st.eta = sr_rate(sc.air);

    ExpPolyMix fx = max_iid_pdf(pdf, cdf, cfg.num_uavs);
    fx.consolidate();
    st.fx = fx.terms();
    check_unit_mass(st.fx, "selected-gain density");
    st.fy = pdf.terms();
    st.sz = survival_terms(cdf);
    st.fy_poly = to_poly(st.fy, st.eta);

    const double eps = st.dc.epsilon;
    const double gs = st.dc.gamma_s;
    st.a = eps * g.ud;
    st.inv_a = 1.0 / st.a;
    st.s = g.su / (gs * g.se);
    st.r_se = g.su / g.se;
    st.c_ue = 1.0 / (eps * g.ue);
    st.gz = 1.0 / (eps * g.ue * (gs - 1.0));
    st.xi = gs / (eps * g.ud * (gs - 1.0));

    st.fact_chi.reserve(st.fx.size());
    st.wfac.reserve(st.fx.size());
    st.beta1.reserve(st.fx.size());
    for (const ExpPolyTerm& t : st.fx) {
        const double fc = factorial(t.power);
        st.fact_chi.push_back(fc);
        st.wfac.push_back(t.coef * fc / int_pow(t.rate + st.s, t.power + 1));
        st.beta1.push_back(t.rate / (st.a * (t.rate + st.s)));
    }

    st.y_cut = exp_poly_tail_cutoff(max_power(st.fy), st.eta);
    st.z_cut = st.y_cut;

    if (jamming && cfg.num_uavs >= 2) {
        st.jam = true;
        ExpPolyMix fj = sum_iid_pdf(pdf, cfg.num_uavs - 1);
        fj.consolidate();
        st.fj = fj.terms();
        check_unit_mass(st.fj, "jam-sum density");
        st.fj_poly = to_poly(st.fj, st.eta);
        st.p_jam = jamming_power_scale(cfg, sc, g);
        st.b_jam = st.p_jam * g.ue;
        st.t_cut = exp_poly_tail_cutoff(max_power(st.fj), st.eta);
        st.v_max = 1.0 / (eps * gs);
    }
    return st;
}

// Laplace transform of the selected-gain density.
double laplace_x(const Setup& st, double theta) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < st.fx.size(); ++i)
        acc += st.fx[i].coef * st.fact_chi[i] /
               int_pow(st.fx[i].rate + theta, st.fx[i].power + 1);
    return static_cast<double>(acc);
}

void require_converged(const QuadResult& r, const char* what) {
    if (!r.converged)
        throw numerical_error(std::string(what) + ": quadrature did not converge");
}

// ---------------------------------------------------------------------
// Piecewise-Chebyshev cache of the scaled survival-weighted tail sums.
// The cached function decays like e^{-rate w}; the exponential is divided
// out before fitting and restored on evaluation.  The tail sums also carry
// a sharp analytic layer near w = 0 (the high-power Laplace factor), so the
// segments are graded geometrically through w = hi expm1(k u) / expm1(k);
// the grading strength k is chosen so the first segment resolves the layer.
// The fit is validated against the direct evaluator at off-node points.

struct ChebCache {
    double hi = 0.0;
    double rate = 0.0;
    double grade = 0.0;    // k; < 1e-4 means a plain uniform grid
    double expm1k = 0.0;
    int nseg = 0;
    int deg = 0;
    std::vector<double> coef;  // nseg x deg

    double w_of_u(double u) const {
        return grade < 1e-4 ? hi * u : hi * std::expm1(grade * u) / expm1k;
    }

    double operator()(double w) const {
        if (w >= hi) return 0.0;
        if (w < 0.0) w = 0.0;
        const double u =
            grade < 1e-4 ? w / hi : std::log1p(w * expm1k / hi) / grade;
        int k = std::min(nseg - 1, static_cast<int>(u * nseg));
        const double x = 2.0 * (u * nseg - k) - 1.0;
        const double* c = coef.data() + static_cast<std::size_t>(k) * deg;
        double b1 = 0.0, b2 = 0.0;
        for (int j = deg - 1; j >= 1; --j) {
            const double b0 = 2.0 * x * b1 - b2 + c[j];
            b2 = b1;
            b1 = b0;
        }
        return (x * b1 - b2 + c[0]) * std::exp(-rate * w);
    }
};

ChebCache build_cheb_cache(const std::function<double(double)>& f, double hi,
                           double rate, double layer_scale, int nseg, int deg) {
    ChebCache cache;
    cache.hi = hi;
    cache.rate = rate;
    cache.nseg = nseg;
    cache.deg = deg;
    cache.coef.resize(static_cast<std::size_t>(nseg) * deg);

    // First-segment target width: a quarter of the layer scale (or uniform
    // when the layer is no finer than the uniform grid already is).
    const double h0 = std::min(0.25 * layer_scale, hi / nseg);
    double k_lo = 0.0, k_hi = 80.0;
    for (int it = 0; it < 200; ++it) {
        const double k = 0.5 * (k_lo + k_hi);
        const double first = hi * std::expm1(k / nseg) / std::expm1(k);
        (first > h0 ? k_lo : k_hi) = k;
    }
    cache.grade = 0.5 * (k_lo + k_hi);
    cache.expm1k = std::expm1(cache.grade);

    const double pi = std::acos(-1.0);
    std::vector<double> vals(static_cast<std::size_t>(deg));
    for (int k = 0; k < nseg; ++k) {
        for (int j = 0; j < deg; ++j) {
            const double x = std::cos(pi * (j + 0.5) / deg);
            const double u = (k + 0.5 * (1.0 + x)) / nseg;
            const double w = cache.w_of_u(u);
            vals[static_cast<std::size_t>(j)] = f(w) * std::exp(rate * w);
        }
        double* c = cache.coef.data() + static_cast<std::size_t>(k) * deg;
        for (int n = 0; n < deg; ++n) {
            double acc = 0.0;
            for (int j = 0; j < deg; ++j)
                acc += vals[static_cast<std::size_t>(j)] *
                       std::cos(pi * n * (j + 0.5) / deg);
            c[n] = 2.0 * acc / deg;
        }
        c[0] *= 0.5;
    }

    // Validate in the scaled (exponential-free) space.  The direct
    // evaluator cancels badly once the scaled values drop several orders
    // below their range maximum (its alternating mixture weights overwhelm
    // the tiny sums), so the pointwise check is relative above a floor of
    // 1e-4 of that maximum and absolute against the floor below it; errors
    // under the floor cannot move the downstream integrals.
    std::vector<double> ws(23), qd(23), qf(23);
    double qmax = std::fabs(f(0.0));
    for (int i = 0; i < 23; ++i) {
        ws[static_cast<std::size_t>(i)] = cache.w_of_u((i + 0.618) / 23.4);
        const double w = ws[static_cast<std::size_t>(i)];
        qd[static_cast<std::size_t>(i)] = f(w) * std::exp(rate * w);
        qf[static_cast<std::size_t>(i)] = cache(w) * std::exp(rate * w);
        qmax = std::max(qmax, std::fabs(qd[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < 23; ++i) {
        const double scale =
            std::max(std::fabs(qd[static_cast<std::size_t>(i)]), 1e-4 * qmax + 1e-300);
        if (std::fabs(qf[static_cast<std::size_t>(i)] -
                      qd[static_cast<std::size_t>(i)]) > 1e-7 * scale)
            throw numerical_error("tail-sum interpolation failed validation");
    }
    return cache;
}

// ---------------------------------------------------------------------
// Shared sum pieces.

// sum_j sum_m zeta_j kappa_m gz^{q_m} Theta2(p_j, q_m, eta, eta gz, xi):
// the probability that the relay branch alone breaks secrecy, marginalized
// over Y and Z.
double relay_breach_sum(const Setup& st) {
    long double acc = 0.0L;
    for (const ExpPolyTerm& ty : st.fy)
        for (const ExpPolyTerm& tz : st.sz)
            acc += ty.coef * tz.coef * int_pow(st.gz, tz.power) *
                   theta2(ty.power, tz.power, st.eta, st.eta * st.gz, st.xi);
    return static_cast<double>(acc);
}

double eval_sc_nojam(const Setup& st, std::map<std::string, double>& diag) {
    const double breach = relay_breach_sum(st);
    long double rest = 0.0L;
    for (std::size_t i = 0; i < st.fx.size(); ++i) {
        const int n = st.fx[i].power + 1;
        long double j1 = 0.0L, j3 = 0.0L;
        for (const ExpPolyTerm& ty : st.fy) {
            j1 += ty.coef * theta1(ty.power, n, st.eta, st.inv_a, st.beta1[i]);
            for (const ExpPolyTerm& tz : st.sz)
                j3 += ty.coef * tz.coef * int_pow(st.gz, tz.power) *
                      theta3(ty.power, n, tz.power, st.eta, st.eta * st.gz,
                             st.inv_a, st.beta1[i], st.xi);
        }
        rest += st.wfac[i] * (j1 - j3);
    }
    diag["relay_breach"] = breach;
    diag["source_wiretap_term"] = static_cast<double>(rest);
    return breach + static_cast<double>(rest);
}

double eval_mrc_nojam(const Setup& st, std::map<std::string, double>& diag) {
    const double breach = relay_breach_sum(st);

    auto integrand = [&](double y) {
        const double fy = st.fy_poly(y);
        if (fy == 0.0) return 0.0;
        const double ay = st.a * y;
        const double t_of_y = st.s * ay / (ay + 1.0);
        const double uz = st.gz * y / (y + st.xi);
        long double acc = 0.0L;
        double maxmag = 0.0;
        bool degenerate = false;
        for (std::size_t i = 0; i < st.fx.size() && !degenerate; ++i) {
            const int n = st.fx[i].power + 1;
            const double lam = st.fx[i].rate + t_of_y;
            const double dif = lam - st.r_se;
            if (std::fabs(dif) < 1e-6 * (lam + st.r_se)) {
                degenerate = true;
                break;
            }
            const double beta = lam * st.c_ue / dif;
            long double inner = 0.0L;
            for (const ExpPolyTerm& tz : st.fy)
                inner += tz.coef * theta6(uz, tz.power, n, st.eta, st.c_ue, beta);
            const double term =
                st.fx[i].coef * st.fact_chi[i] / int_pow(dif, n) *
                static_cast<double>(inner);
            acc += term;
            maxmag = std::max(maxmag, std::fabs(term));
        }
        if (!degenerate && maxmag <= 30.0 * std::fabs(static_cast<double>(acc)))
            return fy * static_cast<double>(acc);
        // Near lam ~ r_se the pole parametrization degenerates, and when the
        // alternating mixture weights cancel the summed kernel values lose
        // precision; both cases integrate the stable pointwise form instead.
        QuadResult r = integrate(
            [&](double z) {
                return st.fy_poly(z) *
                       laplace_x(st, t_of_y - st.r_se * z / (z + st.c_ue));
            },
            0.0, std::min(uz, st.z_cut));
        require_converged(r, "combined-branch stable fallback");
        return fy * r.value;
    };
    QuadResult wiretap = integrate(integrand, 0.0, st.y_cut);
    require_converged(wiretap, "combined-branch integral");
    diag["relay_breach"] = breach;
    diag["source_wiretap_term"] = wiretap.value;
    diag["source_wiretap_quad_error"] = wiretap.error;
    return breach + wiretap.value;
}

// One minus this integral is the probability that the relay branch alone
// breaks secrecy under the jamming-raised ceiling: the common 1-D piece of
// both jamming cases.
double relay_ok_jam(const Setup& st, std::map<std::string, double>& diag) {
    auto integrand = [&](double t) {
        const double fj = st.fj_poly(t);
        if (fj == 0.0) return 0.0;
        const double uz = st.gz * (1.0 + st.b_jam * t);
        long double acc = 0.0L;
        for (const ExpPolyTerm& tz : st.fy)
            for (const ExpPolyTerm& ty : st.sz)
                acc += tz.coef * ty.coef * int_pow(st.xi, ty.power) *
                       theta4(uz, tz.power, ty.power, st.eta, st.eta * st.xi, uz);
        return fj * static_cast<double>(acc);
    };
    QuadResult r = integrate(integrand, 0.0, st.t_cut);
    require_converged(r, "jam ceiling integral");
    diag["relay_breach"] = 1.0 - r.value;
    diag["relay_quad_error"] = r.error;
    return r.value;
}

// E_t[S_Z(ceiling(t))] in closed Theta7 form; recorded as a diagnostic and
// cross-checked in the tests.
double eval_ceiling_exceed(const Setup& st) {
    const double c_jam = st.gz * st.b_jam;
    long double acc = 0.0L;
    for (const ExpPolyTerm& tz : st.sz)
        for (const ExpPolyTerm& tj : st.fj)
            acc += tz.coef * tj.coef * int_pow(c_jam, tz.power) *
                   theta7(tj.power, tz.power, st.eta, st.eta * c_jam, 1.0 / st.b_jam);
    return static_cast<double>(acc);
}

// Scaled tail sum G(w) = int_w^inf f_Y(y) L_X(W-threshold(y)) dy for the
// selection-combining jamming case.
double gtail_sc(const Setup& st, double w) {
    std::vector<double> buf(static_cast<std::size_t>(max_power(st.fy)) + 1);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < st.fx.size(); ++i) {
        const int n = st.fx[i].power + 1;
        theta5_family(w, max_power(st.fy), n, st.eta, st.inv_a, st.beta1[i],
                      buf.data());
        long double inner = 0.0L;
        for (const ExpPolyTerm& ty : st.fy)
            inner += ty.coef * buf[static_cast<std::size_t>(ty.power)];
        acc += st.wfac[i] * inner;
    }
    return static_cast<double>(acc);
}

// Same tail sum for maximum ratio combining, where the W-threshold also
// carries the relay-branch term through V(w).
double gtail_mrc(const Setup& st, double w) {
    const double v = (st.g.ud / st.dc.gamma_s) * w / (1.0 + st.a * w);
    const double shift = st.dc.epsilon * st.r_se * v;
    std::vector<double> buf(static_cast<std::size_t>(max_power(st.fy)) + 1);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < st.fx.size(); ++i) {
        const int n = st.fx[i].power + 1;
        const double vt = st.fx[i].rate - shift;
        const double beta = vt / (st.a * (vt + st.s));
        theta5_family(w, max_power(st.fy), n, st.eta, st.inv_a, beta, buf.data());
        long double inner = 0.0L;
        for (const ExpPolyTerm& ty : st.fy)
            inner += ty.coef * buf[static_cast<std::size_t>(ty.power)];
        acc += st.fx[i].coef * st.fact_chi[i] / int_pow(vt + st.s, n) * inner;
    }
    return static_cast<double>(acc);
}

double eval_jam(const Setup& st, Scheme scheme, std::map<std::string, double>& diag) {
    const double relay_ok = relay_ok_jam(st, diag);
    diag["ceiling_exceed_theta7"] = eval_ceiling_exceed(st);

    const double w_cut = exp_poly_tail_cutoff(max_power(st.fy) + 1, st.eta);
    auto gtail = [&](double w) {
        return scheme == Scheme::sc ? gtail_sc(st, w) : gtail_mrc(st, w);
    };
    const double layer = st.eta / (st.s * st.a * (max_power(st.fx) + 1));
    const ChebCache cache = build_cheb_cache(gtail, w_cut, st.eta, layer, 32, 20);

    auto f = [&](double t, double z) {
        const double fj = st.fj_poly(t);
        const double fz = st.fy_poly(z);
        const double uz = st.gz * (1.0 + st.b_jam * t);
        const double w = st.xi * z / (uz - z);
        return fj * fz * cache(w);
    };
    auto z_hi = [&](double t) {
        const double uz = st.gz * (1.0 + st.b_jam * t);
        return std::min(st.z_cut, uz * w_cut / (st.xi + w_cut));
    };
    QuadResult tail = integrate_2d(f, 0.0, st.t_cut, [](double) { return 0.0; },
                                   z_hi);
    require_converged(tail, "jam tail integral");
    diag["source_wiretap_term"] = tail.value;
    diag["source_wiretap_quad_error"] = tail.error;
    return 1.0 - relay_ok + tail.value;
}

SopResult finish(double raw, Scheme scheme, bool jamming,
                 std::map<std::string, double> diag) {
    if (!std::isfinite(raw))
        throw numerical_error("sop evaluation produced a non-finite value");
    if (raw < -1e-6 || raw > 1.0 + 1e-6)
        throw numerical_error("sop value " + std::to_string(raw) +
                              " overshoots [0,1] beyond tolerance");
    SopResult r;
    r.value = std::clamp(raw, 0.0, 1.0);
    r.method = SopMethod::analytic;
    r.scheme = scheme;
    r.jamming = jamming;
    diag["raw_value"] = raw;
    r.diagnostics = std::move(diag);
    return r;
}

void require_query(const SopQuery& q, Scheme scheme, bool jamming, const char* op) {
    if (q.scheme != scheme || q.jamming != jamming)
        throw std::domain_error(std::string(op) +
                                ": query scheme/jamming does not match the operation");
}

SopResult eval_fixed(const SopQuery& q, const LinkGains& g) {
    std::map<std::string, double> diag;
    if (q.jamming && q.cfg.num_uavs >= 2) {
        Setup st = make_setup(q.cfg, q.scenario, g, true);
        const double raw = eval_jam(st, q.scheme, diag);
        return finish(raw, q.scheme, true, std::move(diag));
    }
    Setup st = make_setup(q.cfg, q.scenario, g, false);
    if (q.jamming) diag["delegated_single_uav"] = 1.0;
    const double raw =
        q.scheme == Scheme::sc ? eval_sc_nojam(st, diag) : eval_mrc_nojam(st, diag);
    return finish(raw, q.scheme, q.jamming, std::move(diag));
}

}  // namespace

SopResult sop_sc_nojam(const SopQuery& q) {
    require_query(q, Scheme::sc, false, "sop_sc_nojam");
    return eval_fixed(q, link_gains(q.scenario));
}

SopResult sop_sc_jam(const SopQuery& q) {
    require_query(q, Scheme::sc, true, "sop_sc_jam");
    return eval_fixed(q, link_gains(q.scenario));
}

SopResult sop_mrc_nojam(const SopQuery& q) {
    require_query(q, Scheme::mrc, false, "sop_mrc_nojam");
    return eval_fixed(q, link_gains(q.scenario));
}

SopResult sop_mrc_jam(const SopQuery& q) {
    require_query(q, Scheme::mrc, true, "sop_mrc_jam");
    return eval_fixed(q, link_gains(q.scenario));
}

SopResult sop_lower_bound_random_e(const SopQuery& q) {
    if (!(q.disc.r_c > 0.0))
        throw std::domain_error("sop_lower_bound_random_e: disc radius must be > 0");
    LinkGains g = mean_link_gains_disc(q.scenario, q.disc);
    SopResult r = eval_fixed(q, g);
    r.diagnostics["disc_radius"] = q.disc.r_c;
    return r;
}

SopResult evaluate_sop(const SopQuery& q) {
    if (q.random_eve) return sop_lower_bound_random_e(q);
    if (q.scheme == Scheme::sc) return q.jamming ? sop_sc_jam(q) : sop_sc_nojam(q);
    return q.jamming ? sop_mrc_jam(q) : sop_mrc_nojam(q);
}

// ---------------------------------------------------------------------

namespace analytic_detail {
namespace {

LinkGains query_gains(const SopQuery& q) {
    return q.random_eve ? mean_link_gains_disc(q.scenario, q.disc)
                        : link_gains(q.scenario);
}

// Density of V = lam_ue Z / (eps lam_ue Z + 1 + b_jam t) marginalized over
// the jam sum, in closed form (binomial expansion of the shifted gamma
// integrals).
double jam_v_density(const Setup& st, double v) {
    const double lam_ue = st.g.ue;
    const double eps = st.dc.epsilon;
    const double a_of_v = v / (lam_ue * (1.0 - eps * v));
    const double slope = 1.0 / (lam_ue * (1.0 - eps * v) * (1.0 - eps * v));
    const double rate_t = st.eta * (1.0 + a_of_v * st.b_jam);
    long double acc = 0.0L;
    for (const ExpPolyTerm& tz : st.fy) {
        const double za = tz.coef * int_pow(a_of_v, tz.power);
        for (const ExpPolyTerm& tj : st.fj) {
            long double gsum = 0.0L;
            for (int r = 0; r <= tz.power + 1; ++r)
                gsum += binom(tz.power + 1, r) * int_pow(st.b_jam, r) *
                        factorial(tj.power + r) /
                        int_pow(rate_t, tj.power + r + 1);
            acc += za * tj.coef * gsum;
        }
    }
    return slope * std::exp(-st.eta * a_of_v) * static_cast<double>(acc);
}

double reference_jam(const SopQuery& q, Scheme scheme) {
    const LinkGains g = query_gains(q);
    if (q.cfg.num_uavs < 2) {
        SopQuery base = q;
        base.jamming = false;
        return scheme == Scheme::sc ? sop_sc_nojam_reference(base)
                                    : sop_mrc_nojam_reference(base);
    }
    const Setup st = make_setup(q.cfg, q.scenario, g, true);
    const double gs = st.dc.gamma_s;
    const double eps = st.dc.epsilon;

    auto y_lo = [&](double v) {
        const double w = gs * v / (g.ud * (1.0 - eps * gs * v));
        return std::min(w, st.y_cut);
    };
    auto f = [&](double v, double y) {
        const double ay = st.a * y;
        const double t_of_y = st.s * ay / (ay + 1.0);
        const double theta = scheme == Scheme::sc
                                 ? t_of_y
                                 : t_of_y - st.r_se * eps * v;
        return jam_v_density(st, v) * st.fy_poly(y) * (1.0 - laplace_x(st, theta));
    };
    QuadControl ctl;
    ctl.rel_tol = 1e-9;
    QuadResult r = integrate_2d(f, 0.0, st.v_max, y_lo,
                                [&](double) { return st.y_cut; }, ctl);
    require_converged(r, "jam reference integral");
    return 1.0 - r.value;
}

}  // namespace

double sop_sc_nojam_reference(const SopQuery& q) {
    const Setup st = make_setup(q.cfg, q.scenario, query_gains(q), false);
    const ExpPolyMix cdf = sr_power_cdf(q.scenario.air);
    auto f = [&](double y) {
        const double ay = st.a * y;
        const double w_rate = st.s * ay / (ay + 1.0);
        const double uz = st.gz * y / (y + st.xi);
        return st.fy_poly(y) * cdf(uz) * (1.0 - laplace_x(st, w_rate));
    };
    QuadControl ctl;
    ctl.rel_tol = 1e-10;
    QuadResult r = integrate(f, 0.0, st.y_cut, ctl);
    require_converged(r, "reference integral");
    return 1.0 - r.value;
}

double sop_mrc_nojam_reference(const SopQuery& q) {
    const Setup st = make_setup(q.cfg, q.scenario, query_gains(q), false);
    auto f = [&](double y, double z) {
        const double ay = st.a * y;
        const double t_of_y = st.s * ay / (ay + 1.0);
        const double theta = t_of_y - st.r_se * z / (z + st.c_ue);
        return st.fy_poly(y) * st.fy_poly(z) * (1.0 - laplace_x(st, theta));
    };
    auto z_hi = [&](double y) {
        return std::min(st.z_cut, st.gz * y / (y + st.xi));
    };
    QuadControl ctl;
    ctl.rel_tol = 1e-9;
    QuadResult r = integrate_2d(f, 0.0, st.y_cut, [](double) { return 0.0; }, z_hi,
                                ctl);
    require_converged(r, "reference integral");
    return 1.0 - r.value;
}

double sop_sc_jam_reference(const SopQuery& q) { return reference_jam(q, Scheme::sc); }

double sop_mrc_jam_reference(const SopQuery& q) {
    return reference_jam(q, Scheme::mrc);
}

}  // namespace analytic_detail
}  // namespace swarmsec
