#include "swarmsec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

namespace swarmsec {

namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;

// ---- binomial coefficients (cached Pascal triangle, long double) --------

constexpr int kPascalRows = 300;
std::vector<double> g_pascal;
std::once_flag g_pascal_once;

void build_pascal() {
    g_pascal.resize(static_cast<size_t>(kPascalRows) * (kPascalRows + 1) / 2);
    auto at = [](int n, int k) -> size_t {
        return static_cast<size_t>(n) * (n + 1) / 2 + k;
    };
    g_pascal[at(0, 0)] = 1.0;
    for (int n = 1; n < kPascalRows; ++n) {
        long double prev = 0.0L;
        for (int k = 0; k <= n; ++k) {
            long double cur = (k <= n - 1) ? (long double)g_pascal[at(n - 1, k)] : 0.0L;
            g_pascal[at(n, k)] = (double)(prev + cur);
            prev = cur;
        }
    }
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n < kPascalRows) {
        std::call_once(g_pascal_once, build_pascal);
        return g_pascal[static_cast<size_t>(n) * (n + 1) / 2 + k];
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    if (n < 171) {
        double f = 1.0;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    }
    return std::exp(std::lgamma(n + 1.0));
}

// ---- E_n helpers ---------------------------------------------------------

// E_n(x) power series for 0 < x <= 1 (Cephes expn layout), unscaled.
double en_small_unscaled(int n, double x) {
    double psi = -kEuler - std::log(x);
    for (int i = 1; i < n; ++i) psi += 1.0 / i;

    const double z = -x;
    double xk = 0.0, yk = 1.0, pk = 1.0 - n;
    double ans = (n == 1) ? 0.0 : 1.0 / pk;
    for (int it = 0; it < 400; ++it) {
        xk += 1.0;
        yk *= z / xk;
        pk += 1.0;
        if (pk != 0.0) ans += yk / pk;
        const double t = (ans != 0.0) ? std::fabs(yk / pk / ans) : 1.0;
        if (t <= 1e-17) break;
    }
    return std::pow(z, n - 1.0) * psi / factorial(n - 1) - ans;
}

// e^x E_n(x) by continued fraction, for x > 1 (also usable near x = 1).
double en_cf_scaled(int n, double x) {
    const double big = 1e300;
    double b = x + n;
    double c = big;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 400; ++i) {
        const double a = -static_cast<double>(i) * ((n - 1.0) + i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h;
}

struct LossTracker {
    long double sum = 0.0L;
    double maxmag = 0.0;
    void add(double term) {
        sum += term;
        maxmag = std::max(maxmag, std::fabs(term));
    }
    double value() const { return static_cast<double>(sum); }
    // True when the accumulated cancellation keeps ~1e-9 relative accuracy.
    bool well_conditioned() const {
        const double v = std::fabs(static_cast<double>(sum));
        return std::isfinite(v) && v >= 1e-7 * maxmag;
    }
};

[[noreturn]] void bail(const char* what) { throw numerical_error(what); }

double pow_int(double x, int n) {
    double r = 1.0, b = x;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

}  // namespace

// ---- exponential integrals ----------------------------------------------

double expint_En_scaled(int n, double x) {
    if (n < 0) throw std::domain_error("expint_En_scaled: n must be >= 0");
    if (x < 0.0) throw std::domain_error("expint_En_scaled: x must be >= 0");
    if (x == 0.0) {
        if (n >= 2) return 1.0 / (n - 1.0);
        throw std::domain_error("expint_En_scaled: E_n(0) diverges for n <= 1");
    }
    if (n == 0) return 1.0 / x;
    if (x <= 1.0) return std::exp(x) * en_small_unscaled(n, x);
    return en_cf_scaled(n, x);
}

void expint_En_scaled_array(int kmax, double x, double* out) {
    if (kmax < 0) throw std::domain_error("expint_En_scaled_array: kmax must be >= 0");
    if (x <= 0.0) throw std::domain_error("expint_En_scaled_array: x must be > 0");
    out[0] = 1.0 / x;
    if (kmax == 0) return;

    // Split point n0: upward recurrence is stable for n > x, downward for
    // n < x, so anchor one direct evaluation near n = x and sweep both ways.
    int n0 = 1;
    if (x > 1.0) n0 = std::min<int>(kmax, static_cast<int>(x) + 1);
    out[n0] = expint_En_scaled(n0, x);
    for (int n = n0; n < kmax; ++n) out[n + 1] = (1.0 - x * out[n]) / n;
    for (int n = n0 - 1; n >= 1; --n) out[n] = (1.0 - n * out[n + 1]) / x;
}

double expint_E1(double x) {
    if (x <= 0.0) throw std::domain_error("expint_E1: x must be > 0");
    return std::exp(-x) * expint_En_scaled(1, x);
}

double expint_Ei(double x) {
    if (x >= 0.0)
        throw std::domain_error("expint_Ei: only negative arguments are supported");
    return -std::exp(x) * expint_En_scaled(1, -x);
}

// ---- phi kernels ---------------------------------------------------------

double phi1_scaled(double u, int v, double mu) {
    if (mu <= 0.0) throw std::domain_error("phi1_scaled: mu must be > 0");
    if (u < 0.0) throw std::domain_error("phi1_scaled: u must be >= 0");
    if (v >= 0) {
        // sum_{k=0}^{v} (v!/k!) u^k mu^{k-v-1}, ascending-k recurrence.
        double t = (v > 20) ? std::exp(std::lgamma(v + 1.0) - (v + 1.0) * std::log(mu))
                            : factorial(v) / pow_int(mu, v + 1);
        double s = t;
        const double um = u * mu;
        for (int k = 1; k <= v; ++k) {
            t *= um / k;
            s += t;
        }
        return s;
    }
    if (u == 0.0) throw std::domain_error("phi1_scaled: u must be > 0 when v < 0");
    return std::pow(u, v + 1.0) * expint_En_scaled(-v, mu * u);
}

double phi1(double u, int v, double mu) {
    return std::exp(-mu * u) * phi1_scaled(u, v, mu);
}

void phi1_scaled_array(double u, double mu, int wmin, int wmax, double* out) {
    if (mu <= 0.0) throw std::domain_error("phi1_scaled_array: mu must be > 0");
    if (wmin > wmax) throw std::domain_error("phi1_scaled_array: wmin > wmax");
    if (u < 0.0 || (u == 0.0 && wmin < 0))
        throw std::domain_error("phi1_scaled_array: u out of range");

    if (wmin < 0) {
        std::vector<double> en(-wmin + 1);
        expint_En_scaled_array(-wmin, mu * u, en.data());
        double up = 1.0;  // u^{w+1} at w = -1
        for (int k = 1; k <= -wmin; ++k) {
            if (-k <= wmax)  // w = -k lands at index -k - wmin
                out[-k - wmin] = up * en[k];
            up /= u;
        }
    }
    if (wmax >= 0) {
        double cur = 1.0 / mu;  // w = 0
        double uk = 1.0;
        if (0 >= wmin) out[0 - wmin] = cur;
        for (int k = 1; k <= wmax; ++k) {
            uk *= u;
            cur = (uk + k * cur) / mu;
            if (k >= wmin) out[k - wmin] = cur;
        }
    }
}

double phi2(int gamma, double mu, double beta) {
    if (gamma < 1) throw std::domain_error("phi2: gamma must be >= 1");
    if (mu <= 0.0 || beta <= 0.0) throw std::domain_error("phi2: need mu > 0, beta > 0");
    return std::pow(beta, 1.0 - gamma) * expint_En_scaled(gamma, mu * beta);
}

// ---- theta kernels -------------------------------------------------------

namespace detail {

// Shared core for theta1/theta5: e^{-mu u} sum_{n,m} C(g,n)(a-b)^{g-n}
// C(v,m)(-b)^{v-m} phi1s(u+b; m+n-g), with the table passed in.
// Throws when cancellation eats the accuracy budget.
double theta15_from_table(double u, int v, int gamma, double mu, double alpha,
                          double beta, const double* table /* w = -gamma..v */) {
    const double dab = alpha - beta;
    LossTracker acc;
    for (int n = 0; n <= gamma; ++n) {
        const double cn = binom(gamma, n) * std::pow(dab, gamma - n);
        for (int m = 0; m <= v; ++m) {
            const double cm = binom(v, m) * std::pow(-beta, v - m);
            acc.add(cn * cm * table[m + n]);  // table index = w + gamma
        }
    }
    if (!acc.well_conditioned() || acc.value() < 0.0)
        bail("theta1/5 series: cancellation");
    return std::exp(-mu * u) * acc.value();
}

double theta1_series(int v, int gamma, double mu, double alpha, double beta) {
    if (v < 0 || gamma < 0) throw std::domain_error("theta1: powers must be >= 0");
    if (mu <= 0.0 || beta <= 0.0 || alpha < 0.0)
        throw std::domain_error("theta1: need mu > 0, beta > 0, alpha >= 0");
    std::vector<double> table(gamma + v + 1);
    phi1_scaled_array(beta, mu, -gamma, v, table.data());
    return theta15_from_table(0.0, v, gamma, mu, alpha, beta, table.data());
}

double theta5_series(double u, int v, int gamma, double mu, double alpha, double beta) {
    if (v < 0 || gamma < 0) throw std::domain_error("theta5: powers must be >= 0");
    if (mu <= 0.0 || alpha < 0.0 || u < 0.0)
        throw std::domain_error("theta5: need mu > 0, alpha >= 0, u >= 0");
    if (u + beta <= 0.0)
        throw std::domain_error("theta5: pole -beta must lie below the range");
    std::vector<double> table(gamma + v + 1);
    phi1_scaled_array(u + beta, mu, -gamma, v, table.data());
    return theta15_from_table(u, v, gamma, mu, alpha, beta, table.data());
}

double theta6_series(double u, int v, int gamma, double mu, double alpha, double beta) {
    if (v < 0 || gamma < 0) throw std::domain_error("theta6: powers must be >= 0");
    if (mu <= 0.0 || alpha < 0.0 || u < 0.0)
        throw std::domain_error("theta6: need mu > 0, alpha >= 0, u >= 0");
    if (beta <= 0.0) bail("theta6 series: requires beta > 0");
    if (u == 0.0) return 0.0;

    std::vector<double> tb(gamma + v + 1), tub(gamma + v + 1);
    phi1_scaled_array(beta, mu, -gamma, v, tb.data());
    phi1_scaled_array(u + beta, mu, -gamma, v, tub.data());
    const double eu = std::exp(-mu * u);

    const double dab = alpha - beta;
    LossTracker acc;
    double undiff_max = 0.0;
    for (int n = 0; n <= gamma; ++n) {
        const double cbin_n = binom(gamma, n) * std::pow(dab, gamma - n);
        for (int m = 0; m <= v; ++m) {
            const double c = cbin_n * binom(v, m) * std::pow(-beta, v - m);
            const double k = tb[m + n] - eu * tub[m + n];
            acc.add(c * k);
            undiff_max = std::max(undiff_max, std::fabs(c) * std::fabs(tb[m + n]));
        }
    }
    const double val = acc.value();
    if (!std::isfinite(val) || val < 0.0 ||
        std::fabs(val) < 1e-7 * std::max(acc.maxmag, undiff_max))
        bail("theta6 series: cancellation");
    return val;
}

// ---- theta2/theta3: single-pole reductions ------------------------------

namespace {

// S(N, a) = int_0^inf x^N (x+pole)^{-a} e^{-mu x} dx from a scaled-phi1
// table with w = -amax..N.  Returns the value and the largest term
// magnitude through `mag` for loss accounting.
double single_pole_S(int N, int a, double pole, const double* table, int amax,
                     double* mag) {
    LossTracker acc;
    for (int m = 0; m <= N; ++m)
        acc.add(binom(N, m) * std::pow(-pole, N - m) * table[m - a + amax]);
    *mag = acc.maxmag;
    if (!std::isfinite(acc.value())) bail("single_pole_S: overflow");
    return acc.value();
}

}  // namespace

double theta2_series(int v, int gamma, double mu, double rho, double beta,
                     const SeriesControl& sctl) {
    if (v < 0 || gamma < 0) throw std::domain_error("theta2: powers must be >= 0");
    if (mu <= 0.0 || beta <= 0.0 || rho < 0.0)
        throw std::domain_error("theta2: need mu > 0, beta > 0, rho >= 0");
    const double rb = rho * beta;
    if (rb > 30.0) bail("theta2 series: rho*beta too large");

    const int N = v + gamma;
    const int nmax = std::min(sctl.max_terms, 90);
    std::vector<double> table(gamma + nmax + N + 1);
    phi1_scaled_array(beta, mu, -(gamma + nmax), N, table.data());
    const int amax = gamma + nmax;

    const double pref = std::exp(-rho);
    long double sum = 0.0L;
    double maxmag = 0.0;
    double coef = 1.0;  // (rho*beta)^n / n!
    int small_streak = 0;
    bool converged = false;
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) coef *= rb / n;
        double mag = 0.0;
        const double Sn = single_pole_S(N, gamma + n, beta, table.data(), amax, &mag);
        const double contrib = pref * coef * Sn;
        sum += contrib;
        maxmag = std::max(maxmag, pref * coef * mag);
        const bool small = std::fabs(contrib) <= sctl.rel_tol * std::fabs((double)sum);
        small_streak = small ? small_streak + 1 : 0;
        if (n >= rb && small_streak >= sctl.consecutive_small) {
            converged = true;
            break;
        }
    }
    if (!converged) bail("theta2 series: did not converge");
    const double val = static_cast<double>(sum);
    if (!std::isfinite(val) || val < 0.0 || std::fabs(val) < 1e-7 * maxmag)
        bail("theta2 series: cancellation");
    return val;
}

double theta3_series(int v, int gamma, int lambda, double mu, double rho,
                     double alpha, double beta, double xi, const SeriesControl& sctl) {
    if (v < 0 || gamma < 0 || lambda < 0)
        throw std::domain_error("theta3: powers must be >= 0");
    if (mu <= 0.0 || beta <= 0.0 || xi <= 0.0 || alpha < 0.0 || rho < 0.0)
        throw std::domain_error("theta3: parameter out of range");
    const double rx = rho * xi;
    if (rx > 30.0) bail("theta3 series: rho*xi too large");
    if (std::fabs(xi - beta) < 0.02 * std::max(xi, beta))
        bail("theta3 series: nearly coincident poles");

    const int pmax = std::min(sctl.max_terms, 90);
    const int wmax = lambda + pmax;

    // Scaled-phi1 tables for both poles and the derived S tables.
    std::vector<double> tb(gamma + v + 1), tx(wmax + v + 1);
    phi1_scaled_array(beta, mu, -gamma, v, tb.data());
    phi1_scaled_array(xi, mu, -wmax, v, tx.data());

    std::vector<double> Sb(gamma + 1), Sb_mag(gamma + 1);
    for (int a = 0; a <= gamma; ++a)
        Sb[a] = single_pole_S(v, a, beta, tb.data(), gamma, &Sb_mag[a]);
    std::vector<double> Sx(wmax + 1), Sx_mag(wmax + 1);
    for (int b = 0; b <= wmax; ++b)
        Sx[b] = single_pole_S(v, b, xi, tx.data(), wmax, &Sx_mag[b]);

    // two_pole(n, w) = int_0^inf x^v (x+beta)^{-n} (x+xi)^{-w} e^{-mu x} dx,
    // memoized across the p series; mag holds the worst intermediate term.
    std::vector<double> memo((gamma + 1) * (wmax + 1),
                             std::numeric_limits<double>::quiet_NaN());
    std::vector<double> memo_mag((gamma + 1) * (wmax + 1), 0.0);
    const double dxb = xi - beta;
    auto two_pole = [&](int n, int w) -> double {
        double& slot = memo[n * (wmax + 1) + w];
        if (!std::isnan(slot)) return slot;
        double mag = 0.0, val = 0.0;
        if (n == 0) {
            val = Sx[w];
            mag = Sx_mag[w];
        } else if (w == 0) {
            val = Sb[n];
            mag = Sb_mag[n];
        } else {
            LossTracker acc;
            for (int a = 1; a <= n; ++a) {
                const double c =
                    ((n - a) % 2 ? -1.0 : 1.0) * binom(w + n - a - 1, n - a) *
                    std::pow(dxb, -(double)(w + n - a));
                acc.add(c * Sb[a]);
                mag = std::max(mag, std::fabs(c) * std::max(Sb_mag[a], std::fabs(Sb[a])));
            }
            for (int b = 1; b <= w; ++b) {
                const double c =
                    ((w - b) % 2 ? -1.0 : 1.0) * binom(n + w - b - 1, w - b) *
                    std::pow(-dxb, -(double)(n + w - b));
                acc.add(c * Sx[b]);
                mag = std::max(mag, std::fabs(c) * std::max(Sx_mag[b], std::fabs(Sx[b])));
            }
            val = acc.value();
            mag = std::max(mag, acc.maxmag);
        }
        if (!std::isfinite(val)) bail("theta3 series: overflow in pole split");
        slot = val;
        memo_mag[n * (wmax + 1) + w] = mag;
        return val;
    };

    // Binomial factors of the two finite expansions.
    std::vector<double> cg(gamma + 1), cl(lambda + 1);
    for (int n = 0; n <= gamma; ++n) cg[n] = binom(gamma, n) * std::pow(alpha - beta, n);
    for (int s = 0; s <= lambda; ++s) cl[s] = binom(lambda, s) * std::pow(-xi, s);

    const double pref = std::exp(-rho);
    long double sum = 0.0L, comp = 0.0L;
    double maxmag = 0.0;
    double coef = 1.0;  // (rho*xi)^p / p!
    int small_streak = 0;
    bool converged = false;
    for (int p = 0; p <= pmax; ++p) {
        if (p > 0) coef *= rx / p;
        long double layer = 0.0L;
        double layer_mag = 0.0;
        for (int n = 0; n <= gamma; ++n) {
            for (int s = 0; s <= lambda; ++s) {
                const double tp = two_pole(n, s + p);
                layer += (long double)(cg[n] * cl[s]) * tp;
                layer_mag = std::max(layer_mag,
                                     std::fabs(cg[n] * cl[s]) *
                                         std::max(memo_mag[n * (wmax + 1) + s + p],
                                                  std::fabs(tp)));
            }
        }
        const long double contrib = (long double)(pref * coef) * layer;
        // Kahan step on the p-layer accumulation.
        const long double y = contrib - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        maxmag = std::max(maxmag, pref * coef * layer_mag);
        const bool small =
            std::fabs((double)contrib) <= sctl.rel_tol * std::fabs((double)sum);
        small_streak = small ? small_streak + 1 : 0;
        if (p >= rx && small_streak >= sctl.consecutive_small) {
            converged = true;
            break;
        }
    }
    if (!converged) bail("theta3 series: did not converge");
    const double val = static_cast<double>(sum);
    if (!std::isfinite(val) || val < 0.0 || std::fabs(val) < 1e-7 * maxmag)
        bail("theta3 series: cancellation");
    return val;
}

double theta4_series(double u, int v, int gamma, double mu, double rho, double beta,
                     const SeriesControl& sctl) {
    if (v < 0 || gamma < 0) throw std::domain_error("theta4: powers must be >= 0");
    if (beta <= 0.0 || u < 0.0 || u > beta || mu < 0.0 || rho < 0.0)
        throw std::domain_error("theta4: parameter out of range");
    if (u == 0.0) return 0.0;
    const double d = beta - u;
    if (u > 0.9 * beta) bail("theta4 series: u too close to beta");
    if (mu * beta + rho * beta / d > 16.0) bail("theta4 series: exponent range too large");

    // In t = beta - x: e^{rho - mu beta} sum_{m,n,p} C(v+g, m)(-1)^m
    // beta^{v+g-m} mu^n/n! (-rho beta)^p/p! int_{d}^{beta} t^{m+n-p-g} dt.
    auto seg = [&](int E) -> double {
        // int_d^beta t^E dt, written to stay stable as u -> 0.
        if (E == -1) return -std::log1p(-u / beta);
        const double r = d / beta;
        return std::pow(beta, E + 1.0) * -std::expm1((E + 1.0) * std::log(r)) /
               (E + 1.0);
    };

    const double pref = std::exp(rho - mu * beta);
    const double mb = mu * beta;
    const double rbd = rho * beta;
    LossTracker acc;
    int n_small_streak = 0;
    for (int n = 0; n <= 120; ++n) {
        const double cn = (n == 0) ? 1.0 : std::pow(mu, n) / factorial(n);
        long double nlayer = 0.0L;
        double nlayer_mag = 0.0;
        for (int m = 0; m <= v + gamma; ++m) {
            const double cm = binom(v + gamma, m) * ((m % 2) ? -1.0 : 1.0) *
                              std::pow(beta, v + gamma - m);
            double cp = 1.0;  // (-rho beta)^p / p!
            int p_small_streak = 0;
            for (int p = 0; p <= 120; ++p) {
                if (p > 0) cp *= -rbd / p;
                const double term = cm * cp * seg(m + n - p - gamma);
                nlayer += term;
                nlayer_mag = std::max(nlayer_mag, std::fabs(term));
                const bool small =
                    std::fabs(term) <= 1e-16 * (std::fabs((double)nlayer) + 1e-300);
                p_small_streak = small ? p_small_streak + 1 : 0;
                if (p >= rbd / d && p_small_streak >= 3) break;
            }
        }
        acc.add(cn * (double)nlayer);
        acc.maxmag = std::max(acc.maxmag, cn * nlayer_mag);
        const bool small = std::fabs(cn * (double)nlayer) <=
                           sctl.rel_tol * (std::fabs(acc.value()) + 1e-300);
        n_small_streak = small ? n_small_streak + 1 : 0;
        if (n >= mb && n_small_streak >= sctl.consecutive_small) {
            const double val = pref * acc.value();
            if (!std::isfinite(val) || val < 0.0 ||
                std::fabs(acc.value()) < 1e-7 * acc.maxmag)
                bail("theta4 series: cancellation");
            return val;
        }
    }
    bail("theta4 series: did not converge");
}

double theta7_closed(int v, int gamma, double mu, double rho, double alpha) {
    if (v < 0 || gamma < 0) throw std::domain_error("theta7: powers must be >= 0");
    if (mu + rho <= 0.0 || alpha < 0.0 || rho < 0.0 || mu <= 0.0)
        throw std::domain_error("theta7: parameter out of range");
    double sum = 0.0;
    for (int n = 0; n <= gamma; ++n)
        sum += binom(gamma, n) * std::pow(alpha, gamma - n) * factorial(v + n) /
               std::pow(mu + rho, v + n + 1.0);
    return std::exp(-rho * alpha) * sum;
}

// ---- quadrature routes ---------------------------------------------------

namespace {

QuadControl tighten(const QuadControl& qctl) {
    QuadControl c = qctl;
    c.rel_tol = std::min(qctl.rel_tol, 1e-10);
    return c;
}

double run_quad(const std::function<double(double)>& f, double a, double b,
                const QuadControl& qctl, const char* what) {
    QuadResult r = integrate(f, a, b, tighten(qctl));
    if (!r.converged && r.error > 1e-6 * std::max(std::fabs(r.value), 1e-300))
        throw numerical_error(what);
    return r.value;
}

// run_quad over a finite [0, u] whose integrand decays like x^k e^{-mu x}:
// when u dwarfs the decay scale, the whole mass sits in a sliver the first
// coarse panels never sample, so split at the tail cutoff first.
double run_quad_decay(const std::function<double(double)>& f, double u, int k,
                      double mu, const QuadControl& qctl, const char* what) {
    const double cut = mu > 0.0 ? exp_poly_tail_cutoff(k, mu) : u;
    if (u <= 2.0 * cut) return run_quad(f, 0.0, u, qctl, what);
    return run_quad(f, 0.0, cut, qctl, what) + run_quad(f, cut, u, qctl, what);
}

}  // namespace

double theta1_quad(int v, int gamma, double mu, double alpha, double beta,
                   const QuadControl& qctl) {
    return run_quad(
        [=](double x) {
            return std::pow(x, v) * std::exp(-mu * x) *
                   std::pow((x + alpha) / (x + beta), gamma);
        },
        0.0, kInf, qctl, "theta1 quadrature failed");
}

double theta2_quad(int v, int gamma, double mu, double rho, double beta,
                   const QuadControl& qctl) {
    return run_quad(
        [=](double x) {
            const double w = x / (x + beta);
            return std::pow(x, v) * std::pow(w, gamma) * std::exp(-mu * x - rho * w);
        },
        0.0, kInf, qctl, "theta2 quadrature failed");
}

double theta3_quad(int v, int gamma, int lambda, double mu, double rho,
                   double alpha, double beta, double xi, const QuadControl& qctl) {
    return run_quad(
        [=](double x) {
            const double w = x / (x + xi);
            return std::pow(x, v) * std::pow((x + alpha) / (x + beta), gamma) *
                   std::pow(w, lambda) * std::exp(-mu * x - rho * w);
        },
        0.0, kInf, qctl, "theta3 quadrature failed");
}

double theta4_quad(double u, int v, int gamma, double mu, double rho, double beta,
                   const QuadControl& qctl) {
    return run_quad_decay(
        [=](double x) {
            const double den = beta - x;
            if (den <= 0.0) return 0.0;
            const double w = x / den;
            return std::pow(x, v) * std::pow(w, gamma) * std::exp(-mu * x - rho * w);
        },
        u, v + gamma, mu, qctl, "theta4 quadrature failed");
}

double theta5_quad(double u, int v, int gamma, double mu, double alpha, double beta,
                   const QuadControl& qctl) {
    return run_quad(
        [=](double x) {
            return std::pow(x, v) * std::exp(-mu * x) *
                   std::pow((x + alpha) / (x + beta), gamma);
        },
        u, kInf, qctl, "theta5 quadrature failed");
}

double theta6_quad(double u, int v, int gamma, double mu, double alpha, double beta,
                   const QuadControl& qctl) {
    return run_quad_decay(
        [=](double x) {
            return std::pow(x, v) * std::exp(-mu * x) *
                   std::pow((x + alpha) / (x + beta), gamma);
        },
        u, v + gamma, mu, qctl, "theta6 quadrature failed");
}

double theta7_quad(int v, int gamma, double mu, double rho, double alpha,
                   const QuadControl& qctl) {
    return run_quad(
        [=](double x) {
            return std::pow(x, v) * std::pow(x + alpha, gamma) *
                   std::exp(-mu * x - rho * (x + alpha));
        },
        0.0, kInf, qctl, "theta7 quadrature failed");
}

}  // namespace detail

// ---- public hybrids ------------------------------------------------------

double theta1(int v, int gamma, double mu, double alpha, double beta,
              const SeriesControl&, const QuadControl& qctl) {
    if (beta <= 0.0) throw std::domain_error("theta1: beta must be > 0");
    try {
        return detail::theta1_series(v, gamma, mu, alpha, beta);
    } catch (const numerical_error&) {
        return detail::theta1_quad(v, gamma, mu, alpha, beta, qctl);
    }
}

double theta2(int v, int gamma, double mu, double rho, double beta,
              const SeriesControl& sctl, const QuadControl& qctl) {
    try {
        return detail::theta2_series(v, gamma, mu, rho, beta, sctl);
    } catch (const numerical_error&) {
        return detail::theta2_quad(v, gamma, mu, rho, beta, qctl);
    }
}

double theta3(int v, int gamma, int lambda, double mu, double rho,
              double alpha, double beta, double xi,
              const SeriesControl& sctl, const QuadControl& qctl) {
    try {
        return detail::theta3_series(v, gamma, lambda, mu, rho, alpha, beta, xi, sctl);
    } catch (const numerical_error&) {
        return detail::theta3_quad(v, gamma, lambda, mu, rho, alpha, beta, xi, qctl);
    }
}

double theta4(double u, int v, int gamma, double mu, double rho, double beta,
              const SeriesControl& sctl, const QuadControl& qctl) {
    if (beta <= 0.0 || u < 0.0 || u > beta)
        throw std::domain_error("theta4: need 0 <= u <= beta");
    if (u == beta && rho == 0.0 && gamma >= 1)
        throw std::domain_error("theta4: divergent at u = beta with rho = 0");
    if (u == 0.0) return 0.0;
    try {
        return detail::theta4_series(u, v, gamma, mu, rho, beta, sctl);
    } catch (const numerical_error&) {
        return detail::theta4_quad(u, v, gamma, mu, rho, beta, qctl);
    }
}

double theta5(double u, int v, int gamma, double mu, double alpha, double beta,
              const SeriesControl&, const QuadControl& qctl) {
    if (u + beta <= 0.0) throw std::domain_error("theta5: need u + beta > 0");
    try {
        return detail::theta5_series(u, v, gamma, mu, alpha, beta);
    } catch (const numerical_error&) {
        return detail::theta5_quad(u, v, gamma, mu, alpha, beta, qctl);
    }
}

double theta6(double u, int v, int gamma, double mu, double alpha, double beta,
              const SeriesControl&, const QuadControl& qctl) {
    if (!(beta > 0.0 || u + beta < 0.0))
        throw std::domain_error("theta6: pole -beta must lie outside [0, u]");
    if (u == 0.0) return 0.0;
    if (beta > 0.0) {
        try {
            return detail::theta6_series(u, v, gamma, mu, alpha, beta);
        } catch (const numerical_error&) {
            // fall through to quadrature
        }
    }
    return detail::theta6_quad(u, v, gamma, mu, alpha, beta, qctl);
}

double theta7(int v, int gamma, double mu, double rho, double alpha,
              const QuadControl&) {
    return detail::theta7_closed(v, gamma, mu, rho, alpha);
}

void theta5_family(double u, int vmax, int gamma, double mu, double alpha,
                   double beta, double* out, const QuadControl& qctl) {
    if (u + beta <= 0.0) throw std::domain_error("theta5_family: need u + beta > 0");
    std::vector<double> table(gamma + vmax + 1);
    phi1_scaled_array(u + beta, mu, -gamma, vmax, table.data());
    for (int v = 0; v <= vmax; ++v) {
        try {
            out[v] = detail::theta15_from_table(u, v, gamma, mu, alpha, beta,
                                                table.data());
        } catch (const numerical_error&) {
            out[v] = detail::theta5_quad(u, v, gamma, mu, alpha, beta, qctl);
        }
    }
}

double exp_poly_lower_integral(int k, double a, double x) {
    if (k < 0 || a <= 0.0 || x < 0.0)
        throw std::domain_error("exp_poly_lower_integral: parameter out of range");
    if (x == 0.0) return 0.0;
    const double ax = a * x;
    if (ax < k + 1.0) {
        // Ascending series of the lower incomplete gamma.
        double term = 1.0 / (k + 1.0);
        double sum = term;
        for (int m = 1; m < 500; ++m) {
            term *= ax / (k + 1.0 + m);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return std::pow(x, k + 1.0) * std::exp(-ax) * sum;
    }
    // Complement of the (finite) upper tail.
    double tail = 1.0;
    double t = 1.0;
    for (int j = 1; j <= k; ++j) {
        t *= ax / j;
        tail += t;
    }
    const double full = factorial(k) / std::pow(a, k + 1.0);
    return full * (1.0 - std::exp(-ax) * tail);
}

}  // namespace swarmsec
