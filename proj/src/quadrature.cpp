#include "swarmsec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace swarmsec {

namespace {

// Gauss-Kronrod 15(7) nodes/weights on [-1, 1].  xgk are the Kronrod
// abscissae (positive half); wg are the embedded 7-point Gauss weights for
// the odd-indexed nodes, wgk the 15-point Kronrod weights.
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};
const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

struct Panel {
    double a, b;
    double value;
    double err;
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

// One GK15 evaluation on [a, b]; returns the Kronrod estimate and an error
// estimate from the Gauss/Kronrod difference (QUADPACK-style scaling).
Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * xgk[i];
        fv[i] = f(c + dx);
        fv[14 - i] = f(c - dx);
    }

    double resk = wgk[7] * fv[7];
    double resg = wg[3] * fv[7];
    double resabs = std::fabs(resk);
    for (int i = 0; i < 7; ++i) {
        const double sum = fv[i] + fv[14 - i];
        resk += wgk[i] * sum;
        resabs += wgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        if (i % 2 == 1) resg += wg[i / 2] * sum;
    }

    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    double err = std::fabs((resk - resg) * h);
    resabs *= std::fabs(h);
    if (resabs > 0.0 && err > 0.0) {
        const double scaled = 200.0 * err / resabs;
        err = resabs * std::min(1.0, scaled * std::sqrt(scaled));
    }
    p.err = err;
    return p;
}

QuadResult adapt(const std::function<double(double)>& f, double a, double b,
                 const QuadControl& ctl) {
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> q;
    Panel first = gk15(f, a, b);
    double total = first.value;
    double toterr = first.err;
    q.push(first);
    int used = 1;

    while (toterr > std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(total)) &&
           used < ctl.max_intervals) {
        Panel worst = q.top();
        q.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval no longer splittable in double precision.
            q.push(worst);
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        q.push(left);
        q.push(right);
        ++used;
    }

    QuadResult r;
    r.value = total;
    r.error = toterr;
    r.converged = toterr <= std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(total)) ||
                  toterr <= 1e-13 * std::fabs(total) + ctl.abs_tol;
    return r;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadControl& ctl) {
    if (!(a <= b)) throw std::invalid_argument("integrate: need a <= b");
    if (a == b) return {0.0, 0.0, true};
    if (std::isinf(b)) {
        // Map [a, inf) to t in [0, 1) via x = a + t/(1-t).
        auto g = [&f, a](double t) {
            const double om = 1.0 - t;
            const double x = a + t / om;
            return f(x) / (om * om);
        };
        return adapt(g, 0.0, 1.0, ctl);
    }
    return adapt(f, a, b, ctl);
}

QuadResult integrate_batch(const std::function<void(double, double*)>& f, int dim,
                           double a, double b, double* out, const QuadControl& ctl) {
    if (dim <= 0) throw std::invalid_argument("integrate_batch: dim must be positive");
    if (!(a <= b)) throw std::invalid_argument("integrate_batch: need a <= b");

    struct VPanel {
        double a, b;
        std::vector<double> value;
        double err;
    };
    struct VWorse {
        bool operator()(const VPanel& p, const VPanel& q) const { return p.err < q.err; }
    };

    std::vector<double> buf(dim);
    auto eval_panel = [&](double lo, double hi) {
        VPanel p;
        p.a = lo;
        p.b = hi;
        p.value.assign(dim, 0.0);
        std::vector<double> gauss(dim, 0.0), absint(dim, 0.0);
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        auto accum = [&](double x, double wk, double wgauss) {
            f(x, buf.data());
            for (int j = 0; j < dim; ++j) {
                p.value[j] += wk * buf[j];
                absint[j] += wk * std::fabs(buf[j]);
                if (wgauss != 0.0) gauss[j] += wgauss * buf[j];
            }
        };
        accum(c, wgk[7], wg[3]);
        for (int i = 0; i < 7; ++i) {
            const double dx = h * xgk[i];
            const double wgauss = (i % 2 == 1) ? wg[i / 2] : 0.0;
            accum(c + dx, wgk[i], wgauss);
            accum(c - dx, wgk[i], wgauss);
        }
        p.err = 0.0;
        for (int j = 0; j < dim; ++j) {
            double e = std::fabs((p.value[j] - gauss[j]) * h);
            const double ra = absint[j] * std::fabs(h);
            if (ra > 0.0 && e > 0.0) {
                const double scaled = 200.0 * e / ra;
                e = ra * std::min(1.0, scaled * std::sqrt(scaled));
            }
            p.value[j] *= h;
            p.err = std::max(p.err, e);
        }
        return p;
    };

    std::vector<double> total(dim, 0.0);
    if (a == b) {
        std::copy(total.begin(), total.end(), out);
        return {0.0, 0.0, true};
    }

    std::priority_queue<VPanel, std::vector<VPanel>, VWorse> q;
    VPanel first = eval_panel(a, b);
    total = first.value;
    double toterr = first.err;
    q.push(std::move(first));
    int used = 1;

    auto scale = [&]() {
        double s = 0.0;
        for (double v : total) s = std::max(s, std::fabs(v));
        return s;
    };

    while (toterr > std::max(ctl.abs_tol, ctl.rel_tol * scale()) &&
           used < ctl.max_intervals) {
        VPanel worst = q.top();
        q.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            q.push(std::move(worst));
            break;
        }
        VPanel left = eval_panel(worst.a, mid);
        VPanel right = eval_panel(mid, worst.b);
        for (int j = 0; j < dim; ++j)
            total[j] += left.value[j] + right.value[j] - worst.value[j];
        toterr += left.err + right.err - worst.err;
        q.push(std::move(left));
        q.push(std::move(right));
        ++used;
    }

    std::copy(total.begin(), total.end(), out);
    QuadResult r;
    r.error = toterr;
    r.value = scale();
    r.converged = toterr <= std::max(ctl.abs_tol, ctl.rel_tol * scale() + 1e-13 * scale());
    return r;
}

QuadResult integrate_2d(const std::function<double(double, double)>& f,
                        double t_lo, double t_hi,
                        const std::function<double(double)>& z_lo,
                        const std::function<double(double)>& z_hi,
                        const QuadControl& ctl) {
    QuadControl inner = ctl;
    inner.rel_tol = std::max(ctl.rel_tol * 0.1, 1e-12);
    inner.abs_tol = ctl.abs_tol * 0.1;
    bool inner_ok = true;

    auto outer = [&](double t) {
        const double lo = z_lo(t);
        const double hi = z_hi(t);
        if (!(hi > lo)) return 0.0;
        QuadResult r = integrate([&f, t](double z) { return f(t, z); }, lo, hi, inner);
        if (!r.converged) inner_ok = false;
        return r.value;
    };

    QuadResult r = integrate(outer, t_lo, t_hi, ctl);
    r.converged = r.converged && inner_ok;
    return r;
}

double exp_poly_tail_cutoff(int k, double rate, double log_tol) {
    if (k < 0 || rate <= 0.0)
        throw std::invalid_argument("exp_poly_tail_cutoff: need k >= 0, rate > 0");
    // Tail(T) ~ T^k e^{-rate T}/rate once rate*T >> k.  Solve
    //   k ln T - rate T = log_tol + ln k! - (k+1) ln rate + ln rate
    // by fixed-point iteration from a generous start.
    double lgk = std::lgamma(k + 1.0);
    double target = log_tol + lgk - k * std::log(rate);
    double T = (k + 10.0 - log_tol) / rate;
    for (int it = 0; it < 60; ++it) {
        double next = (k * std::log(T) - target) / rate;
        if (next < (k + 1.0) / rate) next = (k + 1.0) / rate;
        if (std::fabs(next - T) < 1e-9 * T) {
            T = next;
            break;
        }
        T = next;
    }
    return T;
}

}  // namespace swarmsec
