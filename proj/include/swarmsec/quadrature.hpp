#pragma once

#include <functional>
#include <limits>

// Adaptive 1-D and iterated 2-D quadrature built on a Gauss-Kronrod 15(7)
// rule.  Semi-infinite ranges are handled either by the rational transform
// x = a + t/(1-t) or, where the caller knows the integrand's exponential
// decay rate, by an explicit truncation point from exp_poly_tail_cutoff().

namespace swarmsec {

struct QuadControl {
    double rel_tol = 1e-8;
    double abs_tol = 1e-14;
    int max_intervals = 4000;
};

// Result of one adaptive integration; `converged` is false when the
// subdivision budget ran out before the tolerance was met.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Integrate f over [a, b]; b may be kInf.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadControl& ctl = {});

// Integrate a vector-valued integrand over the finite interval [a, b].
// f(x, out) fills out[0..dim).  One shared adaptive mesh is refined against
// the max-norm of the component error estimates, so the components should
// have comparable scales.
QuadResult integrate_batch(const std::function<void(double, double*)>& f, int dim,
                           double a, double b, double* out, const QuadControl& ctl = {});

// Iterated 2-D integral: outer variable t in [t_lo, t_hi] (t_hi may be kInf),
// inner variable z in [z_lo(t), z_hi(t)].  The inner integrals are run at a
// tighter tolerance than the outer one.
QuadResult integrate_2d(const std::function<double(double, double)>& f,
                        double t_lo, double t_hi,
                        const std::function<double(double)>& z_lo,
                        const std::function<double(double)>& z_hi,
                        const QuadControl& ctl = {});

// Smallest T such that the tail of t^k e^{-rate*t} beyond T is below
// exp(log_tol) times the full integral k!/rate^(k+1).  Used to truncate
// semi-infinite integrals whose decay rate is known.
double exp_poly_tail_cutoff(int k, double rate, double log_tol = -36.0);

}  // namespace swarmsec
