#pragma once

#include <stdexcept>
#include <vector>

#include "swarmsec/quadrature.hpp"

// Exponential-integral family and the integral kernels that the closed-form
// outage expressions are built from:
//
//   phi1(u; v, mu)            = int_u^inf  x^v e^{-mu x} dx          (v any integer)
//   phi2(gamma, mu; beta)     = int_0^inf  e^{-mu x} (x+beta)^-gamma dx
//   theta1(v,g,mu; a,b)       = int_0^inf  x^v e^{-mu x} ((x+a)/(x+b))^g dx
//   theta2(v,g,mu,rho; b)     = int_0^inf  x^v (x/(x+b))^g e^{-mu x - rho x/(x+b)} dx
//   theta3(v,g,l,mu,rho;a,b,x)= int_0^inf  x^v ((x+a)/(x+b))^g (x/(x+x0))^l
//                                          e^{-rho x/(x+x0)} e^{-mu x} dx
//   theta4(u; v,g,mu,rho; b)  = int_0^u    x^v (x/(b-x))^g e^{-mu x - rho x/(b-x)} dx
//   theta5(u; v,g,mu; a,b)    = int_u^inf  x^v ((x+a)/(x+b))^g e^{-mu x} dx
//   theta6(u; v,g,mu; a,b)    = int_0^u    x^v ((x+a)/(x+b))^g e^{-mu x} dx
//   theta7(v,g,mu,rho; a)     = int_0^inf  x^v (x+a)^g e^{-mu x} e^{-rho (x+a)} dx
//
// Each theta has a series/closed form used inside a documented
// well-conditioned domain and an adaptive-quadrature fallback elsewhere; the
// two routes are cross-checked in the test suite.  All power parameters are
// non-negative integers except phi1's v, which may be negative.

namespace swarmsec {

struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 500;
    int consecutive_small = 3;
};

class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// --- exponential integrals ---------------------------------------------

// E1(x) for x > 0.
double expint_E1(double x);

// e^x E_n(x) for n >= 1, x > 0 (x == 0 allowed when n >= 2).
double expint_En_scaled(int n, double x);

// Fills out[0..kmax] with e^x E_n(x) for n = 0..kmax (out[0] = 1/x).
void expint_En_scaled_array(int kmax, double x, double* out);

// Ei(x) for x < 0.  Positive arguments never arise in the kernels above and
// are rejected.
double expint_Ei(double x);

// --- phi kernels --------------------------------------------------------

// phi1 with the e^{mu u} factor removed: e^{mu u} * phi1(u; v, mu).
// Needs u >= 0, mu > 0, and u > 0 when v < 0.
double phi1_scaled(double u, int v, double mu);

double phi1(double u, int v, double mu);

// Fills out[w - wmin] = e^{mu u} int_u^inf x^w e^{-mu x} dx for
// w = wmin..wmax in one pass (shared E_n array and upward recurrence).
void phi1_scaled_array(double u, double mu, int wmin, int wmax, double* out);

// gamma >= 1, mu > 0, beta > 0.
double phi2(int gamma, double mu, double beta);

// --- theta kernels ------------------------------------------------------

double theta1(int v, int gamma, double mu, double alpha, double beta,
              const SeriesControl& sctl = {}, const QuadControl& qctl = {});

double theta2(int v, int gamma, double mu, double rho, double beta,
              const SeriesControl& sctl = {}, const QuadControl& qctl = {});

double theta3(int v, int gamma, int lambda, double mu, double rho,
              double alpha, double beta, double xi,
              const SeriesControl& sctl = {}, const QuadControl& qctl = {});

double theta4(double u, int v, int gamma, double mu, double rho, double beta,
              const SeriesControl& sctl = {}, const QuadControl& qctl = {});

double theta5(double u, int v, int gamma, double mu, double alpha, double beta,
              const SeriesControl& sctl = {}, const QuadControl& qctl = {});

double theta6(double u, int v, int gamma, double mu, double alpha, double beta,
              const SeriesControl& sctl = {}, const QuadControl& qctl = {});

double theta7(int v, int gamma, double mu, double rho, double alpha,
              const QuadControl& qctl = {});

// theta5 for every v = 0..vmax with the other parameters fixed, sharing one
// kernel table.  Equivalent to calling theta5 per v but much cheaper; used
// by the outage evaluators that sweep mixture terms.
void theta5_family(double u, int vmax, int gamma, double mu, double alpha,
                   double beta, double* out, const QuadControl& qctl = {});

// int_0^x t^k e^{-a t} dt for integer k >= 0, a > 0 (lower incomplete gamma
// reduced to a stable series / complement pair).
double exp_poly_lower_integral(int k, double a, double x);

namespace detail {
// Series/closed-form routes exposed for the series-vs-quadrature tests.
// They throw numerical_error outside their documented domains.
double theta1_series(int v, int gamma, double mu, double alpha, double beta);
double theta2_series(int v, int gamma, double mu, double rho, double beta,
                     const SeriesControl& sctl);
double theta3_series(int v, int gamma, int lambda, double mu, double rho,
                     double alpha, double beta, double xi, const SeriesControl& sctl);
double theta4_series(double u, int v, int gamma, double mu, double rho, double beta,
                     const SeriesControl& sctl);
double theta5_series(double u, int v, int gamma, double mu, double alpha, double beta);
double theta6_series(double u, int v, int gamma, double mu, double alpha, double beta);
double theta7_closed(int v, int gamma, double mu, double rho, double alpha);

double theta1_quad(int v, int gamma, double mu, double alpha, double beta,
                   const QuadControl& qctl);
double theta2_quad(int v, int gamma, double mu, double rho, double beta,
                   const QuadControl& qctl);
double theta3_quad(int v, int gamma, int lambda, double mu, double rho,
                   double alpha, double beta, double xi, const QuadControl& qctl);
double theta4_quad(double u, int v, int gamma, double mu, double rho, double beta,
                   const QuadControl& qctl);
double theta5_quad(double u, int v, int gamma, double mu, double alpha, double beta,
                   const QuadControl& qctl);
double theta6_quad(double u, int v, int gamma, double mu, double alpha, double beta,
                   const QuadControl& qctl);
double theta7_quad(int v, int gamma, double mu, double rho, double alpha,
                   const QuadControl& qctl);
}  // namespace detail

}  // namespace swarmsec
