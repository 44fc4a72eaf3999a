#include "swarmsec/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swarmsec/quadrature.hpp"
#include "swarmsec/specfun.hpp"

namespace swarmsec {

NodePosition polar_position(const NodePosition& ground_ref, double r, double theta,
                            double z) {
    return {ground_ref.x + r * std::cos(theta), ground_ref.y + r * std::sin(theta), z};
}

double distance(const NodePosition& a, const NodePosition& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double horizontal_distance(const NodePosition& a, const NodePosition& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double path_loss(const PathLossModel& model, double d) {
    if (model.tau <= 0.0) throw std::domain_error("PathLossModel: tau must be > 0");
    if (model.d0 <= 0.0) throw std::domain_error("PathLossModel: d0 must be > 0");
    if (d <= 0.0) throw std::domain_error("path_loss: d must be > 0");
    return std::pow(d / model.d0, -model.tau);
}

double disc_mean_distance_centered(double h, double r_c) {
    if (r_c <= 0.0) throw std::domain_error("disc_mean_distance_centered: r_c must be > 0");
    if (h < 0.0) throw std::domain_error("disc_mean_distance_centered: h must be >= 0");
    double s = std::pow(r_c * r_c + h * h, 1.5) - h * h * h;
    return 2.0 * s / (3.0 * r_c * r_c);
}

double disc_mean_distance(double r_c, double r_off, double h) {
    if (r_c <= 0.0) throw std::domain_error("disc_mean_distance: r_c must be > 0");
    if (r_off < 0.0 || h < 0.0)
        throw std::domain_error("disc_mean_distance: offsets must be >= 0");

    const double pi = std::acos(-1.0);
    QuadControl ctl;
    ctl.rel_tol = 1e-8;
    // Outer integral over azimuth, inner over radius, uniform density
    // 1/(pi r_c^2) with the polar area element r dr dtheta.  The azimuth of
    // the offset point is irrelevant by symmetry.
    auto f = [&](double theta, double r) {
        double d2 = r_off * r_off + r * r - 2.0 * r_off * r * std::cos(theta) + h * h;
        return r * std::sqrt(d2);
    };
    QuadResult q = integrate_2d(
        f, 0.0, 2.0 * pi, [](double) { return 0.0; }, [&](double) { return r_c; }, ctl);
    if (!q.converged)
        throw numerical_error("disc_mean_distance: quadrature did not converge, error " +
                              std::to_string(q.error));
    return q.value / (pi * r_c * r_c);
}

DiscMeanDistances expected_disc_distances(const EavesdropperDisc& disc,
                                          const NodePosition& p_s,
                                          const NodePosition& p_u) {
    NodePosition center{p_s.x, p_s.y, 0.0};
    DiscMeanDistances out;
    out.source_to_eve = disc_mean_distance(disc.r_c, 0.0, p_s.z);
    out.relay_to_eve = disc_mean_distance(disc.r_c, horizontal_distance(p_u, center), p_u.z);
    return out;
}

}  // namespace swarmsec
