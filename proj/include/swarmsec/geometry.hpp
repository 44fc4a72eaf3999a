#pragma once

// Node geometry: Cartesian positions, distances, free-space path loss, and
// mean distances to a point uniformly distributed on a ground disc (the
// random-eavesdropper model).

namespace swarmsec {

struct NodePosition {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;  // altitude
};

// Position at horizontal radius r and azimuth theta around a ground
// reference point, at altitude z.
NodePosition polar_position(const NodePosition& ground_ref, double r, double theta,
                            double z);

double distance(const NodePosition& a, const NodePosition& b);
double horizontal_distance(const NodePosition& a, const NodePosition& b);

struct PathLossModel {
    double tau = 2.0;   // exponent
    double d0 = 100.0;  // reference distance, path_loss(d0) = 1
};

// (d/d0)^(-tau); requires d > 0.
double path_loss(const PathLossModel& model, double d);

// Ground disc of radius r_c centered on the source's ground projection,
// carrying a uniform position distribution.
struct EavesdropperDisc {
    double r_c = 0.0;
};

struct DiscMeanDistances {
    double source_to_eve;  // mean distance from the source
    double relay_to_eve;   // mean distance from the selected UAV
};

// Mean distance from a point at height h above the disc center to a uniform
// point on a disc of radius r_c: 2((r_c^2+h^2)^{3/2} - h^3) / (3 r_c^2).
double disc_mean_distance_centered(double h, double r_c);

// Mean distance from a point at horizontal offset r_off from the disc
// center and height h, by 2-D adaptive quadrature over the disc.
double disc_mean_distance(double r_c, double r_off, double h);

// Mean distances from the source and the relay UAV to a point uniform on
// the disc centered at the source's ground projection.
DiscMeanDistances expected_disc_distances(const EavesdropperDisc& disc,
                                          const NodePosition& p_s,
                                          const NodePosition& p_u);

}  // namespace swarmsec
