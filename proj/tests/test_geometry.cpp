#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "swarmsec/geometry.hpp"
#include "swarmsec/rng.hpp"

using namespace swarmsec;

TEST_CASE("distances") {
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == doctest::Approx(5.0));
    CHECK(distance({300, 300, 25}, {350, 300, 60}) == doctest::Approx(std::sqrt(3725.0)));
    CHECK(distance({350, 300, 60}, {600, 300, 0}) == doctest::Approx(std::sqrt(66100.0)));
    CHECK(horizontal_distance({300, 300, 25}, {350, 300, 60}) == doctest::Approx(50.0));
}

TEST_CASE("polar positions") {
    NodePosition c{300, 300, 0};
    NodePosition p = polar_position(c, 0.0, 1.7, 40.0);
    CHECK(p.x == doctest::Approx(300.0));
    CHECK(p.y == doctest::Approx(300.0));
    CHECK(p.z == doctest::Approx(40.0));
    p = polar_position(c, 100.0, 0.0, 0.0);
    CHECK(p.x == doctest::Approx(400.0));
    CHECK(p.y == doctest::Approx(300.0));
}

TEST_CASE("path loss is 1 at the reference distance and follows the exponent") {
    PathLossModel m;
    CHECK(path_loss(m, 100.0) == doctest::Approx(1.0));
    CHECK(path_loss(m, 200.0) == doctest::Approx(0.25));
    CHECK(path_loss(m, std::sqrt(3725.0)) == doctest::Approx(10000.0 / 3725.0));
    PathLossModel steep{3.0, 100.0};
    CHECK(path_loss(steep, 200.0) == doctest::Approx(0.125));
    CHECK_THROWS_AS(path_loss(m, 0.0), std::domain_error);
    CHECK_THROWS_AS(path_loss(PathLossModel{0.0, 100.0}, 50.0), std::domain_error);
    CHECK_THROWS_AS(path_loss(PathLossModel{2.0, 0.0}, 50.0), std::domain_error);
}

TEST_CASE("centered disc mean distance: closed form vs quadrature") {
    for (double h : {0.0, 25.0, 120.0}) {
        for (double r_c : {50.0, 300.0, 800.0}) {
            CHECK(disc_mean_distance(r_c, 0.0, h) ==
                  doctest::Approx(disc_mean_distance_centered(h, r_c)).epsilon(1e-7));
        }
    }
    CHECK(disc_mean_distance_centered(0.0, 300.0) == doctest::Approx(200.0));
}

TEST_CASE("offset disc mean distance limits") {
    // Tiny disc: the mean collapses to the point-to-center distance.
    CHECK(disc_mean_distance(1e-3, 400.0, 30.0) ==
          doctest::Approx(std::hypot(400.0, 30.0)).epsilon(1e-6));
    // Mean distance grows with the offset.
    double prev = disc_mean_distance(300.0, 0.0, 60.0);
    for (double r_off : {100.0, 300.0, 700.0}) {
        double cur = disc_mean_distance(300.0, r_off, 60.0);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("offset disc mean distance agrees with direct sampling") {
    const double r_c = 300.0, r_off = 250.0, h = 60.0;
    const double analytic = disc_mean_distance(r_c, r_off, h);
    TrialRng rng(2024, 0);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = r_c * std::sqrt(rng.next_u01());
        double th = 2.0 * std::acos(-1.0) * rng.next_u01();
        double d = std::sqrt(r_off * r_off + r * r - 2.0 * r_off * r * std::cos(th) +
                             h * h);
        sum += d;
        sum2 += d * d;
    }
    double mean = sum / n;
    double se = std::sqrt((sum2 / n - mean * mean) / n);
    CHECK(std::fabs(analytic - mean) < 4.0 * se);
}

TEST_CASE("expected disc distances from source and relay") {
    EavesdropperDisc disc{300.0};
    NodePosition s{300, 300, 25};
    NodePosition u{350, 300, 60};
    DiscMeanDistances d = expected_disc_distances(disc, s, u);
    // The source sits directly above the disc center.
    CHECK(d.source_to_eve == doctest::Approx(disc_mean_distance_centered(25.0, 300.0))
                                 .epsilon(1e-7));
    CHECK(d.relay_to_eve == doctest::Approx(disc_mean_distance(300.0, 50.0, 60.0)));
    // Only the relay's horizontal offset matters, not its azimuth.
    NodePosition u_rot{300, 300 + 50, 60};
    DiscMeanDistances d_rot = expected_disc_distances(disc, s, u_rot);
    CHECK(d_rot.relay_to_eve == doctest::Approx(d.relay_to_eve).epsilon(1e-9));
}
