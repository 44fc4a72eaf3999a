#include "swarmsec/placement.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace swarmsec {

namespace {

std::vector<double> axis_points(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// Swarm centroid for grid coordinates (x, h): y tracks the
// source-destination ground line at that x, plus any lateral offset
// perpendicular to the line.
NodePosition cell_position(const CorridorSearchSpec& spec, const Scenario& sc,
                           double x, double h) {
    const double dx = sc.destination.x - sc.source.x;
    const double dy = sc.destination.y - sc.source.y;
    double px = x;
    double py = sc.source.y;
    if (std::fabs(dx) > 1e-12) py += (x - sc.source.x) * dy / dx;
    if (spec.lateral_offset != 0.0) {
        const double len = std::hypot(dx, dy);
        if (len > 0.0) {
            px -= spec.lateral_offset * dy / len;
            py += spec.lateral_offset * dx / len;
        } else {
            py += spec.lateral_offset;
        }
    }
    return {px, py, h};
}

}  // namespace

CorridorResult optimize_corridor(const CorridorSearchSpec& spec,
                                 const SopQuery& objective, int threads) {
    if (!(spec.x_min <= spec.x_max) || !(spec.h_min <= spec.h_max))
        throw std::domain_error("optimize_corridor: empty search box");
    if (spec.nx < 1 || spec.nh < 1)
        throw std::domain_error("optimize_corridor: grid needs at least one cell");
    if (objective.scheme != Scheme::mrc || !objective.jamming || !objective.random_eve)
        throw std::domain_error(
            "optimize_corridor: objective must combine maximum ratio combining, "
            "jamming, and a random eavesdropper");
    if (objective.disc.r_c <= 0.0)
        throw std::domain_error(
            "optimize_corridor: eavesdropper disc radius must be positive");

    const std::vector<double> xs = axis_points(spec.x_min, spec.x_max, spec.nx);
    const std::vector<double> hs = axis_points(spec.h_min, spec.h_max, spec.nh);
    std::vector<CorridorCell> cells(xs.size() * hs.size());
    for (std::size_t ih = 0; ih < hs.size(); ++ih)
        for (std::size_t ix = 0; ix < xs.size(); ++ix)
            cells[ih * xs.size() + ix].position =
                cell_position(spec, objective.scenario, xs[ix], hs[ih]);

    auto eval_cell = [&objective](CorridorCell& cell) {
        SopQuery q = objective;
        q.scenario.relay = cell.position;
        try {
            cell.sop = sop_lower_bound_random_e(q).value;
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    };

    const int workers =
        std::clamp(threads, 1, static_cast<int>(cells.size()));
    if (workers == 1) {
        for (CorridorCell& cell : cells) eval_cell(cell);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < cells.size();
                     k = next.fetch_add(1))
                    eval_cell(cells[k]);
            });
        for (std::thread& t : pool) t.join();
    }

    CorridorResult result;
    result.surface = std::move(cells);
    const CorridorCell* best = nullptr;
    for (const CorridorCell& cell : result.surface) {
        if (!cell.ok) {
            ++result.failed_cells;
            continue;
        }
        if (best == nullptr || cell.sop < best->sop) best = &cell;
    }
    if (best == nullptr)
        throw std::runtime_error("optimize_corridor: every grid cell failed: " +
                                 result.surface.front().error);
    result.best = best->position;
    result.best_sop = best->sop;
    return result;
}

}  // namespace swarmsec
