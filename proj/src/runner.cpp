#include "swarmsec/runner.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include "swarmsec/analytic.hpp"
#include "swarmsec/placement.hpp"

namespace swarmsec {

namespace {

const char* scheme_name(Scheme s) { return s == Scheme::sc ? "sc" : "mrc"; }
const char* flag_name(bool b) { return b ? "true" : "false"; }

struct Combo {
    Scheme scheme;
    bool jamming;
};

std::vector<Combo> combos(const EvaluationPlan& plan) {
    std::vector<Combo> v;
    for (Scheme s : plan.schemes)
        for (bool j : plan.jamming) v.push_back({s, j});
    return v;
}

void apply_axis(ExperimentConfig& cfg, const std::string& axis, double v) {
    if (axis == "alpha")
        cfg.system.alpha = v;
    else if (axis == "eta_eh")
        cfg.system.eta_eh = v;
    else if (axis == "U")
        cfg.system.num_uavs = static_cast<int>(v);
    else if (axis == "C_th")
        cfg.system.c_th = v;
    else if (axis == "psi")
        cfg.system.psi = v;
    else if (axis == "r_c") {
        cfg.disc.r_c = v;
        cfg.evaluation.random_eve = true;
    } else if (axis == "eve_position_index")
        cfg.scenario.eve = cfg.eve_positions.at(static_cast<std::size_t>(v));
    else
        throw ConfigError("sweep axis not recognized: " + axis);
}

double analytic_value(const ExperimentConfig& cfg, Combo cb) {
    SopQuery q;
    q.scheme = cb.scheme;
    q.jamming = cb.jamming;
    q.cfg = cfg.system;
    q.scenario = cfg.scenario;
    if (cfg.evaluation.random_eve) {
        q.random_eve = true;
        q.disc = cfg.disc;
        return sop_lower_bound_random_e(q).value;
    }
    return evaluate_sop(q).value;
}

McEstimate mc_value(const ExperimentConfig& cfg, Combo cb, const RunOptions& opt) {
    McPlan plan = cfg.mc;
    plan.scheme = cb.scheme;
    plan.jamming = cb.jamming;
    if (opt.seed) plan.seed = *opt.seed;
    if (cfg.evaluation.random_eve) {
        plan.eavesdropper = EveModel::random_disc;
        plan.disc_radius = cfg.disc.r_c;
        return estimate_sop_random_e(plan, cfg.disc, cfg.scenario, cfg.system,
                                     opt.threads);
    }
    return estimate_sop(plan, cfg.scenario, cfg.system, opt.threads);
}

}  // namespace

std::string format_sig10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

int cmd_eval(const ExperimentConfig& cfg, const RunOptions& opt,
             std::ostream& out, std::ostream& log) {
    for (Combo cb : combos(cfg.evaluation)) {
        try {
            if (cfg.evaluation.use_analytic)
                out << "eval scheme=" << scheme_name(cb.scheme)
                    << " jamming=" << flag_name(cb.jamming)
                    << " method=analytic sop="
                    << format_sig10(analytic_value(cfg, cb)) << "\n";
            if (cfg.evaluation.use_mc) {
                const McEstimate e = mc_value(cfg, cb, opt);
                out << "eval scheme=" << scheme_name(cb.scheme)
                    << " jamming=" << flag_name(cb.jamming)
                    << " method=mc sop=" << format_sig10(e.p_hat)
                    << " std_err=" << format_sig10(e.std_err)
                    << " trials=" << e.trials << "\n";
            }
        } catch (const std::exception& e) {
            log << "eval scheme=" << scheme_name(cb.scheme)
                << " jamming=" << flag_name(cb.jamming) << ": " << e.what()
                << "\n";
            return 3;
        }
    }
    return 0;
}

int cmd_sweep(const ExperimentConfig& cfg, const RunOptions& opt,
              std::ostream& out, std::ostream& log) {
    if (!cfg.sweep) {
        log << "sweep: the config has no sweep section\n";
        return 2;
    }
    out << "axis,value,scheme,jamming,sop_analytic,sop_mc,mc_std_err\n";
    for (double v : cfg.sweep->values) {
        ExperimentConfig row_cfg = cfg;
        apply_axis(row_cfg, cfg.sweep->axis, v);
        for (Combo cb : combos(cfg.evaluation)) {
            std::string analytic, mc, std_err;
            try {
                if (cfg.evaluation.use_analytic)
                    analytic = format_sig10(analytic_value(row_cfg, cb));
                if (cfg.evaluation.use_mc) {
                    const McEstimate e = mc_value(row_cfg, cb, opt);
                    mc = format_sig10(e.p_hat);
                    std_err = format_sig10(e.std_err);
                }
            } catch (const std::exception& e) {
                log << "sweep " << cfg.sweep->axis << "=" << format_sig10(v)
                    << " scheme=" << scheme_name(cb.scheme)
                    << " jamming=" << flag_name(cb.jamming) << ": " << e.what()
                    << "\n";
                return 3;
            }
            out << cfg.sweep->axis << ',' << format_sig10(v) << ','
                << scheme_name(cb.scheme) << ',' << flag_name(cb.jamming) << ','
                << analytic << ',' << mc << ',' << std_err << "\n";
        }
    }
    return 0;
}

int cmd_validate(const ExperimentConfig& cfg, const RunOptions& opt,
                 std::ostream& out, std::ostream& log) {
    double max_z = 0.0;
    for (Combo cb : combos(cfg.evaluation)) {
        try {
            const double analytic = analytic_value(cfg, cb);
            const McEstimate e = mc_value(cfg, cb, opt);
            double z = 0.0;
            if (e.std_err > 0.0)
                z = (analytic - e.p_hat) / e.std_err;
            else if (analytic != e.p_hat)
                z = std::numeric_limits<double>::infinity();
            max_z = std::max(max_z, std::fabs(z));
            out << "scheme=" << scheme_name(cb.scheme)
                << " jamming=" << flag_name(cb.jamming)
                << " analytic=" << format_sig10(analytic)
                << " mc=" << format_sig10(e.p_hat)
                << " std_err=" << format_sig10(e.std_err)
                << " trials=" << e.trials << " z=" << format_sig10(z) << "\n";
        } catch (const std::exception& e) {
            log << "validate scheme=" << scheme_name(cb.scheme)
                << " jamming=" << flag_name(cb.jamming) << ": " << e.what()
                << "\n";
            return 3;
        }
    }
    out << "VALIDATE max_z=" << format_sig10(max_z) << "\n";
    return max_z > 4.0 ? 4 : 0;
}

int cmd_optimize(const ExperimentConfig& cfg, const RunOptions& opt,
                 std::ostream& out, std::ostream& log) {
    if (!cfg.corridor) {
        log << "optimize: the config has no optimize section\n";
        return 2;
    }
    SopQuery objective;
    objective.scheme = Scheme::mrc;
    objective.jamming = true;
    objective.random_eve = true;
    objective.disc = cfg.disc;
    objective.cfg = cfg.system;
    objective.scenario = cfg.scenario;
    CorridorResult result;
    try {
        result = optimize_corridor(*cfg.corridor, objective, opt.threads);
    } catch (const std::domain_error& e) {
        log << "optimize: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        log << "optimize: " << e.what() << "\n";
        return 3;
    }
    out << "x,h,sop,is_best\n";
    bool marked = false;
    for (const CorridorCell& cell : result.surface) {
        const bool is_best = !marked && cell.ok && cell.sop == result.best_sop &&
                             cell.position.x == result.best.x &&
                             cell.position.z == result.best.z;
        if (is_best) marked = true;
        out << format_sig10(cell.position.x) << ','
            << format_sig10(cell.position.z) << ','
            << (cell.ok ? format_sig10(cell.sop) : "") << ','
            << flag_name(is_best) << "\n";
        if (!cell.ok)
            log << "optimize: cell x=" << format_sig10(cell.position.x)
                << " h=" << format_sig10(cell.position.z)
                << " failed: " << cell.error << "\n";
    }
    log << "OPTIMIZE best_x=" << format_sig10(result.best.x)
        << " best_h=" << format_sig10(result.best.z)
        << " best_sop=" << format_sig10(result.best_sop) << "\n";
    return 0;
}

}  // namespace swarmsec
