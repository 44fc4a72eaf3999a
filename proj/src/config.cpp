#include "swarmsec/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string>

#include <json.hpp>

namespace swarmsec {

namespace {

using nlohmann::json;

struct Collector {
    std::vector<std::string> problems;
    void fail(const std::string& path, const std::string& what) {
        problems.push_back(path + ": " + what);
    }
};

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed, Collector& c) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known) c.fail(join(path, item.key()), "unknown key");
    }
}

double get_number(const json& obj, const std::string& path, const char* key,
                  double fallback, Collector& c) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        c.fail(join(path, key), "must be a number");
        return fallback;
    }
    return v.get<double>();
}

double need_number(const json& obj, const std::string& path, const char* key,
                   double fallback, Collector& c) {
    if (!obj.contains(key)) {
        c.fail(join(path, key), "missing required field");
        return fallback;
    }
    return get_number(obj, path, key, fallback, c);
}

long long get_int(const json& obj, const std::string& path, const char* key,
                  long long fallback, Collector& c) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        c.fail(join(path, key), "must be an integer");
        return fallback;
    }
    return v.get<long long>();
}

long long need_int(const json& obj, const std::string& path, const char* key,
                   long long fallback, Collector& c) {
    if (!obj.contains(key)) {
        c.fail(join(path, key), "missing required field");
        return fallback;
    }
    return get_int(obj, path, key, fallback, c);
}

bool get_bool(const json& obj, const std::string& path, const char* key,
              bool fallback, Collector& c) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) {
        c.fail(join(path, key), "must be a boolean");
        return fallback;
    }
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback, Collector& c) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) {
        c.fail(join(path, key), "must be a string");
        return fallback;
    }
    return v.get<std::string>();
}

NodePosition parse_position(const json& v, const std::string& path, Collector& c) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number()) {
        c.fail(path, "must be an array of three numbers [x, y, z]");
        return {};
    }
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

NodePosition need_position(const json& obj, const std::string& path, const char* key,
                           Collector& c) {
    if (!obj.contains(key)) {
        c.fail(join(path, key), "missing required field");
        return {};
    }
    return parse_position(obj.at(key), join(path, key), c);
}

void parse_system(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("system") || !root.at("system").is_object()) {
        c.fail("system", "missing required section");
        return;
    }
    const json& sys = root.at("system");
    check_keys(sys, "system",
               {"psi", "psi_db", "alpha", "eta_eh", "delta", "num_uavs", "c_th"}, c);
    const bool has_psi = sys.contains("psi");
    const bool has_db = sys.contains("psi_db");
    if (has_psi == has_db) {
        c.fail("system", "give exactly one of psi and psi_db");
    } else if (has_psi) {
        cfg.system.psi = get_number(sys, "system", "psi", 1.0, c);
        if (!(cfg.system.psi > 0.0)) c.fail("system.psi", "must be positive");
    } else {
        cfg.system.psi =
            std::pow(10.0, get_number(sys, "system", "psi_db", 0.0, c) / 10.0);
    }
    cfg.system.alpha = need_number(sys, "system", "alpha", 0.5, c);
    if (!(cfg.system.alpha > 0.0 && cfg.system.alpha < 1.0))
        c.fail("system.alpha", "must lie strictly between 0 and 1");
    cfg.system.eta_eh = need_number(sys, "system", "eta_eh", 0.5, c);
    if (!(cfg.system.eta_eh > 0.0 && cfg.system.eta_eh <= 1.0))
        c.fail("system.eta_eh", "must lie in (0, 1]");
    cfg.system.delta = need_number(sys, "system", "delta", 1.0, c);
    if (!(cfg.system.delta > 0.0 && cfg.system.delta <= 1.0))
        c.fail("system.delta", "must lie in (0, 1]");
    cfg.system.num_uavs =
        static_cast<int>(need_int(sys, "system", "num_uavs", 1, c));
    if (cfg.system.num_uavs < 1) c.fail("system.num_uavs", "must be at least 1");
    cfg.system.c_th = need_number(sys, "system", "c_th", 0.1, c);
    if (!(cfg.system.c_th > 0.0)) c.fail("system.c_th", "must be positive");
}

void parse_path_loss(const json& root, ExperimentConfig& cfg, Collector& c) {
    cfg.scenario.loss = PathLossModel{2.0, 100.0};
    if (!root.contains("path_loss")) return;
    const json& pl = root.at("path_loss");
    if (!pl.is_object()) {
        c.fail("path_loss", "must be an object");
        return;
    }
    check_keys(pl, "path_loss", {"tau", "d0"}, c);
    cfg.scenario.loss.tau = get_number(pl, "path_loss", "tau", 2.0, c);
    if (!(cfg.scenario.loss.tau > 0.0)) c.fail("path_loss.tau", "must be positive");
    cfg.scenario.loss.d0 = get_number(pl, "path_loss", "d0", 100.0, c);
    if (!(cfg.scenario.loss.d0 > 0.0)) c.fail("path_loss.d0", "must be positive");
}

void parse_air_fading(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("air_fading") || !root.at("air_fading").is_object()) {
        c.fail("air_fading", "missing required section");
        return;
    }
    const json& af = root.at("air_fading");
    check_keys(af, "air_fading", {"m", "b", "omega"}, c);
    const int m = static_cast<int>(need_int(af, "air_fading", "m", 1, c));
    if (m < 1) c.fail("air_fading.m", "must be at least 1");
    const double b = need_number(af, "air_fading", "b", 0.25, c);
    if (!(b > 0.0)) c.fail("air_fading.b", "must be positive");
    const double omega = need_number(af, "air_fading", "omega", 0.25, c);
    if (!(omega > 0.0)) c.fail("air_fading.omega", "must be positive");
    cfg.scenario.air = ShadowedRician{m, b, omega};
}

void parse_geometry(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("geometry") || !root.at("geometry").is_object()) {
        c.fail("geometry", "missing required section");
        return;
    }
    const json& g = root.at("geometry");
    check_keys(g, "geometry",
               {"source", "destination", "relay", "eve", "eve_disc_radius",
                "eve_positions"},
               c);
    cfg.scenario.source = need_position(g, "geometry", "source", c);
    cfg.scenario.destination = need_position(g, "geometry", "destination", c);
    cfg.scenario.relay = need_position(g, "geometry", "relay", c);
    cfg.scenario.eve = need_position(g, "geometry", "eve", c);
    if (g.contains("relay") && !(cfg.scenario.relay.z > 0.0))
        c.fail("geometry.relay", "UAV altitude must be positive");
    cfg.disc.r_c = get_number(g, "geometry", "eve_disc_radius", 0.0, c);
    if (g.contains("eve_disc_radius") && !(cfg.disc.r_c > 0.0))
        c.fail("geometry.eve_disc_radius", "must be positive when given");
    if (g.contains("eve_positions")) {
        const json& eps = g.at("eve_positions");
        if (!eps.is_array() || eps.empty()) {
            c.fail("geometry.eve_positions", "must be a non-empty array of positions");
        } else {
            for (std::size_t i = 0; i < eps.size(); ++i)
                cfg.eve_positions.push_back(parse_position(
                    eps[i], "geometry.eve_positions[" + std::to_string(i) + "]", c));
        }
    }
}

void parse_evaluation(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("evaluation")) return;
    const json& ev = root.at("evaluation");
    if (!ev.is_object()) {
        c.fail("evaluation", "must be an object");
        return;
    }
    check_keys(ev, "evaluation", {"schemes", "jamming", "methods", "random_eve"}, c);
    if (ev.contains("schemes")) {
        const json& arr = ev.at("schemes");
        if (!arr.is_array() || arr.empty()) {
            c.fail("evaluation.schemes", "must be a non-empty array");
        } else {
            cfg.evaluation.schemes.clear();
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string path =
                    "evaluation.schemes[" + std::to_string(i) + "]";
                if (!arr[i].is_string()) {
                    c.fail(path, "must be \"sc\" or \"mrc\"");
                } else if (arr[i] == "sc") {
                    cfg.evaluation.schemes.push_back(Scheme::sc);
                } else if (arr[i] == "mrc") {
                    cfg.evaluation.schemes.push_back(Scheme::mrc);
                } else {
                    c.fail(path, "must be \"sc\" or \"mrc\"");
                }
            }
        }
    }
    if (ev.contains("jamming")) {
        const json& arr = ev.at("jamming");
        if (!arr.is_array() || arr.empty()) {
            c.fail("evaluation.jamming", "must be a non-empty array of booleans");
        } else {
            cfg.evaluation.jamming.clear();
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (!arr[i].is_boolean())
                    c.fail("evaluation.jamming[" + std::to_string(i) + "]",
                           "must be a boolean");
                else
                    cfg.evaluation.jamming.push_back(arr[i].get<bool>());
            }
        }
    }
    if (ev.contains("methods")) {
        const json& arr = ev.at("methods");
        if (!arr.is_array() || arr.empty()) {
            c.fail("evaluation.methods", "must be a non-empty array");
        } else {
            cfg.evaluation.use_analytic = false;
            cfg.evaluation.use_mc = false;
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string path =
                    "evaluation.methods[" + std::to_string(i) + "]";
                if (!arr[i].is_string())
                    c.fail(path, "must be \"analytic\" or \"mc\"");
                else if (arr[i] == "analytic")
                    cfg.evaluation.use_analytic = true;
                else if (arr[i] == "mc")
                    cfg.evaluation.use_mc = true;
                else
                    c.fail(path, "must be \"analytic\" or \"mc\"");
            }
        }
    }
    cfg.evaluation.random_eve = get_bool(ev, "evaluation", "random_eve", false, c);
}

void parse_mc(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("mc")) return;
    const json& mc = root.at("mc");
    if (!mc.is_object()) {
        c.fail("mc", "must be an object");
        return;
    }
    check_keys(mc, "mc", {"trials", "seed", "sop_definition", "jamming_model"}, c);
    const long long trials = get_int(mc, "mc", "trials", 1'000'000, c);
    if (trials < 1)
        c.fail("mc.trials", "must be at least 1");
    else
        cfg.mc.trials = static_cast<std::uint64_t>(trials);
    const long long seed = get_int(mc, "mc", "seed", 0, c);
    if (seed < 0)
        c.fail("mc.seed", "must be nonnegative");
    else
        cfg.mc.seed = static_cast<std::uint64_t>(seed);
    const std::string def =
        get_string(mc, "mc", "sop_definition", "asymptotic", c);
    if (def == "asymptotic")
        cfg.mc.sop_definition = SopDefinition::asymptotic;
    else if (def == "exact")
        cfg.mc.sop_definition = SopDefinition::exact;
    else
        c.fail("mc.sop_definition", "must be \"asymptotic\" or \"exact\"");
    const std::string model =
        get_string(mc, "mc", "jamming_model", "approximate", c);
    if (model == "approximate")
        cfg.mc.jamming_model = JammingModel::approximate;
    else if (model == "exact")
        cfg.mc.jamming_model = JammingModel::exact;
    else
        c.fail("mc.jamming_model", "must be \"approximate\" or \"exact\"");
}

void parse_sweep(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("sweep")) return;
    const json& sw = root.at("sweep");
    if (!sw.is_object()) {
        c.fail("sweep", "must be an object");
        return;
    }
    check_keys(sw, "sweep", {"axis", "values"}, c);
    SweepSpec spec;
    spec.axis = get_string(sw, "sweep", "axis", "", c);
    if (!sw.contains("axis")) c.fail("sweep.axis", "missing required field");
    bool axis_known = false;
    for (const std::string& a : sweep_axes())
        if (a == spec.axis) axis_known = true;
    if (sw.contains("axis") && !axis_known) {
        std::string allowed;
        for (const std::string& a : sweep_axes())
            allowed += (allowed.empty() ? "" : ", ") + a;
        c.fail("sweep.axis", "unknown axis; choose one of " + allowed);
    }
    if (!sw.contains("values") || !sw.at("values").is_array() ||
        sw.at("values").empty()) {
        c.fail("sweep.values", "must be a non-empty array of numbers");
    } else {
        const json& vals = sw.at("values");
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const std::string path = "sweep.values[" + std::to_string(i) + "]";
            if (!vals[i].is_number()) {
                c.fail(path, "must be a number");
                continue;
            }
            const double v = vals[i].get<double>();
            spec.values.push_back(v);
            if (!axis_known) continue;
            if (spec.axis == "alpha" && !(v > 0.0 && v < 1.0))
                c.fail(path, "alpha values must lie strictly between 0 and 1");
            else if (spec.axis == "eta_eh" && !(v > 0.0 && v <= 1.0))
                c.fail(path, "eta_eh values must lie in (0, 1]");
            else if (spec.axis == "U" && !(v >= 1.0 && v == std::floor(v)))
                c.fail(path, "U values must be positive integers");
            else if ((spec.axis == "C_th" || spec.axis == "psi" ||
                      spec.axis == "r_c") &&
                     !(v > 0.0))
                c.fail(path, spec.axis + " values must be positive");
            else if (spec.axis == "eve_position_index") {
                if (!(v >= 0.0 && v == std::floor(v)))
                    c.fail(path, "position indices must be nonnegative integers");
                else if (v >= static_cast<double>(cfg.eve_positions.size()))
                    c.fail(path, "position index out of range of geometry.eve_positions");
            }
        }
    }
    if (spec.axis == "eve_position_index" && cfg.eve_positions.empty())
        c.fail("sweep.axis",
               "an eve_position_index sweep needs geometry.eve_positions");
    cfg.sweep = std::move(spec);
}

void parse_optimize(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("optimize")) return;
    const json& opt = root.at("optimize");
    if (!opt.is_object()) {
        c.fail("optimize", "must be an object");
        return;
    }
    check_keys(opt, "optimize",
               {"x_min", "x_max", "h_min", "h_max", "nx", "nh", "lateral_offset"},
               c);
    CorridorSearchSpec spec;
    spec.x_min = get_number(opt, "optimize", "x_min", spec.x_min, c);
    spec.x_max = get_number(opt, "optimize", "x_max", spec.x_max, c);
    spec.h_min = get_number(opt, "optimize", "h_min", spec.h_min, c);
    spec.h_max = get_number(opt, "optimize", "h_max", spec.h_max, c);
    spec.nx = static_cast<int>(get_int(opt, "optimize", "nx", spec.nx, c));
    spec.nh = static_cast<int>(get_int(opt, "optimize", "nh", spec.nh, c));
    spec.lateral_offset =
        get_number(opt, "optimize", "lateral_offset", 0.0, c);
    if (!(spec.x_min <= spec.x_max))
        c.fail("optimize.x_min", "must not exceed x_max");
    if (!(spec.h_min <= spec.h_max))
        c.fail("optimize.h_min", "must not exceed h_max");
    if (spec.nx < 1) c.fail("optimize.nx", "must be at least 1");
    if (spec.nh < 1) c.fail("optimize.nh", "must be at least 1");
    if (!(cfg.disc.r_c > 0.0))
        c.fail("geometry.eve_disc_radius", "required for the corridor search");
    cfg.corridor = spec;
}

void parse_output(const json& root, ExperimentConfig& cfg, Collector& c) {
    if (!root.contains("output")) return;
    const json& out = root.at("output");
    if (!out.is_object()) {
        c.fail("output", "must be an object");
        return;
    }
    check_keys(out, "output", {"path"}, c);
    cfg.output_path = get_string(out, "output", "path", "", c);
}

}  // namespace

const std::vector<std::string>& sweep_axes() {
    static const std::vector<std::string> axes = {
        "alpha", "eta_eh", "U", "C_th", "psi", "r_c", "eve_position_index"};
    return axes;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!root.is_object())
        throw ConfigError(path + ": top level must be a JSON object");

    Collector c;
    ExperimentConfig cfg;
    check_keys(root, "",
               {"schema_version", "description", "system", "path_loss",
                "air_fading", "geometry", "evaluation", "mc", "sweep", "optimize",
                "output"},
               c);
    if (!root.contains("schema_version"))
        c.fail("schema_version", "missing required field");
    else if (!root.at("schema_version").is_number_integer() ||
             root.at("schema_version").get<int>() != 1)
        c.fail("schema_version", "unsupported value; this build reads version 1");
    cfg.description = get_string(root, "", "description", "", c);

    parse_system(root, cfg, c);
    parse_path_loss(root, cfg, c);
    parse_air_fading(root, cfg, c);
    parse_geometry(root, cfg, c);
    parse_evaluation(root, cfg, c);
    parse_mc(root, cfg, c);
    parse_sweep(root, cfg, c);
    parse_optimize(root, cfg, c);
    parse_output(root, cfg, c);

    if (cfg.evaluation.random_eve && !(cfg.disc.r_c > 0.0) &&
        !(cfg.sweep && cfg.sweep->axis == "r_c"))
        c.fail("geometry.eve_disc_radius",
               "required when evaluation.random_eve is true");

    if (!c.problems.empty()) {
        std::string msg = "invalid config " + path + ":";
        for (const std::string& p : c.problems) msg += "\n  " + p;
        throw ConfigError(msg);
    }
    return cfg;
}

}  // namespace swarmsec
