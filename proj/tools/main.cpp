#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swarmsec/runner.hpp"

using namespace swarmsec;

int main(int argc, char** argv) {
    CLI::App app{
        "Secrecy outage evaluation for a wireless-powered UAV relay swarm "
        "with cooperative jamming"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = 1;
    std::optional<std::uint64_t> seed;
    std::string out_path;

    CLI::App* eval =
        app.add_subcommand("eval", "evaluate the configured cases once");
    CLI::App* sweep =
        app.add_subcommand("sweep", "sweep one parameter axis and write CSV");
    CLI::App* validate = app.add_subcommand(
        "validate", "compare the closed forms against the simulator");
    CLI::App* optimize =
        app.add_subcommand("optimize", "grid-search the swarm hovering corridor");
    for (CLI::App* cmd : {eval, sweep, validate, optimize}) {
        cmd->add_option("--config", config_path, "JSON experiment file")
            ->required();
        cmd->add_option("--threads", threads,
                        "worker threads for simulation and search")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "override the simulator seed");
        cmd->add_option("--out", out_path,
                        "write the artifact to this file instead of stdout");
    }
    CLI11_PARSE(app, argc, argv);

    ExperimentConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    const std::string target = !out_path.empty() ? out_path : cfg.output_path;
    if (!target.empty()) {
        file.open(target);
        if (!file) {
            std::cerr << "cannot open output file: " << target << "\n";
            return 2;
        }
        out = &file;
    }

    const RunOptions opt{threads, seed};
    try {
        if (eval->parsed()) return cmd_eval(cfg, opt, *out, std::cerr);
        if (sweep->parsed()) return cmd_sweep(cfg, opt, *out, std::cerr);
        if (validate->parsed()) return cmd_validate(cfg, opt, *out, std::cerr);
        return cmd_optimize(cfg, opt, *out, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
