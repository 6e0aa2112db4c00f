#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "hyperrough/cli/commands.hpp"
#include "hyperrough/cli/config.hpp"
#include "hyperrough/errors.hpp"

namespace {

using hyperrough::cli::RunConfig;

struct Overrides {
    std::string config_file;
    std::string seed, out, hursts, steps, paths, u_grid, v_grid, threads;
};

void add_flags(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--config", o.config_file, "flat key=value config file");
    cmd.add_option("--seed", o.seed, "base seed (u64)");
    cmd.add_option("--out", o.out, "output directory");
    cmd.add_option("--H", o.hursts, "comma-separated Hurst ladder");
    cmd.add_option("--N", o.steps, "time steps");
    cmd.add_option("--paths", o.paths, "Monte Carlo paths");
    cmd.add_option("--u-grid", o.u_grid, "comma-separated u values");
    cmd.add_option("--v-grid", o.v_grid, "comma-separated v values");
    cmd.add_option("--threads", o.threads, "worker threads (0: all cores)");
}

RunConfig resolve(const Overrides& o) {
    RunConfig c = o.config_file.empty() ? RunConfig{} : hyperrough::cli::load_config(o.config_file);
    auto set = [&c](const char* key, const std::string& value) {
        if (!value.empty()) hyperrough::cli::apply_setting(c, key, value);
    };
    set("seed", o.seed);
    set("out", o.out);
    set("H", o.hursts);
    set("N", o.steps);
    set("paths", o.paths);
    set("u_grid", o.u_grid);
    set("v_grid", o.v_grid);
    set("threads", o.threads);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation and diagnostics for hyper-rough square-root processes"};
    app.require_subcommand(1);
    Overrides overrides;
    const char* commands[][2] = {
        {"simulate", "write one coupled trajectory per H plus the limit"},
        {"converge", "JSON report of convergence diagnostics along the H ladder"},
        {"cf", "empirical, Riccati and limiting characteristic functions"},
        {"density", "terminal densities of X and M against the limit"},
        {"riccati-check", "Riccati characteristic functional against its limit"},
    };
    for (const auto& [name, help] : commands) add_flags(*app.add_subcommand(name, help), overrides);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        for (const auto& file : hyperrough::cli::run_command(name, resolve(overrides))) {
            std::printf("%s\n", file.string().c_str());
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return hyperrough::cli::exit_code(e);
    }
}
