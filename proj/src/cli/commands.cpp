#include "hyperrough/cli/commands.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

#include "hyperrough/cli/csv.hpp"
#include "hyperrough/ensemble.hpp"
#include "hyperrough/errors.hpp"
#include "hyperrough/inverse_gaussian.hpp"
#include "hyperrough/resolvent.hpp"
#include "hyperrough/riccati.hpp"

namespace hyperrough::cli {

namespace {

using Path = std::filesystem::path;
using nlohmann::json;

constexpr double kLimitTag = -0.5;
constexpr double kKsAlpha = 0.01;

UniformGrid grid_of(const RunConfig& c) { return UniformGrid(c.model.horizon, c.steps); }

EnsembleResult ensemble_of(const RunConfig& c) {
    EnsembleOptions options;
    options.paths = c.paths;
    options.seed = c.seed;
    options.threads = c.threads;
    return run_ensemble(c.model, c.hursts, grid_of(c), options);
}

std::vector<const ProcessSummary*> all_processes(const EnsembleResult& r) {
    std::vector<const ProcessSummary*> out;
    for (const auto& p : r.processes) out.push_back(&p);
    out.push_back(&r.limit);
    return out;
}

IGParams limit_terminal_law(const ModelParams& m) {
    return limit_process_params(m).marginal(m.horizon);
}

double ks_vs_limit(const ProcessSummary& p, const ModelParams& m) {
    IGCdfSweep sweep(limit_terminal_law(m));
    return ks_distance(p.terminal, Component::X, [&sweep](double y) { return sweep(y); });
}

double cf_grid_error(const ProcessSummary& p, const RunConfig& c) {
    double worst = 0.0;
    for (double u : c.u_grid) {
        for (double v : c.v_grid) {
            worst = std::max(worst, std::abs(empirical_cf(p.terminal, u, v) - joint_cf_limit(c.model, u, v)));
        }
    }
    return worst;
}

json record(const RunConfig& c, double hurst, const std::string& metric, double value) {
    return {{"H", hurst}, {"N", c.steps}, {"seed", c.seed}, {"metric", metric}, {"value", value},
            {"stderr", nullptr}};
}

json record(const RunConfig& c, double hurst, const std::string& metric, double value, double se) {
    json r = record(c, hurst, metric, value);
    r["stderr"] = se;
    return r;
}

}  // namespace

std::vector<Path> cmd_simulate(const RunConfig& c) {
    c.validate();
    ensure_directory(c.out_dir);
    const UniformGrid grid = grid_of(c);
    RandomStream stream({c.seed, 0});
    const CoupledRun run = simulate_coupled(c.model, c.hursts, grid, stream);
    const std::string hash = config_hash(c);

    std::vector<Path> written;
    auto write = [&](const PathPair& path, const std::vector<double>& residual, double hurst) {
        const Path file = c.out_dir / ("path_" + process_tag(hurst) + ".csv");
        CsvWriter w(file, hash, c.seed, {"t", "X", "M", "residual"});
        for (std::size_t k = 0; k < grid.size(); ++k) {
            w.row({grid.time(k), path.x[k], path.m[k], residual[k]});
        }
        w.close();
        written.push_back(file);
    };
    for (std::size_t h = 0; h < c.hursts.size(); ++h) {
        write(run.paths[h], residual_path(run.paths[h], c.model, c.hursts[h]), c.hursts[h]);
    }
    write(run.limit, limit_residual_path(run.limit, c.model), kLimitTag);
    return written;
}

std::vector<Path> cmd_converge(const RunConfig& c) {
    c.validate();
    ensure_directory(c.out_dir);
    const EnsembleResult result = ensemble_of(c);
    const double ks_critical = ks_critical_value(kKsAlpha, c.paths);
    const TestFunctionPair tf = TestFunctionPair::constant(c.riccati_f, c.riccati_h);
    const auto ric_limit = char_functional_limit(c.model, tf);

    json records = json::array();
    for (const ProcessSummary* p : all_processes(result)) {
        const double hurst = p->terminal.hurst;
        const bool limit = hurst <= kLimitTag;
        const auto x_t = p->terminal.component(Component::X);
        const auto mx = mean_estimate(x_t);
        const MomentReport moments = moment_checks(p->moments, c.model);
        const MomentEntry& at_t = moments.entries.back();
        const double mean_oracle = limit ? c.model.g0() * c.model.horizon / (1.0 + c.model.lambda)
                                         : linear_mean_resolvent(c.model, hurst, c.model.horizon);
        const auto sup_m = mean_estimate(p->sup_abs_m);
        const auto sup_r = mean_estimate(p->sup_abs_residual);

        records.push_back(record(c, hurst, "ks_x_terminal", ks_vs_limit(*p, c.model)));
        records.push_back(record(c, hurst, "ks_critical_1pct", ks_critical));
        records.push_back(record(c, hurst, "cf_grid_max_error", cf_grid_error(*p, c)));
        records.push_back(record(c, hurst, "mean_x_terminal", mx.mean, mx.stderr_));
        records.push_back(record(c, hurst, "mean_x_terminal_oracle", mean_oracle));
        records.push_back(record(c, hurst, "mean_m_terminal", at_t.m.mean, at_t.m.stderr_));
        records.push_back(record(c, hurst, "qv_ratio_terminal", at_t.qv_ratio, at_t.qv_ratio_stderr));
        records.push_back(record(c, hurst, "moment_checks_pass", moments.all_ok() ? 1.0 : 0.0));
        records.push_back(record(c, hurst, "sup_abs_m_mean", sup_m.mean, sup_m.stderr_));
        records.push_back(record(c, hurst, "sup_abs_residual_mean", sup_r.mean, sup_r.stderr_));
        records.push_back(record(c, hurst, "clamped_steps", static_cast<double>(p->clamped_steps)));
        records.push_back(
            record(c, hurst, "non_monotone_paths", static_cast<double>(p->non_monotone_paths)));
        if (!limit) {
            const auto ric = char_functional(c.model, hurst, tf, grid_of(c));
            records.push_back(record(c, hurst, "riccati_gap", std::abs(ric - ric_limit)));
        }
    }

    const json report = {{"schema_version", kSchemaVersion},
                         {"config_hash", config_hash(c)},
                         {"seed", c.seed},
                         {"paths", c.paths},
                         {"records", records}};
    const Path file = c.out_dir / "converge.json";
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + file.string() + " for writing");
    out << report.dump(2) << '\n';
    if (!out) throw IoError("write failed on " + file.string());
    return {file};
}

std::vector<Path> cmd_cf(const RunConfig& c) {
    c.validate();
    ensure_directory(c.out_dir);
    const EnsembleResult result = ensemble_of(c);
    const UniformGrid grid = grid_of(c);
    const std::string hash = config_hash(c);
    const std::vector<std::string> columns{"u",      "v",      "emp_re", "emp_im",
                                           "ric_re", "ric_im", "lim_re", "lim_im"};
    std::vector<Path> written;
    for (const ProcessSummary* p : all_processes(result)) {
        const double hurst = p->terminal.hurst;
        const Path file = c.out_dir / ("cf_" + process_tag(hurst) + ".csv");
        CsvWriter w(file, hash, c.seed, columns);
        for (double u : c.u_grid) {
            for (double v : c.v_grid) {
                const auto tf = TestFunctionPair::constant(u, v);
                const auto emp = empirical_cf(p->terminal, u, v);
                const auto ric = hurst <= kLimitTag ? char_functional_limit(c.model, tf)
                                                    : char_functional(c.model, hurst, tf, grid);
                const auto lim = joint_cf_limit(c.model, u, v);
                w.row({u, v, emp.real(), emp.imag(), ric.real(), ric.imag(), lim.real(), lim.imag()});
            }
        }
        w.close();
        written.push_back(file);
    }
    return written;
}

std::vector<Path> cmd_density(const RunConfig& c) {
    c.validate();
    ensure_directory(c.out_dir);
    const EnsembleResult result = ensemble_of(c);
    const std::string hash = config_hash(c);
    const IGParams law = limit_terminal_law(c.model);
    const double scale = 1.0 + c.model.lambda;
    const double shift = c.model.g0() * c.model.horizon;
    std::vector<Path> written;
    for (const ProcessSummary* p : all_processes(result)) {
        const Path file = c.out_dir / ("density_" + process_tag(p->terminal.hurst) + ".csv");
        CsvWriter w(file, hash, c.seed, {"component", "center", "density", "reference"});
        const auto hx = histogram_density(p->terminal, Component::X, c.bins);
        for (std::size_t b = 0; b < hx.centers.size(); ++b) {
            w.row("X", {hx.centers[b], hx.densities[b], ig_pdf(law, hx.centers[b])});
        }
        // M_T = (1 + lambda) Y_T - g0 T in the limit.
        const auto hm = histogram_density(p->terminal, Component::M, c.bins);
        for (std::size_t b = 0; b < hm.centers.size(); ++b) {
            const double y = (hm.centers[b] + shift) / scale;
            w.row("M", {hm.centers[b], hm.densities[b], ig_pdf(law, y) / scale});
        }
        w.close();
        written.push_back(file);
    }
    return written;
}

std::vector<Path> cmd_riccati_check(const RunConfig& c) {
    c.validate();
    ensure_directory(c.out_dir);
    const UniformGrid grid = grid_of(c);
    const auto tf = TestFunctionPair::constant(c.riccati_f, c.riccati_h);
    const auto lim = char_functional_limit(c.model, tf);
    const Path file = c.out_dir / "riccati_check.csv";
    CsvWriter w(file, config_hash(c), c.seed, {"H", "N", "re", "im", "lim_re", "lim_im", "gap"});
    for (double hurst : c.hursts) {
        const auto v = char_functional(c.model, hurst, tf, grid);
        w.row({hurst, static_cast<double>(c.steps), v.real(), v.imag(), lim.real(), lim.imag(),
               std::abs(v - lim)});
    }
    w.close();
    return {file};
}

std::vector<Path> run_command(const std::string& name, const RunConfig& config) {
    if (name == "simulate") return cmd_simulate(config);
    if (name == "converge") return cmd_converge(config);
    if (name == "cf") return cmd_cf(config);
    if (name == "density") return cmd_density(config);
    if (name == "riccati-check") return cmd_riccati_check(config);
    throw ConfigError("command", "unknown command '" + name + "'");
}

int exit_code(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return 1;
    if (dynamic_cast<const IoError*>(&e)) return 3;
    if (dynamic_cast<const NumericalError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 2;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 1;
    return 2;
}

}  // namespace hyperrough::cli
