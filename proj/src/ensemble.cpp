#include "hyperrough/ensemble.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperrough/parallel.hpp"

namespace hyperrough {

namespace {

constexpr std::size_t kChunk = 64;
constexpr double kLimitTag = -0.5;

ProcessSummary empty_summary(double hurst, const UniformGrid& grid,
                             const std::vector<std::size_t>& indices, std::uint64_t seed) {
    ProcessSummary s;
    s.terminal.hurst = hurst;
    s.terminal.steps = grid.steps();
    s.terminal.seed = seed;
    s.moments = MomentAccumulator(hurst, grid, indices);
    return s;
}

void record(ProcessSummary& s, const PathPair& path, const std::vector<double>& residual) {
    s.terminal.pairs.emplace_back(path.x.back(), path.m.back());
    s.sup_abs_m.push_back(sup_abs(path.m));
    s.sup_abs_residual.push_back(sup_abs(residual));
    s.moments.add(path.x, path.m);
    s.clamped_steps += path.clamped_steps;
    if (std::adjacent_find(path.x.begin(), path.x.end(), std::greater<>()) != path.x.end()) {
        ++s.non_monotone_paths;
    }
}

void append(ProcessSummary& into, const ProcessSummary& from) {
    auto& pairs = into.terminal.pairs;
    pairs.insert(pairs.end(), from.terminal.pairs.begin(), from.terminal.pairs.end());
    into.sup_abs_m.insert(into.sup_abs_m.end(), from.sup_abs_m.begin(), from.sup_abs_m.end());
    into.sup_abs_residual.insert(into.sup_abs_residual.end(), from.sup_abs_residual.begin(),
                                 from.sup_abs_residual.end());
    into.moments.merge(from.moments);
    into.clamped_steps += from.clamped_steps;
    into.non_monotone_paths += from.non_monotone_paths;
}

}  // namespace

EnsembleResult run_ensemble(const ModelParams& model, const std::vector<double>& hursts,
                            const UniformGrid& grid, const EnsembleOptions& options) {
    if (options.paths == 0) throw std::invalid_argument("run_ensemble: paths must be positive");
    const std::vector<std::size_t> indices = options.moment_indices.empty()
                                                 ? evenly_spaced_indices(grid, std::min<std::size_t>(10, grid.steps()))
                                                 : options.moment_indices;
    const CoupledSimulator simulator(model, hursts, grid, options.scheme);

    auto fresh = [&] {
        EnsembleResult r;
        for (double h : hursts) r.processes.push_back(empty_summary(h, grid, indices, options.seed));
        r.limit = empty_summary(kLimitTag, grid, indices, options.seed);
        return r;
    };

    const std::size_t chunks = (options.paths + kChunk - 1) / kChunk;
    auto partial = parallel_map(chunks, options.threads, [&](std::size_t c) {
        EnsembleResult r = fresh();
        const std::size_t end = std::min(options.paths, (c + 1) * kChunk);
        for (std::size_t p = c * kChunk; p < end; ++p) {
            RandomStream stream({options.seed, p});
            const CoupledRun run = simulator.run(stream);
            for (std::size_t h = 0; h < hursts.size(); ++h) {
                record(r.processes[h], run.paths[h], residual_path(run.paths[h], model, hursts[h]));
            }
            record(r.limit, run.limit, limit_residual_path(run.limit, model));
        }
        return r;
    });

    EnsembleResult out = fresh();
    for (const auto& r : partial) {
        for (std::size_t h = 0; h < hursts.size(); ++h) append(out.processes[h], r.processes[h]);
        append(out.limit, r.limit);
    }
    return out;
}

}  // namespace hyperrough
