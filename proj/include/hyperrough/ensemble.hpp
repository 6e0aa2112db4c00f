#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperrough/diagnostics.hpp"
#include "hyperrough/grid.hpp"
#include "hyperrough/model.hpp"
#include "hyperrough/scheme.hpp"

namespace hyperrough {

struct EnsembleOptions {
    std::size_t paths = 1000;
    std::uint64_t seed = 42;
    unsigned threads = 0;  // 0: one per hardware thread
    // Grid indices where per-time moments are accumulated; empty means
    // ten evenly spaced times ending at T.
    std::vector<std::size_t> moment_indices;
    SchemeOptions scheme;
};

// Per-process statistics of a batch; the limit process carries hurst = -0.5.
struct ProcessSummary {
    SampleBatch terminal;
    std::vector<double> sup_abs_m;         // sup_t |M_t| per path
    std::vector<double> sup_abs_residual;  // sup_t |G + M - (1 + lambda) X| per path
    MomentAccumulator moments;
    std::size_t clamped_steps = 0;
    std::size_t non_monotone_paths = 0;  // X paths with a decreasing step
};

struct EnsembleResult {
    std::vector<ProcessSummary> processes;  // one per Hurst index, same order
    ProcessSummary limit;
};

// Runs `paths` coupled paths (stream id = path index) and reduces them in
// fixed-size chunks merged in path order, so the result does not depend on
// the thread count.
EnsembleResult run_ensemble(const ModelParams& model, const std::vector<double>& hursts,
                            const UniformGrid& grid, const EnsembleOptions& options);

}  // namespace hyperrough
