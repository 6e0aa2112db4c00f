#pragma once

#include <cstdint>
#include <random>

namespace hyperrough {

// (seed, stream) identifies one reproducible variate stream. Batch runs use
// stream = path index, so every path owns an independent stream regardless
// of how paths are distributed over threads.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// mt19937_64 initialised through std::seed_seq from the four 32-bit halves of
// (seed, stream). Identical RngSeed gives a bit-identical sequence.
class RandomStream {
public:
    explicit RandomStream(RngSeed id);

    double normal() { return normal_(engine_); }
    // Uniform on [0, 1).
    double uniform() { return uniform_(engine_); }

    const RngSeed& id() const noexcept { return id_; }

private:
    RngSeed id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// One (standard normal, uniform) pair: exactly what one Inverse Gaussian draw
// consumes. Coupled simulations share these across Hurst indices.
struct StepVariates {
    double normal = 0.0;
    double uniform = 0.0;
};

inline StepVariates draw_step(RandomStream& stream) {
    const double z = stream.normal();
    const double u = stream.uniform();
    return {z, u};
}

}  // namespace hyperrough
