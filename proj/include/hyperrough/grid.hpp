#pragma once

#include <cstddef>
#include <vector>

namespace hyperrough {

// Uniform time grid t_k = k * dt on [0, T], k = 0..N.
class UniformGrid {
public:
    UniformGrid() : UniformGrid(1.0, 1) {}
    UniformGrid(double horizon, std::size_t steps);

    std::size_t steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_ + 1; }
    double horizon() const noexcept { return horizon_; }
    double dt() const noexcept { return dt_; }

    // t_N is returned as exactly T.
    double time(std::size_t k) const noexcept {
        return k == steps_ ? horizon_ : static_cast<double>(k) * dt_;
    }

    std::vector<double> times() const;

    bool operator==(const UniformGrid& other) const noexcept {
        return steps_ == other.steps_ && horizon_ == other.horizon_;
    }

private:
    double horizon_;
    std::size_t steps_;
    double dt_;
};

}  // namespace hyperrough
