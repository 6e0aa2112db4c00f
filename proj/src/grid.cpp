#include "hyperrough/grid.hpp"

#include <cmath>

#include "hyperrough/errors.hpp"

namespace hyperrough {

UniformGrid::UniformGrid(double horizon, std::size_t steps)
    : horizon_(horizon), steps_(steps), dt_(steps > 0 ? horizon / static_cast<double>(steps) : 0.0) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw ConfigError("T", "horizon must be a positive finite number");
    }
    if (steps == 0) {
        throw ConfigError("N", "grid needs at least one step");
    }
}

std::vector<double> UniformGrid::times() const {
    std::vector<double> out(size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = time(k);
    return out;
}

}  // namespace hyperrough
