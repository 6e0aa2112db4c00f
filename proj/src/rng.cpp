#include "hyperrough/rng.hpp"

namespace hyperrough {

RandomStream::RandomStream(RngSeed id) : id_(id) {
    std::seed_seq seq{static_cast<std::uint32_t>(id.seed), static_cast<std::uint32_t>(id.seed >> 32),
                      static_cast<std::uint32_t>(id.stream),
                      static_cast<std::uint32_t>(id.stream >> 32)};
    engine_.seed(seq);
}

}  // namespace hyperrough
