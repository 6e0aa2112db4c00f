#include "hyperrough/simd/dot.hpp"

namespace hyperrough::simd::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void dot2_scalar(const double* a0, const double* a1, const double* b, std::size_t n,
                 double out[2]) noexcept {
    double s0 = 0.0;
    double s1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s0 += a0[i] * b[i];
        s1 += a1[i] * b[i];
    }
    out[0] = s0;
    out[1] = s1;
}

}  // namespace hyperrough::simd::detail
