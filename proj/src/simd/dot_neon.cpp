#include "hyperrough/simd/dot.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace hyperrough::simd::detail {

double dot_neon(const double* a, const double* b, std::size_t n) noexcept {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    float64x2_t acc2 = vdupq_n_f64(0.0);
    float64x2_t acc3 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc2 = vfmaq_f64(acc2, vld1q_f64(a + i + 4), vld1q_f64(b + i + 4));
        acc3 = vfmaq_f64(acc3, vld1q_f64(a + i + 6), vld1q_f64(b + i + 6));
    }
    double sum = vaddvq_f64(vaddq_f64(vaddq_f64(acc0, acc1), vaddq_f64(acc2, acc3)));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void dot2_neon(const double* a0, const double* a1, const double* b, std::size_t n,
               double out[2]) noexcept {
    float64x2_t s0 = vdupq_n_f64(0.0);
    float64x2_t s1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t bv = vld1q_f64(b + i);
        s0 = vfmaq_f64(s0, vld1q_f64(a0 + i), bv);
        s1 = vfmaq_f64(s1, vld1q_f64(a1 + i), bv);
    }
    double r0 = vaddvq_f64(s0);
    double r1 = vaddvq_f64(s1);
    for (; i < n; ++i) {
        r0 += a0[i] * b[i];
        r1 += a1[i] * b[i];
    }
    out[0] = r0;
    out[1] = r1;
}

}  // namespace hyperrough::simd::detail
#endif
