// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "hyperrough/simd/dot.hpp"

#include <immintrin.h>

namespace hyperrough::simd::detail {

namespace {

inline double hsum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) noexcept {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double sum = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void dot2_avx2(const double* a0, const double* a1, const double* b, std::size_t n,
               double out[2]) noexcept {
    __m256d s0a = _mm256_setzero_pd();
    __m256d s0b = _mm256_setzero_pd();
    __m256d s1a = _mm256_setzero_pd();
    __m256d s1b = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d b0 = _mm256_loadu_pd(b + i);
        const __m256d b1 = _mm256_loadu_pd(b + i + 4);
        s0a = _mm256_fmadd_pd(_mm256_loadu_pd(a0 + i), b0, s0a);
        s0b = _mm256_fmadd_pd(_mm256_loadu_pd(a0 + i + 4), b1, s0b);
        s1a = _mm256_fmadd_pd(_mm256_loadu_pd(a1 + i), b0, s1a);
        s1b = _mm256_fmadd_pd(_mm256_loadu_pd(a1 + i + 4), b1, s1b);
    }
    double r0 = hsum(_mm256_add_pd(s0a, s0b));
    double r1 = hsum(_mm256_add_pd(s1a, s1b));
    for (; i < n; ++i) {
        r0 += a0[i] * b[i];
        r1 += a1[i] * b[i];
    }
    out[0] = r0;
    out[1] = r1;
}

}  // namespace hyperrough::simd::detail
