#pragma once

// Dot-product kernels behind every O(N^2) history sum in the library
// (scheme drift, Riccati-Volterra stepping, product-integration convolution).
//
// Each kernel has a scalar reference implementation plus vectorized variants.
// The variant is chosen once at runtime from the CPU feature set; tests compare
// every available variant against the scalar reference.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hyperrough::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

// Best variant supported by the running CPU.
Isa detect_isa() noexcept;

// Variant currently used by dot()/dot2(). Defaults to detect_isa(), or to the
// scalar path when the environment variable HYPERROUGH_FORCE_SCALAR is set.
Isa active_isa() noexcept;

// Overrides the active variant; returns false (and changes nothing) when the
// CPU does not support it.
bool set_active_isa(Isa isa) noexcept;

// Variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

// sum_i a[i] * b[i]; a and b must have equal length.
double dot(std::span<const double> a, std::span<const double> b) noexcept;

// Two dot products sharing the right-hand operand:
//   out[0] = sum_i a0[i] * b[i],  out[1] = sum_i a1[i] * b[i].
// Used for complex histories stored as separate real/imag arrays.
void dot2(std::span<const double> a0, std::span<const double> a1,
          std::span<const double> b, double out[2]) noexcept;

// Explicit variant entry points, exposed for equivalence tests and benchmarks.
double dot_with(Isa isa, std::span<const double> a, std::span<const double> b) noexcept;
void dot2_with(Isa isa, std::span<const double> a0, std::span<const double> a1,
               std::span<const double> b, double out[2]) noexcept;

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept;
void dot2_scalar(const double* a0, const double* a1, const double* b, std::size_t n,
                 double out[2]) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* a, const double* b, std::size_t n) noexcept;
void dot2_avx2(const double* a0, const double* a1, const double* b, std::size_t n,
               double out[2]) noexcept;
#endif

#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n) noexcept;
void dot2_neon(const double* a0, const double* a1, const double* b, std::size_t n,
               double out[2]) noexcept;
#endif

}  // namespace detail
}  // namespace hyperrough::simd
