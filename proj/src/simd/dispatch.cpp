#include "hyperrough/simd/dot.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>

namespace hyperrough::simd {

namespace {

bool supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa initial_isa() noexcept {
    if (std::getenv("HYPERROUGH_FORCE_SCALAR") != nullptr) {
        return Isa::scalar;
    }
    return detect_isa();
}

std::atomic<Isa>& active() noexcept {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

Isa detect_isa() noexcept {
    if (supported(Isa::avx2)) return Isa::avx2;
    if (supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
    if (!supported(isa)) return false;
    active().store(isa, std::memory_order_relaxed);
    return true;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (supported(isa)) out.push_back(isa);
    }
    return out;
}

double dot_with(Isa isa, std::span<const double> a, std::span<const double> b) noexcept {
    assert(a.size() == b.size());
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return detail::dot_avx2(a.data(), b.data(), a.size());
#endif
#if defined(__aarch64__)
        case Isa::neon: return detail::dot_neon(a.data(), b.data(), a.size());
#endif
        default: return detail::dot_scalar(a.data(), b.data(), a.size());
    }
}

void dot2_with(Isa isa, std::span<const double> a0, std::span<const double> a1,
               std::span<const double> b, double out[2]) noexcept {
    assert(a0.size() == b.size() && a1.size() == b.size());
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: detail::dot2_avx2(a0.data(), a1.data(), b.data(), b.size(), out); return;
#endif
#if defined(__aarch64__)
        case Isa::neon: detail::dot2_neon(a0.data(), a1.data(), b.data(), b.size(), out); return;
#endif
        default: detail::dot2_scalar(a0.data(), a1.data(), b.data(), b.size(), out); return;
    }
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return dot_with(active_isa(), a, b);
}

void dot2(std::span<const double> a0, std::span<const double> a1, std::span<const double> b,
          double out[2]) noexcept {
    dot2_with(active_isa(), a0, a1, b, out);
}

}  // namespace hyperrough::simd
