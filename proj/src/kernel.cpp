#include "hyperrough/kernel.hpp"

#include <cmath>
#include <string>

#include "hyperrough/errors.hpp"
#include "hyperrough/simd/dot.hpp"

namespace hyperrough {

FractionalKernel::FractionalKernel(double hurst) : hurst_(hurst), exponent_(hurst + 0.5) {
    if (!(hurst > -0.5) || !(hurst <= 0.5)) {
        throw DomainError("FractionalKernel: Hurst index must lie in (-1/2, 1/2], got " +
                          std::to_string(hurst));
    }
}

double FractionalKernel::operator()(double t) const {
    if (!(t > 0.0)) {
        throw DomainError("kernel_eval: kernel is singular at t <= 0");
    }
    return exponent_ * std::pow(t, hurst_ - 0.5);
}

double FractionalKernel::slab_integral(double a, double b) const {
    if (!(a >= 0.0) || !(b >= a)) {
        throw DomainError("kernel_slab_integral: need 0 <= a <= b");
    }
    if (a == b) return 0.0;
    if (a == 0.0) return std::pow(b, exponent_);
    // b^h - a^h without cancellation when b/a is close to 1.
    return std::pow(a, exponent_) * std::expm1(exponent_ * std::log(b / a));
}

std::vector<double> FractionalKernel::slab_weights(double dt, std::size_t count) const {
    std::vector<double> w(count + 1, 0.0);
    if (count == 0) return w;
    const double scale = std::pow(dt, exponent_);
    w[1] = scale;
    for (std::size_t m = 2; m <= count; ++m) {
        const double prev = static_cast<double>(m - 1);
        w[m] = scale * std::pow(prev, exponent_) *
               std::expm1(exponent_ * std::log1p(1.0 / prev));
    }
    return w;
}

std::vector<double> convolve_grid(std::span<const double> f, const FractionalKernel& k,
                                  const UniformGrid& grid) {
    const std::size_t n = grid.steps();
    if (f.size() != grid.size()) {
        throw std::invalid_argument("convolve_grid: expected " + std::to_string(grid.size()) +
                                    " samples, got " + std::to_string(f.size()));
    }
    const auto w = k.slab_weights(grid.dt(), n);
    // reversed[i] = w_{N - i}, so that w_{k-j} for j = 0..k-1 is reversed[N-k .. N-1].
    std::vector<double> reversed(n);
    for (std::size_t i = 0; i < n; ++i) reversed[i] = w[n - i];

    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t step = 1; step <= n; ++step) {
        out[step] = simd::dot(f.first(step), std::span<const double>(reversed).subspan(n - step, step));
    }
    return out;
}

double dirac_limit_gap(const FractionalKernel& k, const std::function<double(double)>& f,
                       double t, std::size_t slabs) {
    if (!(t > 0.0)) {
        throw DomainError("dirac_limit_gap: t must be positive");
    }
    if (slabs == 0) {
        throw std::invalid_argument("dirac_limit_gap: need at least one slab");
    }
    const double ds = t / static_cast<double>(slabs);
    double integral = 0.0;
    double lower = 0.0;
    for (std::size_t j = 0; j < slabs; ++j) {
        const double upper = (j + 1 == slabs) ? t : static_cast<double>(j + 1) * ds;
        const double mid = 0.5 * (lower + upper);
        integral += f(t - mid) * k.slab_integral(lower, upper);
        lower = upper;
    }
    return std::abs(integral - f(t));
}

}  // namespace hyperrough
