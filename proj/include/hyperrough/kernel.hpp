#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hyperrough/grid.hpp"

namespace hyperrough {

// Rescaled fractional kernel K(t) = (H + 1/2) t^{H - 1/2}, H in (-1/2, 1/2].
// Its slab integrals are closed form: int_a^b K = b^h - a^h with h = H + 1/2,
// so mass near the singularity at 0 is never sampled pointwise.
class FractionalKernel {
public:
    explicit FractionalKernel(double hurst);

    double hurst() const noexcept { return hurst_; }
    // h = H + 1/2 > 0.
    double exponent() const noexcept { return exponent_; }

    // K(t); throws DomainError for t <= 0.
    double operator()(double t) const;

    // int_a^b K(s) ds = b^h - a^h; throws DomainError unless 0 <= a <= b.
    double slab_integral(double a, double b) const;

    // Slab weights w_m = (m dt)^h - ((m-1) dt)^h for m = 0..count, with w_0 = 0.
    // Positive and, for H < 1/2, strictly decreasing in m >= 1.
    std::vector<double> slab_weights(double dt, std::size_t count) const;

private:
    double hurst_;
    double exponent_;
};

inline double kernel_eval(const FractionalKernel& k, double t) { return k(t); }
inline double kernel_slab_integral(const FractionalKernel& k, double a, double b) {
    return k.slab_integral(a, b);
}

// Left-point product integration of (f * K) on a uniform grid:
//   c_k = sum_{j<k} f(t_j) [(t_k - t_j)^h - (t_k - t_{j+1})^h],  c_0 = 0.
// f holds one value per grid point (size N + 1; the last value is unused).
// Exact whenever f is constant on each slab.
std::vector<double> convolve_grid(std::span<const double> f, const FractionalKernel& k,
                                  const UniformGrid& grid);

// |int_0^t f(t - s) K(s) ds - f(t)|, with slab-exact kernel weights and f taken
// at slab midpoints on `slabs` uniform slabs. Goes to 0 as H -> -1/2 for
// continuous f. Throws DomainError for t <= 0.
double dirac_limit_gap(const FractionalKernel& k, const std::function<double(double)>& f,
                       double t, std::size_t slabs = 4096);

}  // namespace hyperrough
