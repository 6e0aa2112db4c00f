#include "hyperrough/resolvent.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "hyperrough/errors.hpp"
#include "hyperrough/quadrature.hpp"
#include "hyperrough/simd/dot.hpp"
#include "hyperrough/special.hpp"

namespace hyperrough {

namespace {

void require_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw DomainError("resolvent: alpha must be finite and nonnegative");
    }
}

}  // namespace

double resolvent_eval(const FractionalKernel& k, double alpha, double t) {
    require_alpha(alpha);
    if (!(t > 0.0)) {
        throw DomainError("resolvent_eval: t must be positive");
    }
    if (alpha == 0.0) return 0.0;
    const double h = k.exponent();
    const double c = alpha * std::tgamma(h + 1.0);  // alpha h Gamma(h)
    const double th = std::pow(t, h);
    return c * (th / t) * mittag_leffler(h, h, c * th);
}

double resolvent_integral(const FractionalKernel& k, double alpha, double t) {
    require_alpha(alpha);
    if (t < 0.0) {
        throw DomainError("resolvent_integral: t must be nonnegative");
    }
    if (alpha == 0.0 || t == 0.0) return 0.0;
    const double h = k.exponent();
    const double z = alpha * std::tgamma(h + 1.0) * std::pow(t, h);
    // E_{h,1}(z) - 1 = z E_{h,h+1}(z), summed without the leading 1.
    return z * mittag_leffler(h, h + 1.0, z);
}

ResolventResidual resolvent_residual(const FractionalKernel& k, double alpha,
                                     const UniformGrid& grid) {
    require_alpha(alpha);
    ResolventResidual out;
    const std::size_t n = grid.steps();
    if (alpha == 0.0 || n < 2) return out;

    const double dt = grid.dt();
    const auto w = k.slab_weights(dt, n);
    std::vector<double> reversed(n);
    for (std::size_t i = 0; i < n; ++i) reversed[i] = alpha * w[n - i];

    // Slab values of R: exact mean on [0, dt], midpoint elsewhere.
    std::vector<double> slab_value(n);
    slab_value[0] = resolvent_integral(k, alpha, dt) / dt;
    for (std::size_t j = 1; j < n; ++j) {
        slab_value[j] = resolvent_eval(k, alpha, (static_cast<double>(j) + 0.5) * dt);
    }

    const std::span<const double> values(slab_value);
    const std::span<const double> weights(reversed);
    for (std::size_t step = 1; step < n; ++step) {
        const double t = grid.time(step);
        const double conv = simd::dot(values.first(step), weights.subspan(n - step, step));
        const double rhs = resolvent_eval(k, alpha, t) - alpha * k(t);
        const double r = std::abs(conv - rhs);
        if (!(r <= out.max_abs)) {
            out.max_abs = r;
            out.argmax = step;
        }
    }
    return out;
}

double linear_mean_resolvent(const ModelParams& model, double hurst, double t) {
    const FractionalKernel k(hurst);
    if (t < 0.0) throw DomainError("linear_mean_resolvent: negative time");
    if (t == 0.0) return 0.0;
    using C = std::complex<double>;
    const double h = k.exponent();
    const double gamma = std::tgamma(h + 1.0);
    const double c = model.lambda * gamma;
    auto transform = [&](C s) {
        const C sh = std::pow(s, h);
        const C g = model.v0 / (s * s) + model.lambda * model.theta * gamma / (sh * s * s);
        return g * sh / (sh + c);
    };
    // Fixed Talbot contour s(phi) = r phi (cot phi + i), r = 2M / (5t).
    constexpr int kNodes = 32;
    const double r = 2.0 * kNodes / (5.0 * t);
    double sum = 0.5 * (transform(C(r, 0.0)) * std::exp(r * t)).real();
    for (int j = 1; j < kNodes; ++j) {
        const double phi = j * std::numbers::pi / kNodes;
        const double cot = std::cos(phi) / std::sin(phi);
        const C s(r * phi * cot, r * phi);
        const double sigma = phi + (phi * cot - 1.0) * cot;
        sum += (std::exp(t * s) * transform(s) * C(1.0, sigma)).real();
    }
    return r / kNodes * sum;
}

double linear_mean_relaxation(const ModelParams& model, double hurst, double t) {
    const FractionalKernel k(hurst);
    if (t < 0.0) throw DomainError("linear_mean_relaxation: negative time");
    if (t == 0.0) return 0.0;
    const double h = k.exponent();
    const double rate = model.lambda * std::tgamma(h + 1.0);
    const double drift_slope = model.lambda * model.theta;

    auto relaxation = [&](double u) {
        if (rate == 0.0 || u <= 0.0) return 1.0;
        return mittag_leffler_relaxation(std::min(h, 1.0), rate * std::pow(u, h));
    };
    // dG0^n(s) = (V0 + lambda theta s^h) ds
    auto integrand = [&](double u) {
        const double s = t - u;
        const double g_prime = model.v0 + (s > 0.0 ? drift_slope * std::pow(s, h) : 0.0);
        return relaxation(u) * g_prime;
    };
    return quad::integral(integrand, 0.0, t, 1e-9);
}

std::vector<double> linear_mean_product_integration(const ModelParams& model, double hurst,
                                                    const UniformGrid& grid) {
    const FractionalKernel k(hurst);
    const std::size_t n = grid.steps();
    const auto w = k.slab_weights(grid.dt(), n);
    std::vector<double> reversed(n);
    for (std::size_t i = 0; i < n; ++i) reversed[i] = w[n - i];

    std::vector<double> mean(grid.size(), 0.0);
    const double implicit = 1.0 + model.lambda * w[1];
    const std::span<const double> weights(reversed);
    for (std::size_t step = 1; step <= n; ++step) {
        // sum_{j=1}^{step-1} m_j w_{step+1-j}: reversed[N-step .. N-2]
        const double history =
            step > 1 ? simd::dot(std::span<const double>(mean).subspan(1, step - 1),
                                 weights.subspan(n - step, step - 1))
                     : 0.0;
        mean[step] = (g0n_eval(model, hurst, grid.time(step)) - model.lambda * history) / implicit;
    }
    return mean;
}

}  // namespace hyperrough
