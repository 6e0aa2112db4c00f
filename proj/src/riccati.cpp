#include "hyperrough/riccati.hpp"

#include <cmath>
#include <sstream>

#include "hyperrough/errors.hpp"
#include "hyperrough/inverse_gaussian.hpp"
#include "hyperrough/kernel.hpp"
#include "hyperrough/quadrature.hpp"
#include "hyperrough/simd/dot.hpp"

namespace hyperrough {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kRealPartTolerance = 1e-9;

// Root of a z^2 + b z + c = 0 that tends to -c / b as a -> 0.
Complex small_root(double a, Complex b, Complex c) {
    if (a == 0.0) return -c / b;
    Complex s = std::sqrt(b * b - 4.0 * a * c);
    if (std::real(std::conj(b) * s) < 0.0) s = -s;
    return -2.0 * c / (b + s);
}

}  // namespace

TestFunctionPair TestFunctionPair::constant(double f_value, double h_value) {
    return {[f_value](double) { return f_value; }, [h_value](double) { return h_value; }};
}

Complex riccati_nonlinearity(double t, Complex u, const ModelParams& model,
                             const TestFunctionPair& tf) {
    const double f = tf.f(t);
    const double h = tf.h(t);
    const double nu2 = model.nu * model.nu;
    return kI * f - 0.5 * nu2 * h * h + (kI * (nu2 * h) - model.lambda) * u + 0.5 * nu2 * u * u;
}

RiccatiSolution solve_riccati(const ModelParams& model, double hurst, const TestFunctionPair& tf,
                              const UniformGrid& grid) {
    const FractionalKernel kernel(hurst);
    const std::size_t n = grid.steps();
    const auto w = kernel.slab_weights(grid.dt(), n);
    std::vector<double> reversed(n);
    for (std::size_t i = 0; i < n; ++i) reversed[i] = w[n - i];
    const std::span<const double> weights(reversed);

    const double nu2 = model.nu * model.nu;
    const double w1 = w[1];
    RiccatiSolution out{grid, std::vector<Complex>(n + 1, Complex(0.0, 0.0))};
    // F(t_j, psi_j), j >= 1, split into real and imaginary parts.
    std::vector<double> f_re(n + 1, 0.0);
    std::vector<double> f_im(n + 1, 0.0);
    const std::span<const double> re(f_re);
    const std::span<const double> im(f_im);

    for (std::size_t k = 1; k <= n; ++k) {
        double history[2] = {0.0, 0.0};
        if (k > 1) {
            // sum_{j=1}^{k-1} F_j w_{k+1-j}
            simd::dot2(re.subspan(1, k - 1), im.subspan(1, k - 1), weights.subspan(n - k, k - 1),
                       history);
        }
        const double t = grid.time(k);
        const double f = tf.f(t);
        const double h = tf.h(t);
        const Complex c = Complex(history[0], history[1]) + w1 * (kI * f - 0.5 * nu2 * h * h);
        const Complex b = w1 * (kI * (nu2 * h) - model.lambda) - 1.0;
        const Complex psi = small_root(0.5 * w1 * nu2, b, c);
        if (!std::isfinite(psi.real()) || !std::isfinite(psi.imag()) ||
            psi.real() > kRealPartTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "solve_riccati: Re psi = " << psi.real() << " at t = " << t << " (H = " << hurst
               << ", N = " << n << "); refine the grid";
            throw NumericalError(os.str());
        }
        out.psi[k] = psi;
        const Complex fk = riccati_nonlinearity(t, psi, model, tf);
        f_re[k] = fk.real();
        f_im[k] = fk.imag();
    }
    return out;
}

Complex psi_limit(const ModelParams& model, const TestFunctionPair& tf, double t) {
    const double f = tf.f(t);
    const double h = tf.h(t);
    const double nu2 = model.nu * model.nu;
    const double one_plus = 1.0 + model.lambda;
    if (nu2 == 0.0) {
        // Fixed point of the linear map u -> i f - lambda u.
        return kI * f / one_plus;
    }
    const Complex root = std::sqrt(1.0 - 2.0 * kI * (nu2 / (one_plus * one_plus)) * (f + one_plus * h));
    return -kI * h + (one_plus / nu2) * (1.0 - root);
}

Complex char_functional_from(const ModelParams& model, double hurst, const TestFunctionPair& tf,
                             const RiccatiSolution& solution) {
    const UniformGrid& grid = solution.grid;
    const std::size_t n = grid.steps();
    const double h = hurst + 0.5;
    const double nu2 = model.nu * model.nu;
    std::vector<Complex> f_values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        f_values[k] = riccati_nonlinearity(grid.time(k), solution.psi[k], model, tf);
    }
    // On [0, t_1] psi grows like psi_1 (s / t_1)^h, which the trapezoid rule
    // resolves only to O(dt); the quadratic F is averaged against that profile.
    const double s_mid = 0.5 * grid.time(1);
    const double f_mid = tf.f(s_mid);
    const double h_mid = tf.h(s_mid);
    const Complex psi1 = solution.psi[1];
    const Complex first_slab_mean = kI * f_mid - 0.5 * nu2 * h_mid * h_mid +
                                    (kI * (nu2 * h_mid) - model.lambda) * psi1 / (h + 1.0) +
                                    0.5 * nu2 * psi1 * psi1 / (2.0 * h + 1.0);

    Complex total(0.0, 0.0);
    double lower = 0.0;
    double lower_pow = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double upper = grid.time(j + 1);
        const double upper_pow = std::pow(upper, h + 1.0);
        const double mass = model.v0 * (upper - lower) +
                            model.lambda * model.theta * (upper_pow - lower_pow) / (h + 1.0);
        // T - t runs over [t_{N-j-1}, t_{N-j}] on this slab.
        const Complex mean =
            j + 1 == n ? first_slab_mean : 0.5 * (f_values[n - j] + f_values[n - j - 1]);
        total += mean * mass;
        lower = upper;
        lower_pow = upper_pow;
    }
    return std::exp(total);
}

Complex char_functional(const ModelParams& model, double hurst, const TestFunctionPair& tf,
                        const UniformGrid& grid) {
    return char_functional_from(model, hurst, tf, solve_riccati(model, hurst, tf, grid));
}

Complex char_functional_limit(const ModelParams& model, const TestFunctionPair& tf) {
    const double horizon = model.horizon;
    const double re = quad::integral([&](double t) { return psi_limit(model, tf, t).real(); }, 0.0,
                                     horizon, 1e-12);
    const double im = quad::integral([&](double t) { return psi_limit(model, tf, t).imag(); }, 0.0,
                                     horizon, 1e-12);
    return std::exp(model.g0() * Complex(re, im));
}

Complex joint_cf_limit(const ModelParams& model, double u, double v) {
    const double horizon = model.horizon;
    const IGProcessParams y = limit_process_params(model);
    return std::exp(levy_exponent(y, u + (1.0 + model.lambda) * v) * horizon -
                    kI * (v * model.g0() * horizon));
}

}  // namespace hyperrough
