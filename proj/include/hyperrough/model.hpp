#pragma once

namespace hyperrough {

// Parameters of the hyper-rough square-root process
//   X_t = G0(t) + int_0^t (-lambda X_s + M_s) K(t - s) ds,  <M> = nu^2 X.
struct ModelParams {
    double v0 = 0.1;
    double lambda = 10.0;
    double theta = 0.1;
    double nu = 1.0;
    double horizon = 1.0;

    // g0 = V0 + lambda * theta, slope of the limiting drift G0(t) = g0 t.
    double g0() const noexcept { return v0 + lambda * theta; }

    // Throws ConfigError naming the first invalid field.
    void validate() const;
};

// Drift G0^n(t) = V0 t + lambda theta t^{H + 3/2} / (H + 3/2).
double g0n_eval(const ModelParams& model, double hurst, double t);

// Limiting drift G0(t) = g0 t.
inline double g0_limit_eval(const ModelParams& model, double t) { return model.g0() * t; }

}  // namespace hyperrough
