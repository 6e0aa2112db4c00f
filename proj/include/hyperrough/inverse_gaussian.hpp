#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperrough/grid.hpp"
#include "hyperrough/model.hpp"
#include "hyperrough/rng.hpp"

namespace hyperrough {

// IG(mu, lam): mean mu, variance mu^3 / lam.
struct IGParams {
    double mu = 1.0;
    double lam = 1.0;

    void validate() const;
    double mean() const noexcept { return mu; }
    double variance() const noexcept { return mu * mu * mu / lam; }
};

// Inverse Gaussian Levy process: Y_t ~ IG(mu t, lam t^2).
struct IGProcessParams {
    double mu = 1.0;
    double lam = 1.0;

    void validate() const;
    IGParams marginal(double t) const noexcept { return {mu * t, lam * t * t}; }
};

// Parameters (g0 / (1 + lambda), g0^2 / nu^2) of the IG process Y that drives
// the H -> -1/2 limit (Y, (1 + lambda) Y - G0).
IGProcessParams limit_process_params(const ModelParams& model);

// Density sqrt(lam / (2 pi y^3)) exp(-lam (y - mu)^2 / (2 mu^2 y)) on y > 0, 0 elsewhere.
double ig_pdf(const IGParams& p, double y);

// CDF by adaptive quadrature of ig_pdf (tolerance 1e-10).
double ig_cdf(const IGParams& p, double y);

// Evaluates the IG cdf at nondecreasing arguments by integrating the density
// between consecutive queries. Queries below the previous one restart from 0.
class IGCdfSweep {
public:
    explicit IGCdfSweep(IGParams p);
    double operator()(double y);

private:
    IGParams params_;
    double last_y_ = 0.0;
    double last_value_ = 0.0;
};

// exp((lam/mu) [1 - sqrt(1 - 2 (mu^2/lam) i u)]), principal square root.
std::complex<double> ig_cf(const IGParams& p, double u);

// phi(u) = (lam/mu) [1 - sqrt(1 - 2 (mu^2/lam) i u)]; E exp(i u Y_t) = exp(phi(u) t).
std::complex<double> levy_exponent(const IGProcessParams& p, double u);

// sqrt(lam / (2 pi x^3)) exp(-lam x / (2 mu^2)); throws DomainError for x <= 0.
double levy_measure_density(const IGProcessParams& p, double x);

// Transformation-with-rejection sampler: the chi-square(1) variate is the
// squared normal, the smaller root of the quadratic is accepted with
// probability mu / (mu + root) using the uniform, otherwise mu^2 / root is
// returned. Pure function of the variates so coupled runs can share them.
double ig_transform(const IGParams& p, const StepVariates& v);

inline double ig_sample(const IGParams& p, RandomStream& stream) {
    return ig_transform(p, draw_step(stream));
}

// Path of the IG process on the grid: Y_0 = 0, independent IG(mu dt, lam dt^2)
// increments. Nondecreasing.
std::vector<double> ig_process_sample(const IGProcessParams& p, const UniformGrid& grid,
                                      RandomStream& stream);

// Step sizes are fractions of the mean c t / a.
struct HittingTimeOptions {
    double step_fraction = 0.1;          // largest step
    double min_step_fraction = 1e-10;    // step floor, the time resolution
    double closeness = 0.01;             // step <= closeness * (distance / b)^2
    double horizon_multiple = 1000.0;    // give up after horizon_multiple * c t / a
};

// First time a s + b W_s reaches c t, distributed IG(c t / a, c^2 t^2 / b^2).
// Exact Gaussian steps with an exact Brownian-bridge crossing test between
// them; the only error is the time resolution of the smallest step. A test
// oracle, not a production sampler.
// Returns nullopt when the horizon cap is reached (caller resamples). b = 0
// gives the deterministic c t / a.
std::optional<double> hitting_time_sample(double a, double b, double c, double t,
                                          RandomStream& stream,
                                          const HittingTimeOptions& options = {});

// (Y, (1 + lambda) Y_t - g0 t) on the grid. Throws std::invalid_argument when
// Y is not nondecreasing from 0 or does not match the grid.
std::pair<std::vector<double>, std::vector<double>> limit_pair(const ModelParams& model,
                                                               std::span<const double> y,
                                                               const UniformGrid& grid);

}  // namespace hyperrough
