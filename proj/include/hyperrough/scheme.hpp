#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperrough/grid.hpp"
#include "hyperrough/kernel.hpp"
#include "hyperrough/model.hpp"
#include "hyperrough/rng.hpp"

namespace hyperrough {

// Discretized trajectory of (X, M) with X_0 = M_0 = 0 and X nondecreasing.
struct PathPair {
    UniformGrid grid;
    std::vector<double> x;
    std::vector<double> m;
    // Steps whose drift predictor fell below the floor and was clamped.
    std::size_t clamped_steps = 0;
};

struct SchemeOptions {
    // Drift floor mu_floor = floor_factor * g0 * dt; must be positive.
    double floor_factor = 1e-12;
};

// Inverse-Gaussian scheme for the hyper-rough pair on a uniform grid.
//
// Slab [t_j, t_{j+1}] carries z_{j+1} = -lambda X_{j+1} + M_{j+1} with the
// exact kernel weight w_{k-j}, so X_k = G0^n(t_k) + sum_{j=1}^k z_j w_{k+1-j}.
// The newest slab is implicit: with a = 1 + lambda w_1 and b = nu w_1 one step
// solves a dX = mu + w_1 dM where
//   mu = dG0^n + sum_{j=1}^{k} z_j (w_{k+2-j} - w_{k+1-j}) + w_1 z_k
// collects everything known at t_k. Writing dM = nu dW_{dX}, dX is the first
// passage time of a s + b W_s through mu, i.e. IG(mu / a, mu^2 / b^2), and dM
// is recovered as (a dX - mu) / w_1. Then E[dX | past] = mu / a,
// E[dM | past] = 0 and Var[dM | past] = nu^2 E[dX | past].
//
// The weight tables are built once; simulate() is const and thread-safe.
class VolterraScheme {
public:
    VolterraScheme(const ModelParams& model, double hurst, const UniformGrid& grid,
                   SchemeOptions options = {});

    // Draws one (normal, uniform) pair per step from the stream.
    PathPair simulate(RandomStream& stream) const;

    // Uses the supplied variates, one pair per step (size N).
    PathPair simulate(std::span<const StepVariates> variates) const;

    // The recursion with dX replaced by its conditional mean mu / a and dM = 0:
    // the scheme's exact expectation of X on the grid.
    std::vector<double> mean_path() const;

    double hurst() const noexcept { return hurst_; }
    const UniformGrid& grid() const noexcept { return grid_; }
    const ModelParams& model() const noexcept { return model_; }
    // w_m for m = 0..N+1 (w_0 = 0).
    const std::vector<double>& weights() const noexcept { return weights_; }
    double implicit_factor() const noexcept { return a_; }
    double mu_floor() const noexcept { return mu_floor_; }

private:
    template <class Increment>
    PathPair run(Increment&& increment) const;

    ModelParams model_;
    double hurst_;
    UniformGrid grid_;
    std::vector<double> weights_;
    std::vector<double> diff_reversed_;  // diff_reversed_[i] = w_{N-i+1} - w_{N-i}
    std::vector<double> drift_increment_;  // G0^n(t_{k+1}) - G0^n(t_k)
    double a_;
    double b_;
    double mu_floor_;
};

PathPair simulate_pair(const ModelParams& model, double hurst, const UniformGrid& grid,
                       RandomStream& stream, SchemeOptions options = {});

// Limit pair (Y, (1 + lambda) Y - g0 t) with Y increments
// IG(mu* dt, lam* dt^2), mu* = g0 / (1 + lambda), lam* = g0^2 / nu^2.
PathPair simulate_limit(const ModelParams& model, const UniformGrid& grid,
                        std::span<const StepVariates> variates);

struct CoupledRun {
    std::vector<double> hursts;
    std::vector<PathPair> paths;  // one per Hurst index, same order
    PathPair limit;
};

// Runs every Hurst index and the limit pair on one shared sequence of
// (normal, uniform) pairs, drawn once per step from `stream`.
class CoupledSimulator {
public:
    CoupledSimulator(const ModelParams& model, std::span<const double> hursts,
                     const UniformGrid& grid, SchemeOptions options = {});

    CoupledRun run(RandomStream& stream) const;
    CoupledRun run(std::span<const StepVariates> variates) const;

    const std::vector<VolterraScheme>& schemes() const noexcept { return schemes_; }
    const UniformGrid& grid() const noexcept { return grid_; }

private:
    ModelParams model_;
    UniformGrid grid_;
    std::vector<VolterraScheme> schemes_;
};

// Throws std::invalid_argument for an empty Hurst list.
CoupledRun simulate_coupled(const ModelParams& model, std::span<const double> hursts,
                            const UniformGrid& grid, RandomStream& stream,
                            SchemeOptions options = {});

// r_k = G0^n(t_k) + M_k - (1 + lambda) X_k.
std::vector<double> residual_path(const PathPair& path, const ModelParams& model, double hurst);

// Same with the limiting drift G0(t) = g0 t; identically 0 on simulate_limit output.
std::vector<double> limit_residual_path(const PathPair& path, const ModelParams& model);

}  // namespace hyperrough
