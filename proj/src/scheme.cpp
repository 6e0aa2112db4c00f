#include "hyperrough/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperrough/errors.hpp"
#include "hyperrough/inverse_gaussian.hpp"
#include "hyperrough/simd/dot.hpp"

namespace hyperrough {

VolterraScheme::VolterraScheme(const ModelParams& model, double hurst, const UniformGrid& grid,
                               SchemeOptions options)
    : model_(model), hurst_(hurst), grid_(grid) {
    model_.validate();
    const FractionalKernel kernel(hurst);
    const std::size_t n = grid_.steps();
    weights_ = kernel.slab_weights(grid_.dt(), n + 1);

    diff_reversed_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        diff_reversed_[i] = weights_[n - i + 1] - weights_[n - i];
    }
    drift_increment_.resize(n);
    double previous = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double next = g0n_eval(model_, hurst, grid_.time(k + 1));
        drift_increment_[k] = next - previous;
        previous = next;
    }

    a_ = 1.0 + model_.lambda * weights_[1];
    b_ = model_.nu * weights_[1];
    mu_floor_ = options.floor_factor * model_.g0() * grid_.dt();
    if (!(mu_floor_ > 0.0)) {
        throw ConfigError("mu_floor", "drift floor must be positive (needs g0 > 0 and floor_factor > 0)");
    }
}

template <class Increment>
PathPair VolterraScheme::run(Increment&& increment) const {
    const std::size_t n = grid_.steps();
    const double w1 = weights_[1];
    PathPair out{grid_, std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0), 0};
    std::vector<double> z(n + 1, 0.0);
    const std::span<const double> zs(z);
    const std::span<const double> diffs(diff_reversed_);

    for (std::size_t k = 0; k < n; ++k) {
        const double history = k > 0 ? simd::dot(zs.subspan(1, k), diffs.subspan(n - k, k)) : 0.0;
        double mu = drift_increment_[k] + history + w1 * z[k];
        const double dx = increment(k, mu, out.clamped_steps);
        const double dm = (a_ * dx - mu) / w1;
        out.x[k + 1] = out.x[k] + dx;
        out.m[k + 1] = out.m[k] + dm;
        z[k + 1] = -model_.lambda * out.x[k + 1] + out.m[k + 1];
    }
    return out;
}

PathPair VolterraScheme::simulate(std::span<const StepVariates> variates) const {
    if (variates.size() != grid_.steps()) {
        throw std::invalid_argument("VolterraScheme::simulate: need one variate pair per step");
    }
    return run([&](std::size_t k, double& mu, std::size_t& clamped) {
        if (mu < mu_floor_) {
            mu = mu_floor_;
            ++clamped;
        }
        if (b_ == 0.0) return mu / a_;
        return ig_transform(IGParams{mu / a_, (mu / b_) * (mu / b_)}, variates[k]);
    });
}

PathPair VolterraScheme::simulate(RandomStream& stream) const {
    return run([&](std::size_t, double& mu, std::size_t& clamped) {
        const StepVariates v = draw_step(stream);
        if (mu < mu_floor_) {
            mu = mu_floor_;
            ++clamped;
        }
        if (b_ == 0.0) return mu / a_;
        return ig_transform(IGParams{mu / a_, (mu / b_) * (mu / b_)}, v);
    });
}

std::vector<double> VolterraScheme::mean_path() const {
    return run([&](std::size_t, double& mu, std::size_t&) { return mu / a_; }).x;
}

PathPair simulate_pair(const ModelParams& model, double hurst, const UniformGrid& grid,
                       RandomStream& stream, SchemeOptions options) {
    return VolterraScheme(model, hurst, grid, options).simulate(stream);
}

PathPair simulate_limit(const ModelParams& model, const UniformGrid& grid,
                        std::span<const StepVariates> variates) {
    const std::size_t n = grid.steps();
    if (variates.size() != n) {
        throw std::invalid_argument("simulate_limit: need one variate pair per step");
    }
    const double g0 = model.g0();
    const double dt = grid.dt();
    const double mu = g0 / (1.0 + model.lambda) * dt;
    PathPair out{grid, std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0), 0};
    for (std::size_t k = 0; k < n; ++k) {
        double dy = mu;
        if (model.nu != 0.0) {
            const double lam = (g0 * dt / model.nu) * (g0 * dt / model.nu);
            dy = ig_transform(IGParams{mu, lam}, variates[k]);
        }
        out.x[k + 1] = out.x[k] + dy;
        out.m[k + 1] = (1.0 + model.lambda) * out.x[k + 1] - g0 * grid.time(k + 1);
    }
    return out;
}

CoupledSimulator::CoupledSimulator(const ModelParams& model, std::span<const double> hursts,
                                   const UniformGrid& grid, SchemeOptions options)
    : model_(model), grid_(grid) {
    if (hursts.empty()) {
        throw std::invalid_argument("simulate_coupled: empty Hurst list");
    }
    schemes_.reserve(hursts.size());
    for (double h : hursts) schemes_.emplace_back(model, h, grid, options);
}

CoupledRun CoupledSimulator::run(std::span<const StepVariates> variates) const {
    CoupledRun out;
    out.hursts.reserve(schemes_.size());
    out.paths.reserve(schemes_.size());
    for (const auto& scheme : schemes_) {
        out.hursts.push_back(scheme.hurst());
        out.paths.push_back(scheme.simulate(variates));
    }
    out.limit = simulate_limit(model_, grid_, variates);
    return out;
}

CoupledRun CoupledSimulator::run(RandomStream& stream) const {
    std::vector<StepVariates> variates(grid_.steps());
    for (auto& v : variates) v = draw_step(stream);
    return run(variates);
}

CoupledRun simulate_coupled(const ModelParams& model, std::span<const double> hursts,
                            const UniformGrid& grid, RandomStream& stream, SchemeOptions options) {
    return CoupledSimulator(model, hursts, grid, options).run(stream);
}

std::vector<double> residual_path(const PathPair& path, const ModelParams& model, double hurst) {
    std::vector<double> r(path.x.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = g0n_eval(model, hurst, path.grid.time(k)) + path.m[k] -
               (1.0 + model.lambda) * path.x[k];
    }
    return r;
}

std::vector<double> limit_residual_path(const PathPair& path, const ModelParams& model) {
    std::vector<double> r(path.x.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = model.g0() * path.grid.time(k) + path.m[k] - (1.0 + model.lambda) * path.x[k];
    }
    return r;
}

}  // namespace hyperrough
