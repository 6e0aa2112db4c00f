#include "hyperrough/inverse_gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperrough/errors.hpp"
#include "hyperrough/quadrature.hpp"

namespace hyperrough {

namespace {

constexpr double kCdfTolerance = 1e-10;

void require_positive(const char* what, double mu, double lam) {
    if (!(mu > 0.0) || !(lam > 0.0) || !std::isfinite(mu) || !std::isfinite(lam)) {
        throw DomainError(std::string(what) + ": need mu > 0 and lam > 0");
    }
}

// Roots of lam (y - mu)^2 = 2 kTailExponent mu^2 y. Outside them the density
// is below exp(-kTailExponent): the mass there is negligible, and the
// underflowing integrand would stall a relative-tolerance quadrature.
constexpr double kTailExponent = 500.0;

std::pair<double, double> effective_support(const IGParams& p) {
    const double half_b = p.mu + kTailExponent * p.mu * p.mu / p.lam;
    const double disc = std::sqrt(half_b * half_b - p.mu * p.mu);
    const double upper = half_b + disc;
    return {p.mu * p.mu / upper, upper};
}

double pdf_integral(const IGParams& p, double from, double to) {
    const auto [lo, hi] = effective_support(p);
    from = std::max(from, lo);
    to = std::min(to, hi);
    if (!(to > from)) return 0.0;
    auto f = [&p](double y) { return ig_pdf(p, y); };
    // Split at the mean, where most of the mass sits.
    if (from < p.mu && p.mu < to) {
        return quad::integral(f, from, p.mu, kCdfTolerance) +
               quad::integral(f, p.mu, to, kCdfTolerance);
    }
    return quad::integral(f, from, to, kCdfTolerance);
}

}  // namespace

void IGParams::validate() const { require_positive("IGParams", mu, lam); }
void IGProcessParams::validate() const { require_positive("IGProcessParams", mu, lam); }

IGProcessParams limit_process_params(const ModelParams& model) {
    const double g0 = model.g0();
    return {g0 / (1.0 + model.lambda), g0 * g0 / (model.nu * model.nu)};
}

double ig_pdf(const IGParams& p, double y) {
    if (!(y > 0.0)) return 0.0;
    const double d = y - p.mu;
    return std::sqrt(p.lam / (2.0 * std::numbers::pi * y * y * y)) *
           std::exp(-p.lam * d * d / (2.0 * p.mu * p.mu * y));
}

double ig_cdf(const IGParams& p, double y) {
    if (!(y > 0.0)) return 0.0;
    return std::min(1.0, pdf_integral(p, 0.0, y));
}

IGCdfSweep::IGCdfSweep(IGParams p) : params_(p) { params_.validate(); }

double IGCdfSweep::operator()(double y) {
    if (!(y > 0.0)) return 0.0;
    if (y < last_y_) {
        last_y_ = 0.0;
        last_value_ = 0.0;
    }
    last_value_ += pdf_integral(params_, last_y_, y);
    last_y_ = y;
    return std::min(1.0, last_value_);
}

std::complex<double> ig_cf(const IGParams& p, double u) {
    return std::exp(levy_exponent(IGProcessParams{p.mu, p.lam}, u));
}

std::complex<double> levy_exponent(const IGProcessParams& p, double u) {
    const std::complex<double> arg(1.0, -2.0 * (p.mu * p.mu / p.lam) * u);
    return (p.lam / p.mu) * (1.0 - std::sqrt(arg));
}

double levy_measure_density(const IGProcessParams& p, double x) {
    if (!(x > 0.0)) {
        throw DomainError("levy_measure_density: x must be positive");
    }
    return std::sqrt(p.lam / (2.0 * std::numbers::pi * x * x * x)) *
           std::exp(-p.lam * x / (2.0 * p.mu * p.mu));
}

double ig_transform(const IGParams& p, const StepVariates& v) {
    // r = mu chi^2 / (2 lam); the smaller root mu (1 + r - sqrt(r (2 + r)))
    // is rewritten as mu / (1 + r + sqrt(r (2 + r))) to avoid cancellation.
    const double r = p.mu * v.normal * v.normal / (2.0 * p.lam);
    const double root = p.mu / (1.0 + r + std::sqrt(r * (2.0 + r)));
    if (v.uniform * (p.mu + root) <= p.mu) return root;
    return p.mu * (p.mu / root);
}

std::vector<double> ig_process_sample(const IGProcessParams& p, const UniformGrid& grid,
                                      RandomStream& stream) {
    p.validate();
    const IGParams increment = p.marginal(grid.dt());
    std::vector<double> path(grid.size(), 0.0);
    for (std::size_t k = 1; k < path.size(); ++k) {
        path[k] = path[k - 1] + ig_sample(increment, stream);
    }
    return path;
}

namespace {

// Probability that a Brownian bridge with variance rate b^2 over a span of
// length dt, pinned at x0 and x1, reaches `level`.
double bridge_crossing(double x0, double x1, double level, double b, double dt) {
    if (x0 >= level || x1 >= level) return 1.0;
    return std::exp(-2.0 * (level - x0) * (level - x1) / (b * b * dt));
}

}  // namespace

std::optional<double> hitting_time_sample(double a, double b, double c, double t,
                                          RandomStream& stream,
                                          const HittingTimeOptions& options) {
    if (!(a > 0.0) || !(b >= 0.0) || !(c > 0.0) || !(t > 0.0)) {
        throw DomainError("hitting_time_sample: need a, c, t > 0 and b >= 0");
    }
    const double level = c * t;
    const double expected = level / a;
    if (b == 0.0) return expected;

    // Steps shrink with the squared distance to the level, so a crossing is
    // only ever detected inside a step no longer than the floor, and its
    // midpoint is returned.
    const double max_step = options.step_fraction * expected;
    const double min_step = options.min_step_fraction * expected;
    const double horizon = options.horizon_multiple * expected;
    double time = 0.0;
    double position = 0.0;
    while (time < horizon) {
        const double gap = level - position;
        const double step = std::clamp(options.closeness * gap * gap / (b * b), min_step, max_step);
        const double next = position + a * step + b * std::sqrt(step) * stream.normal();
        if (stream.uniform() < bridge_crossing(position, next, level, b, step)) {
            return time + 0.5 * step;
        }
        time += step;
        position = next;
    }
    return std::nullopt;
}

std::pair<std::vector<double>, std::vector<double>> limit_pair(const ModelParams& model,
                                                               std::span<const double> y,
                                                               const UniformGrid& grid) {
    if (y.size() != grid.size()) {
        throw std::invalid_argument("limit_pair: path length does not match the grid");
    }
    if (y.front() != 0.0) {
        throw std::invalid_argument("limit_pair: path must start at 0");
    }
    std::vector<double> compensated(y.size());
    const double g0 = model.g0();
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (k > 0 && y[k] < y[k - 1]) {
            throw std::invalid_argument("limit_pair: path decreases at index " + std::to_string(k));
        }
        compensated[k] = (1.0 + model.lambda) * y[k] - g0 * grid.time(k);
    }
    return {std::vector<double>(y.begin(), y.end()), std::move(compensated)};
}

}  // namespace hyperrough
