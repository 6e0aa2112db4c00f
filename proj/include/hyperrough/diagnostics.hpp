#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hyperrough/grid.hpp"
#include "hyperrough/model.hpp"

namespace hyperrough {

enum class Component { X, M };

// Terminal values (X_T, M_T) of a batch of paths. The limit process is
// tagged with hurst = -0.5.
struct SampleBatch {
    double hurst = 0.0;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<double, double>> pairs;

    void validate() const;  // throws DomainError if some X_T < 0
    std::vector<double> component(Component c) const;
};

// Sample mean with its standard error.
struct MeanEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t count = 0;
};

MeanEstimate mean_estimate(std::span<const double> values);

// (1/n) sum exp(i (u X_T + v M_T)); throws std::invalid_argument when empty.
std::complex<double> empirical_cf(const SampleBatch& batch, double u, double v);

struct HistogramDensity {
    std::vector<double> centers;
    std::vector<double> densities;
    double width = 0.0;
};

// Equal-width histogram over [min, max] of the samples, normalized so that
// sum(densities) * width = 1. Requires bins >= 10.
HistogramDensity histogram_density(const SampleBatch& batch, Component c, std::size_t bins);
HistogramDensity histogram_density(std::span<const double> samples, std::size_t bins);

// sup_y |F_n(y) - F(y)|. The reference cdf is called at nondecreasing
// arguments, so stateful sweeps such as IGCdfSweep are allowed.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);
double ks_distance(const SampleBatch& batch, Component c, const std::function<double(double)>& cdf);

// sup_y |F_n(y) - G_m(y)|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// Quantile c_alpha of the Kolmogorov distribution, P(K > c_alpha) = alpha.
double kolmogorov_quantile(double alpha);
// Asymptotic critical values c_alpha / sqrt(n) and c_alpha sqrt((n + m) / (n m)).
double ks_critical_value(double alpha, std::size_t n);
double ks_critical_value(double alpha, std::size_t n, std::size_t m);

// Distance from y to the closed interval spanned by a and b.
double interval_distance(double y, double a, double b);

// Oscillation moduli of a grid path read as its piecewise-constant cadlag
// extension. Suprema are taken over grid times, a lower bound for the
// continuous-time quantities.
struct ModulusReport {
    double delta = 0.0;
    double w = 0.0;                    // max(sup_t w'(t), v(0), v(T))
    std::vector<double> w_prime;       // w'(x, t_k, delta), k = 0..N
    double v_start = 0.0;              // v(x, 0, delta)
    double v_end = 0.0;                // v(x, T, delta)
    std::vector<std::pair<double, double>> levels;
    std::vector<std::size_t> up_crossings;  // one per entry of levels
};

// w'(x, t_k, delta) = sup d(x(t_2), [x(t_1), x(t_3)]) over grid times
// t_k - delta <= t_1 < t_2 < t_3 <= t_k + delta. With prefix and suffix
// extrema each t_k costs O(window). Throws std::invalid_argument unless
// 0 < delta < T and path.size() == grid.size().
ModulusReport oscillation_moduli(std::span<const double> path, const UniformGrid& grid,
                                 double delta,
                                 std::span<const std::pair<double, double>> levels = {});

// Largest k with t_1 < ... < t_{2k}, x(t_{2i-1}) < a and x(t_{2i}) > b.
// Single pass. Throws std::invalid_argument unless a < b.
std::size_t up_crossings(std::span<const double> path, double a, double b);

// sup_k |x_k|.
double sup_abs(std::span<const double> path);

// Running sums of X, M and their products at selected grid indices.
// Accumulators merge associatively; merging in a fixed order makes the result
// independent of how paths were split over threads.
class MomentAccumulator {
public:
    MomentAccumulator() = default;
    MomentAccumulator(double hurst, const UniformGrid& grid, std::vector<std::size_t> indices);

    void add(std::span<const double> x, std::span<const double> m);
    void merge(const MomentAccumulator& other);

    double hurst() const noexcept { return hurst_; }
    const UniformGrid& grid() const noexcept { return grid_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t count() const noexcept { return count_; }

    struct Sums {
        double x = 0.0, x2 = 0.0, m = 0.0, m2 = 0.0, m4 = 0.0, m2x = 0.0;
    };
    const std::vector<Sums>& sums() const noexcept { return sums_; }

private:
    double hurst_ = 0.0;
    UniformGrid grid_;
    std::vector<std::size_t> indices_;
    std::vector<Sums> sums_;
    std::size_t count_ = 0;
};

// n evenly spaced grid indices ending at N (n <= N).
std::vector<std::size_t> evenly_spaced_indices(const UniformGrid& grid, std::size_t n);

struct MomentEntry {
    double t = 0.0;
    MeanEstimate x;
    MeanEstimate m;
    double g0n = 0.0;
    // E[M_t^2] / (nu^2 E[X_t]) and its delta-method standard error.
    double qv_ratio = 0.0;
    double qv_ratio_stderr = 0.0;
    bool mean_m_ok = false;     // |E M_t| <= 3 SE
    bool qv_ok = false;         // |ratio - 1| <= 3 SE
    bool upper_bound_ok = false;  // E X_t <= G0^n(t) + 3 SE
};

struct MomentReport {
    double hurst = 0.0;
    std::size_t paths = 0;
    std::vector<MomentEntry> entries;

    bool all_ok() const;
};

// Per-time checks of E[M_t] = 0, E[M_t^2] = nu^2 E[X_t] and E[X_t] <= G0^n(t).
// The limit process (hurst = -0.5) is compared with G0(t) = g0 t.
MomentReport moment_checks(const MomentAccumulator& acc, const ModelParams& model);
std::vector<MomentReport> moment_checks(std::span<const MomentAccumulator> batches,
                                        const ModelParams& model);

// Relative spread (max - min) / min of the batch means of sup_t |M_t| across
// Hurst indices.
double relative_spread(std::span<const double> means);

}  // namespace hyperrough
