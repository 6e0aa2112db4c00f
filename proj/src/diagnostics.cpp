#include "hyperrough/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperrough/errors.hpp"

namespace hyperrough {

void SampleBatch::validate() const {
    for (const auto& [x, m] : pairs) {
        if (!(x >= 0.0)) throw DomainError("SampleBatch: X_T must be nonnegative");
    }
}

std::vector<double> SampleBatch::component(Component c) const {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& [x, m] : pairs) out.push_back(c == Component::X ? x : m);
    return out;
}

MeanEstimate mean_estimate(std::span<const double> values) {
    MeanEstimate out;
    out.count = values.size();
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        const double n = static_cast<double>(values.size());
        out.stderr_ = std::sqrt(ss / (n - 1.0) / n);
    }
    return out;
}

std::complex<double> empirical_cf(const SampleBatch& batch, double u, double v) {
    if (batch.pairs.empty()) throw std::invalid_argument("empirical_cf: empty batch");
    double re = 0.0;
    double im = 0.0;
    for (const auto& [x, m] : batch.pairs) {
        const double phase = u * x + v * m;
        re += std::cos(phase);
        im += std::sin(phase);
    }
    const double n = static_cast<double>(batch.pairs.size());
    return {re / n, im / n};
}

HistogramDensity histogram_density(std::span<const double> samples, std::size_t bins) {
    if (bins < 10) throw std::invalid_argument("histogram_density: bins must be >= 10");
    if (samples.empty()) throw std::invalid_argument("histogram_density: empty sample");
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (hi <= lo) {
        // Degenerate sample: spread one unit of mass over a unit-width range.
        lo -= 0.5;
        hi += 0.5;
    }
    HistogramDensity out;
    out.width = (hi - lo) / static_cast<double>(bins);
    std::vector<std::size_t> counts(bins, 0);
    for (double s : samples) {
        auto b = static_cast<std::size_t>((s - lo) / out.width);
        counts[std::min(b, bins - 1)] += 1;
    }
    const double norm = 1.0 / (static_cast<double>(samples.size()) * out.width);
    out.centers.resize(bins);
    out.densities.resize(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out.centers[b] = lo + (static_cast<double>(b) + 0.5) * out.width;
        out.densities[b] = static_cast<double>(counts[b]) * norm;
    }
    return out;
}

HistogramDensity histogram_density(const SampleBatch& batch, Component c, std::size_t bins) {
    const auto values = batch.component(c);
    return histogram_density(values, bins);
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return std::clamp(d, 0.0, 1.0);
}

double ks_distance(const SampleBatch& batch, Component c, const std::function<double(double)>& cdf) {
    const auto values = batch.component(c);
    return ks_distance(values, cdf);
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double y = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == y) ++i;
        while (j < sb.size() && sb[j] == y) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double kolmogorov_quantile(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("kolmogorov_quantile: alpha must lie in (0, 1)");
    }
    auto survival = [](double c) {
        double s = 0.0;
        for (int k = 1; k <= 200; ++k) {
            const double term = std::exp(-2.0 * k * k * c * c);
            s += (k % 2 == 1 ? term : -term);
            if (term < 1e-18) break;
        }
        return 2.0 * s;
    };
    double lo = 0.3;
    double hi = 10.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (survival(mid) > alpha ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ks_critical_value(double alpha, std::size_t n) {
    return kolmogorov_quantile(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_value(double alpha, std::size_t n, std::size_t m) {
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    return kolmogorov_quantile(alpha) * std::sqrt((dn + dm) / (dn * dm));
}

double interval_distance(double y, double a, double b) {
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    return std::max({0.0, lo - y, y - hi});
}

ModulusReport oscillation_moduli(std::span<const double> path, const UniformGrid& grid,
                                 double delta,
                                 std::span<const std::pair<double, double>> levels) {
    if (path.size() != grid.size()) {
        throw std::invalid_argument("oscillation_moduli: path does not match the grid");
    }
    if (!(delta > 0.0)) throw std::invalid_argument("oscillation_moduli: delta must be positive");
    if (delta >= grid.horizon()) {
        throw std::invalid_argument("oscillation_moduli: delta must be smaller than T");
    }
    const std::size_t n = grid.steps();
    // Grid offsets within delta; the slack absorbs rounding in delta / dt.
    const auto reach = static_cast<std::size_t>(std::floor(delta / grid.dt() * (1.0 + 1e-12) + 1e-9));

    ModulusReport out;
    out.delta = delta;
    out.w_prime.assign(n + 1, 0.0);

    std::vector<double> pre_min, pre_max, suf_min, suf_max;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t lo = k >= reach ? k - reach : 0;
        const std::size_t hi = std::min(n, k + reach);
        const std::size_t len = hi - lo + 1;
        if (len < 3) continue;
        pre_min.assign(len, 0.0);
        pre_max.assign(len, 0.0);
        suf_min.assign(len, 0.0);
        suf_max.assign(len, 0.0);
        pre_min[0] = pre_max[0] = path[lo];
        for (std::size_t i = 1; i < len; ++i) {
            pre_min[i] = std::min(pre_min[i - 1], path[lo + i]);
            pre_max[i] = std::max(pre_max[i - 1], path[lo + i]);
        }
        suf_min[len - 1] = suf_max[len - 1] = path[hi];
        for (std::size_t i = len - 1; i-- > 0;) {
            suf_min[i] = std::min(suf_min[i + 1], path[lo + i]);
            suf_max[i] = std::max(suf_max[i + 1], path[lo + i]);
        }
        double best = 0.0;
        for (std::size_t i = 1; i + 1 < len; ++i) {
            const double y = path[lo + i];
            // Over t_1 < t_2 < t_3: the interval end closest below/above y.
            const double above = y - std::max(pre_min[i - 1], suf_min[i + 1]);
            const double below = std::min(pre_max[i - 1], suf_max[i + 1]) - y;
            best = std::max({best, above, below});
        }
        out.w_prime[k] = best;
    }

    auto oscillation = [&](std::size_t lo, std::size_t hi) {
        const auto [mn, mx] = std::minmax_element(path.begin() + static_cast<std::ptrdiff_t>(lo),
                                                  path.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
        return *mx - *mn;
    };
    out.v_start = oscillation(0, std::min(n, reach));
    out.v_end = oscillation(n >= reach ? n - reach : 0, n);
    out.w = std::max({*std::max_element(out.w_prime.begin(), out.w_prime.end()), out.v_start,
                      out.v_end});

    out.levels.assign(levels.begin(), levels.end());
    for (const auto& [a, b] : levels) out.up_crossings.push_back(up_crossings(path, a, b));
    return out;
}

std::size_t up_crossings(std::span<const double> path, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("up_crossings: requires a < b");
    std::size_t count = 0;
    bool below = false;
    for (double x : path) {
        if (!below) {
            below = x < a;
        } else if (x > b) {
            ++count;
            below = false;
        }
    }
    return count;
}

double sup_abs(std::span<const double> path) {
    double s = 0.0;
    for (double x : path) s = std::max(s, std::abs(x));
    return s;
}

MomentAccumulator::MomentAccumulator(double hurst, const UniformGrid& grid,
                                     std::vector<std::size_t> indices)
    : hurst_(hurst), grid_(grid), indices_(std::move(indices)), sums_(indices_.size()) {
    for (std::size_t k : indices_) {
        if (k > grid_.steps()) throw std::invalid_argument("MomentAccumulator: index beyond grid");
    }
}

void MomentAccumulator::add(std::span<const double> x, std::span<const double> m) {
    if (x.size() != grid_.size() || m.size() != grid_.size()) {
        throw std::invalid_argument("MomentAccumulator: path does not match the grid");
    }
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        const double xv = x[indices_[i]];
        const double mv = m[indices_[i]];
        Sums& s = sums_[i];
        s.x += xv;
        s.x2 += xv * xv;
        s.m += mv;
        s.m2 += mv * mv;
        s.m4 += mv * mv * mv * mv;
        s.m2x += mv * mv * xv;
    }
    ++count_;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
    if (other.indices_ != indices_ || !(other.grid_ == grid_)) {
        throw std::invalid_argument("MomentAccumulator: incompatible merge");
    }
    for (std::size_t i = 0; i < sums_.size(); ++i) {
        sums_[i].x += other.sums_[i].x;
        sums_[i].x2 += other.sums_[i].x2;
        sums_[i].m += other.sums_[i].m;
        sums_[i].m2 += other.sums_[i].m2;
        sums_[i].m4 += other.sums_[i].m4;
        sums_[i].m2x += other.sums_[i].m2x;
    }
    count_ += other.count_;
}

std::vector<std::size_t> evenly_spaced_indices(const UniformGrid& grid, std::size_t n) {
    const std::size_t steps = grid.steps();
    if (n == 0 || n > steps) throw std::invalid_argument("evenly_spaced_indices: bad count");
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (i + 1) * steps / n;
    return out;
}

bool MomentReport::all_ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const MomentEntry& e) {
        return e.mean_m_ok && e.qv_ok && e.upper_bound_ok;
    });
}

MomentReport moment_checks(const MomentAccumulator& acc, const ModelParams& model) {
    if (acc.count() < 2) throw std::invalid_argument("moment_checks: need at least two paths");
    const double n = static_cast<double>(acc.count());
    const double nu2 = model.nu * model.nu;
    const bool limit = acc.hurst() <= -0.5;
    MomentReport report{acc.hurst(), acc.count(), {}};
    for (std::size_t i = 0; i < acc.indices().size(); ++i) {
        const auto& s = acc.sums()[i];
        MomentEntry e;
        e.t = acc.grid().time(acc.indices()[i]);
        const double ex = s.x / n;
        const double em = s.m / n;
        const double em2 = s.m2 / n;
        const double var_x = std::max(0.0, (s.x2 / n - ex * ex) * n / (n - 1.0));
        const double var_m = std::max(0.0, (em2 - em * em) * n / (n - 1.0));
        const double var_m2 = std::max(0.0, (s.m4 / n - em2 * em2) * n / (n - 1.0));
        const double cov_m2x = (s.m2x / n - em2 * ex) * n / (n - 1.0);
        e.x = {ex, std::sqrt(var_x / n), acc.count()};
        e.m = {em, std::sqrt(var_m / n), acc.count()};
        e.g0n = limit ? g0_limit_eval(model, e.t) : g0n_eval(model, acc.hurst(), e.t);

        const double b = nu2 * ex;
        if (b > 0.0) {
            e.qv_ratio = em2 / b;
            const double var_ratio = (var_m2 / (b * b) - 2.0 * em2 * nu2 * cov_m2x / (b * b * b) +
                                      em2 * em2 * nu2 * nu2 * var_x / (b * b * b * b)) / n;
            e.qv_ratio_stderr = std::sqrt(std::max(0.0, var_ratio));
            e.qv_ok = std::abs(e.qv_ratio - 1.0) <= 3.0 * e.qv_ratio_stderr;
        } else {
            // nu = 0 or X = 0: M vanishes identically.
            e.qv_ratio = em2 == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
            e.qv_ok = em2 == 0.0;
        }
        e.mean_m_ok = std::abs(em) <= 3.0 * e.m.stderr_;
        e.upper_bound_ok = ex <= e.g0n + 3.0 * e.x.stderr_;
        report.entries.push_back(e);
    }
    return report;
}

std::vector<MomentReport> moment_checks(std::span<const MomentAccumulator> batches,
                                        const ModelParams& model) {
    std::vector<MomentReport> out;
    out.reserve(batches.size());
    for (const auto& acc : batches) out.push_back(moment_checks(acc, model));
    return out;
}

double relative_spread(std::span<const double> means) {
    if (means.empty()) throw std::invalid_argument("relative_spread: empty input");
    const auto [mn, mx] = std::minmax_element(means.begin(), means.end());
    if (!(*mn > 0.0)) throw std::invalid_argument("relative_spread: means must be positive");
    return (*mx - *mn) / *mn;
}

}  // namespace hyperrough
