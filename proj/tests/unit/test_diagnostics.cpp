#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hyperrough/diagnostics.hpp"
#include "hyperrough/errors.hpp"
#include "hyperrough/inverse_gaussian.hpp"

using namespace hyperrough;

namespace {

SampleBatch random_batch(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> ex(10.0);
    std::normal_distribution<double> nm(0.0, 0.3);
    SampleBatch b;
    for (std::size_t i = 0; i < n; ++i) b.pairs.emplace_back(ex(rng), nm(rng));
    return b;
}

std::vector<double> indicator_path(const UniformGrid& g, double from, double to) {
    std::vector<double> x(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) x[k] = (g.time(k) >= from && g.time(k) < to) ? 1.0 : 0.0;
    return x;
}

}  // namespace

TEST_CASE("empirical CF basics") {
    const auto b = random_batch(500, 1);
    CHECK(empirical_cf(b, 0.0, 0.0) == std::complex<double>(1.0, 0.0));
    const auto a = empirical_cf(b, 2.0, -1.0);
    const auto c = empirical_cf(b, -2.0, 1.0);
    CHECK(a.real() == doctest::Approx(c.real()));
    CHECK(a.imag() == doctest::Approx(-c.imag()));
    CHECK(std::abs(a) <= 1.0);
    CHECK_THROWS_AS(empirical_cf(SampleBatch{}, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("batch components and validation") {
    SampleBatch b;
    b.pairs = {{0.1, -0.2}, {0.3, 0.4}};
    CHECK(b.component(Component::X) == std::vector<double>{0.1, 0.3});
    CHECK(b.component(Component::M) == std::vector<double>{-0.2, 0.4});
    CHECK_NOTHROW(b.validate());
    b.pairs.emplace_back(-1e-3, 0.0);
    CHECK_THROWS_AS(b.validate(), DomainError);
}

TEST_CASE("histogram is a normalized density") {
    const auto b = random_batch(10000, 2);
    for (Component c : {Component::X, Component::M}) {
        const auto h = histogram_density(b, c, 37);
        double mass = 0.0;
        for (double d : h.densities) mass += d * h.width;
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(h.centers.size() == 37);
    }
    CHECK_THROWS_AS(histogram_density(b, Component::X, 9), std::invalid_argument);
    const std::vector<double> same(5, 2.0);
    const auto h = histogram_density(same, 10);
    double mass = 0.0;
    for (double d : h.densities) mass += d * h.width;
    CHECK(mass == doctest::Approx(1.0));
}

TEST_CASE("histogram of IG samples approaches the density in L1") {
    const IGParams p{0.1, 1.21};
    RandomStream s({17, 0});
    std::vector<double> xs(100000);
    for (auto& x : xs) x = ig_sample(p, s);
    const auto h = histogram_density(xs, 100);
    double l1 = 0.0;
    for (std::size_t i = 0; i < h.centers.size(); ++i) {
        const double lo = h.centers[i] - 0.5 * h.width;
        const double exact = (ig_cdf(p, lo + h.width) - ig_cdf(p, lo)) / h.width;
        l1 += std::abs(h.densities[i] - exact) * h.width;
    }
    CHECK(l1 <= 0.05);
}

TEST_CASE("Kolmogorov quantiles match scipy") {
    CHECK(kolmogorov_quantile(0.01) == doctest::Approx(1.6276236115189504).epsilon(1e-10));
    CHECK(kolmogorov_quantile(0.05) == doctest::Approx(1.3580986393225507).epsilon(1e-10));
    CHECK(ks_critical_value(0.01, 10000) == doctest::Approx(0.016276236115189504).epsilon(1e-10));
    CHECK(ks_critical_value(0.01, 100, 100) == doctest::Approx(1.6276236115189504 * std::sqrt(0.02)).epsilon(1e-10));
    CHECK_THROWS_AS(kolmogorov_quantile(1.0), std::invalid_argument);
}

TEST_CASE("KS statistics on known samples") {
    const std::vector<double> u{0.1, 0.2, 0.3, 0.4};
    // Uniform cdf: max over i of max(i/n - x_i, x_i - (i-1)/n) = 1 - 0.4.
    CHECK(ks_distance(u, [](double x) { return x; }) == doctest::Approx(0.6));
    CHECK(ks_two_sample(u, u) == 0.0);
    const std::vector<double> shifted{10.0, 11.0};
    CHECK(ks_two_sample(u, shifted) == 1.0);
    CHECK_THROWS_AS(ks_two_sample(u, std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("KS of a sample against its own law stays below the 1% critical value") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif;
    std::vector<double> xs(10000);
    for (auto& x : xs) x = unif(rng);
    CHECK(ks_distance(xs, [](double x) { return x; }) < ks_critical_value(0.01, xs.size()));
}

TEST_CASE("interval distance") {
    CHECK(interval_distance(0.5, 0.0, 1.0) == 0.0);
    CHECK(interval_distance(1.5, 1.0, 0.0) == 0.5);
    CHECK(interval_distance(-2.0, 0.0, 1.0) == 2.0);
}

TEST_CASE("monotone paths have vanishing w prime") {
    const UniformGrid g(1.0, 200);
    std::vector<double> x(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) x[k] = std::sqrt(g.time(k));
    const auto r = oscillation_moduli(x, g, 0.1);
    for (double w : r.w_prime) CHECK(w == 0.0);
    CHECK(r.v_start == doctest::Approx(std::sqrt(0.1)));
    CHECK(r.w == doctest::Approx(r.v_start));
}

TEST_CASE("a single jump has zero M1 modulus") {
    const UniformGrid g(1.0, 1000);
    const auto x = indicator_path(g, 0.5, 2.0);
    const auto r = oscillation_moduli(x, g, 0.05);
    for (double w : r.w_prime) CHECK(w == 0.0);
    CHECK(r.v_start == 0.0);
    CHECK(r.v_end == 0.0);
    CHECK(r.w == 0.0);
}

TEST_CASE("a narrow spike has w prime one at its centre") {
    const UniformGrid g(1.0, 1000);
    const int n = 20;
    const auto x = indicator_path(g, 0.5 - 1.0 / n, 0.5 + 1.0 / n);
    const auto wide = oscillation_moduli(x, g, 2.0 / n + 0.01);
    CHECK(wide.w_prime[500] == 1.0);
    CHECK(wide.w == 1.0);
    // Too narrow a window cannot see both sides of the spike.
    const auto narrow = oscillation_moduli(x, g, 0.5 / n);
    CHECK(narrow.w_prime[500] == 0.0);
}

TEST_CASE("oscillation_moduli argument checks") {
    const UniformGrid g(1.0, 10);
    const std::vector<double> x(g.size(), 0.0);
    CHECK_THROWS_AS(oscillation_moduli(x, g, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(oscillation_moduli(x, g, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(oscillation_moduli(std::vector<double>(3, 0.0), g, 0.1), std::invalid_argument);
}

TEST_CASE("up-crossings on constructed paths") {
    for (std::size_t m : {0, 1, 2, 7, 40}) {
        std::vector<double> saw{0.5};
        for (std::size_t i = 0; i < m; ++i) {
            saw.push_back(0.0);
            saw.push_back(0.5);
            saw.push_back(1.0);
        }
        CHECK(up_crossings(saw, 0.2, 0.8) == m);
    }
    CHECK(up_crossings(std::vector<double>(20, 0.3), 0.2, 0.8) == 0);
    CHECK(up_crossings(std::vector<double>{0.0, 0.1, 0.5, 0.9, 1.0}, 0.2, 0.8) == 1);
    // Touching a level does not count: strict inequalities.
    CHECK(up_crossings(std::vector<double>{0.2, 0.8, 0.2, 0.8}, 0.2, 0.8) == 0);
    CHECK_THROWS_AS(up_crossings(std::vector<double>{0.0}, 1.0, 1.0), std::invalid_argument);
    const UniformGrid g(1.0, 4);
    const std::vector<std::pair<double, double>> levels{{0.2, 0.8}};
    const auto r = oscillation_moduli(std::vector<double>{0.0, 1.0, 0.0, 1.0, 0.0}, g, 0.3, levels);
    REQUIRE(r.up_crossings.size() == 1);
    CHECK(r.up_crossings[0] == 2);
}

TEST_CASE("moment accumulator merges like a single pass") {
    const UniformGrid g(1.0, 4);
    const auto idx = evenly_spaced_indices(g, 2);
    CHECK(idx == std::vector<std::size_t>{2, 4});
    MomentAccumulator all(-0.3, g, idx), a(-0.3, g, idx), b(-0.3, g, idx);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unif;
    for (int p = 0; p < 10; ++p) {
        std::vector<double> x(g.size()), m(g.size());
        for (auto& v : x) v = unif(rng);
        for (auto& v : m) v = unif(rng) - 0.5;
        all.add(x, m);
        (p < 4 ? a : b).add(x, m);
    }
    a.merge(b);
    CHECK(a.count() == 10);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        CHECK(a.sums()[i].x == doctest::Approx(all.sums()[i].x));
        CHECK(a.sums()[i].m4 == doctest::Approx(all.sums()[i].m4));
    }
    CHECK_THROWS_AS(a.merge(MomentAccumulator(-0.3, g, {1})), std::invalid_argument);
}

TEST_CASE("moment checks on exact-identity synthetic data") {
    // M = +-sqrt(X) with a fair sign: E[M] = 0 and E[M^2] = E[X] exactly.
    const ModelParams m;
    const UniformGrid g(1.0, 2);
    MomentAccumulator acc(-0.3, g, {2});
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> unif(0.0, 0.1);
    for (int p = 0; p < 2000; ++p) {
        const double x = unif(rng);
        const double sign = p % 2 == 0 ? 1.0 : -1.0;
        acc.add(std::vector<double>{0.0, x / 2, x}, std::vector<double>{0.0, 0.0, sign * std::sqrt(x)});
    }
    const auto report = moment_checks(acc, m);
    REQUIRE(report.entries.size() == 1);
    const auto& e = report.entries[0];
    CHECK(e.qv_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.g0n == doctest::Approx(g0n_eval(m, -0.3, 1.0)));
    CHECK(e.mean_m_ok);
    CHECK(e.qv_ok);
    CHECK(e.upper_bound_ok);
    CHECK(report.all_ok());
    CHECK_THROWS_AS(moment_checks(MomentAccumulator(-0.3, g, {2}), m), std::invalid_argument);
}

TEST_CASE("moment checks flag a broken identity") {
    const ModelParams m;
    const UniformGrid g(1.0, 1);
    MomentAccumulator acc(-0.3, g, {1});
    for (int p = 0; p < 1000; ++p) {
        const double sign = p % 2 == 0 ? 1.0 : -1.0;
        acc.add(std::vector<double>{0.0, 0.1 + 0.001 * (p % 7)}, std::vector<double>{0.0, sign * 0.6});
    }
    CHECK_FALSE(moment_checks(acc, m).entries[0].qv_ok);
}

TEST_CASE("sup norm, spreads and mean estimates") {
    CHECK(sup_abs(std::vector<double>{0.1, -0.7, 0.3}) == 0.7);
    CHECK(relative_spread(std::vector<double>{1.0, 1.1, 0.9}) == doctest::Approx(0.2 / 0.9));
    CHECK_THROWS_AS(relative_spread(std::vector<double>{}), std::invalid_argument);
    const auto e = mean_estimate(std::vector<double>{1.0, 2.0, 3.0});
    CHECK(e.mean == 2.0);
    CHECK(e.stderr_ == doctest::Approx(std::sqrt(1.0 / 3.0)));
}
