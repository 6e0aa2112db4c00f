#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperrough/errors.hpp"
#include "hyperrough/resolvent.hpp"
#include "hyperrough/riccati.hpp"

using namespace hyperrough;

TEST_CASE("limiting root at the defaults") {
    const ModelParams m;
    const auto tf = TestFunctionPair::constant(1.0, 0.5);
    const Complex psi = psi_limit(m, tf, 0.3);
    // Principal-root formula evaluated independently in Python.
    CHECK(psi.real() == doctest::Approx(-0.015814618370500355).epsilon(1e-13));
    CHECK(psi.imag() == doctest::Approx(0.09006076492611714).epsilon(1e-13));
    CHECK(std::abs(riccati_nonlinearity(0.3, psi, m, tf) - psi) < 1e-13);
}

TEST_CASE("limiting root is a nonpositive fixed point of F") {
    const ModelParams m;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        const auto tf = TestFunctionPair::constant(dist(rng), dist(rng) * 0.3);
        const Complex psi = psi_limit(m, tf, 0.0);
        CHECK(psi.real() <= 1e-12);
        CHECK(std::abs(riccati_nonlinearity(0.0, psi, m, tf) - psi) < 1e-11);
    }
}

TEST_CASE("zero test functions give the zero solution") {
    const ModelParams m;
    const auto zero = TestFunctionPair::constant(0.0, 0.0);
    const auto sol = solve_riccati(m, -0.3, zero, UniformGrid(1.0, 100));
    for (const auto& p : sol.psi) CHECK(std::abs(p) == 0.0);
    CHECK(std::abs(char_functional(m, -0.3, zero, UniformGrid(1.0, 100)) - 1.0) < 1e-15);
}

TEST_CASE("flat kernel reduces to the Riccati ODE") {
    // H = 1/2: psi' = F(t, psi), psi(0) = 0, integrated here with RK4.
    const ModelParams m;
    const auto tf = TestFunctionPair::constant(2.0, -0.7);
    Complex psi(0.0, 0.0);
    const int steps = 20000;
    const double dt = 1.0 / steps;
    for (int i = 0; i < steps; ++i) {
        const double t = i * dt;
        auto F = [&](double s, Complex u) { return riccati_nonlinearity(s, u, m, tf); };
        const Complex k1 = F(t, psi);
        const Complex k2 = F(t + dt / 2, psi + dt / 2 * k1);
        const Complex k3 = F(t + dt / 2, psi + dt / 2 * k2);
        const Complex k4 = F(t + dt, psi + dt * k3);
        psi += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const auto sol = solve_riccati(m, 0.5, tf, UniformGrid(1.0, 4000));
    CHECK(std::abs(sol.psi.back() - psi) < 1e-3 * std::abs(psi));
}

TEST_CASE("without vol of vol the functional is the CF of the deterministic mean") {
    ModelParams m;
    m.nu = 0.0;
    m.v0 = 0.05;
    for (double h : {-0.45, -0.1}) {
        const double mean = linear_mean_resolvent(m, h, 1.0);
        for (double u : {-4.0, 1.0, 7.0}) {
            const auto cf = char_functional(m, h, TestFunctionPair::constant(u, 0.0), UniformGrid(1.0, 4000));
            CHECK(std::abs(cf - std::exp(Complex(0.0, u * mean))) < 2e-3);
        }
    }
}

TEST_CASE("solution approaches the limiting root near -1/2") {
    const ModelParams m;
    const auto tf = TestFunctionPair::constant(1.0, 0.5);
    const auto sol = solve_riccati(m, -0.499, tf, UniformGrid(1.0, 2000));
    CHECK(std::abs(sol.psi.back() - psi_limit(m, tf, 1.0)) < 1e-3);
    for (const auto& p : sol.psi) CHECK(p.real() <= 1e-9);
}

TEST_CASE("functional modulus never exceeds one") {
    const ModelParams m;
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> fu(-10.0, 10.0), hv(-3.0, 3.0), hh(-0.49, 0.3);
    for (int i = 0; i < 20; ++i) {
        const auto tf = TestFunctionPair::constant(fu(rng), hv(rng));
        const double h = hh(rng);
        CHECK(std::abs(char_functional(m, h, tf, UniformGrid(1.0, 400))) <= 1.0 + 1e-9);
        CHECK(std::abs(char_functional_limit(m, tf)) <= 1.0 + 1e-9);
    }
}

TEST_CASE("limiting functional equals the shifted IG characteristic function") {
    const ModelParams m;
    for (double u = -3.0; u <= 3.0; u += 1.5) {
        for (double v = -3.0; v <= 3.0; v += 1.5) {
            const auto a = char_functional_limit(m, TestFunctionPair::constant(u, v));
            CHECK(std::abs(a - joint_cf_limit(m, u, v)) < 1e-10);
        }
    }
    CHECK(std::abs(joint_cf_limit(m, 0.0, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("functional gap shrinks along the Hurst ladder") {
    const ModelParams m;
    const auto tf = TestFunctionPair::constant(1.0, 0.5);
    const auto lim = char_functional_limit(m, tf);
    double previous = 1e300;
    for (double h : {-0.3, -0.4, -0.45, -0.49, -0.499}) {
        const double gap = std::abs(char_functional(m, h, tf, UniformGrid(1.0, 2000)) - lim);
        CHECK(gap < previous);
        previous = gap;
    }
}

TEST_CASE("time-dependent test functions are accepted") {
    const ModelParams m;
    const TestFunctionPair tf{[](double t) { return std::cos(3.0 * t); }, [](double t) { return 0.2 * t; }};
    const auto cf = char_functional(m, -0.2, tf, UniformGrid(1.0, 500));
    CHECK(std::abs(cf) <= 1.0);
    CHECK(std::abs(cf - char_functional(m, -0.2, tf, UniformGrid(1.0, 1000))) < 1e-2);
}
