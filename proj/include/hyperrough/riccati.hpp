#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyperrough/grid.hpp"
#include "hyperrough/model.hpp"

namespace hyperrough {

using Complex = std::complex<double>;

// Test functions f, h : [0, T] -> R of the joint characteristic functional
//   E exp(i int f(T - t) dX_t + i int h(T - t) dM_t).
struct TestFunctionPair {
    std::function<double(double)> f;
    std::function<double(double)> h;

    static TestFunctionPair constant(double f_value, double h_value);
};

// F(t, u) = i f(t) - nu^2 h(t)^2 / 2 + (i nu^2 h(t) - lambda) u + nu^2 u^2 / 2.
Complex riccati_nonlinearity(double t, Complex u, const ModelParams& model,
                             const TestFunctionPair& tf);

struct RiccatiSolution {
    UniformGrid grid;
    std::vector<Complex> psi;  // psi[0] = 0, Re psi <= 1e-9
};

// Solves psi(t) = int_0^t F(s, psi(s)) K(t - s) ds on the grid. Slab
// [t_j, t_{j+1}] carries F(t_{j+1}, psi_{j+1}) with exact weight w_{k-j}; the
// newest slab is implicit and, F being quadratic in u, each step solves
//   (w_1 nu^2 / 2) psi^2 + (w_1 (i nu^2 h - lambda) - 1) psi + (S + w_1 (i f - nu^2 h^2 / 2)) = 0
// in closed form, keeping the root that vanishes with the data (S is the
// history sum). Throws NumericalError when Re psi exceeds 1e-9.
RiccatiSolution solve_riccati(const ModelParams& model, double hurst, const TestFunctionPair& tf,
                              const UniformGrid& grid);

// Nonpositive-real-part fixed point psi = F(t, psi) (principal square root):
//   -i h + (1 + lambda)/nu^2 (1 - sqrt(1 - 2 i nu^2 (f + (1 + lambda) h) / (1 + lambda)^2)).
Complex psi_limit(const ModelParams& model, const TestFunctionPair& tf, double t);

// exp(int_0^T F(T - t, psi(T - t)) dG0^n(t)). dG0^n = (V0 + lambda theta t^h) dt
// is integrated exactly per slab against the slab mean of the F values.
Complex char_functional(const ModelParams& model, double hurst, const TestFunctionPair& tf,
                        const UniformGrid& grid);

// Same functional from an already solved psi.
Complex char_functional_from(const ModelParams& model, double hurst, const TestFunctionPair& tf,
                             const RiccatiSolution& solution);

// exp(g0 int_0^T psi_limit(t) dt) by adaptive quadrature.
Complex char_functional_limit(const ModelParams& model, const TestFunctionPair& tf);

// exp(phi(u + (1 + lambda) v) T - i v g0 T) with phi the exponent of the
// limiting IG process: the joint CF of (Y_T, (1 + lambda) Y_T - g0 T).
Complex joint_cf_limit(const ModelParams& model, double u, double v);

}  // namespace hyperrough
