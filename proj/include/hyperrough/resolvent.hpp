#pragma once

#include <vector>

#include "hyperrough/grid.hpp"
#include "hyperrough/kernel.hpp"
#include "hyperrough/model.hpp"

namespace hyperrough {

// Resolvent R of alpha*K, i.e. the solution of (alpha K * R) = R - alpha K:
//   R(t) = alpha h Gamma(h) t^{h-1} E_{h,h}(alpha h Gamma(h) t^h),  alpha >= 0.
// Nonnegative. Throws DomainError for t <= 0 or alpha < 0, NumericalError when
// the Mittag-Leffler series does not converge.
double resolvent_eval(const FractionalKernel& k, double alpha, double t);

// int_0^t R(s) ds = E_h(alpha Gamma(h+1) t^h) - 1.
double resolvent_integral(const FractionalKernel& k, double alpha, double t);

struct ResolventResidual {
    double max_abs = 0.0;        // max over interior grid points
    std::size_t argmax = 0;      // grid index attaining it
};

// Self-test of the resolvent identity on the interior grid points t_1..t_{N-1}:
//   | (alpha K * R)(t_k) - (R(t_k) - alpha K(t_k)) |.
// The convolution is product-integrated with exact kernel slab weights; R is
// taken at slab midpoints, except on the first slab where its t^{h-1}
// singularity is integrated exactly through resolvent_integral.
ResolventResidual resolvent_residual(const FractionalKernel& k, double alpha,
                                     const UniformGrid& grid);

// Solution m(t) of the linear Volterra equation m = G0^n - lambda (K * m),
// i.e. G0^n minus the resolvent of lambda K convolved with G0^n. In Laplace
// space K^(s) = Gamma(h+1) s^{-h}, so with c = lambda Gamma(h+1)
//   m^(s) = (V0 s^{-2} + lambda theta Gamma(h+1) s^{-h-2}) s^h / (s^h + c),
// which is inverted on a fixed Talbot contour (accuracy near 1e-10).
double linear_mean_resolvent(const ModelParams& model, double hurst, double t);

// The same m(t) in the time domain: integrating G0^n - (R * G0^n) by parts
// with the relaxation e(u) = E_h(-c u^h) gives m(t) = int_0^t e(u) dG0^n(t - u),
// evaluated by adaptive quadrature over mittag_leffler_relaxation. Slow
// (seconds); kept as an independent check of the Laplace route.
double linear_mean_relaxation(const ModelParams& model, double hurst, double t);

// Same equation solved by implicit right-point product integration on the
// grid: m_k = G0^n(t_k) - lambda sum_{j=1}^{k} m_j w_{k+1-j}.
std::vector<double> linear_mean_product_integration(const ModelParams& model, double hurst,
                                                    const UniformGrid& grid);

}  // namespace hyperrough
