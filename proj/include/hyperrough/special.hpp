#pragma once

#include <cstddef>

namespace hyperrough {

struct MittagLefflerOptions {
    double tolerance = 1e-12;
    std::size_t max_terms = 500;
};

// Two-parameter Mittag-Leffler function E_{a,b}(z) = sum_k z^k / Gamma(a k + b)
// by direct summation. The stopping test is relative to max(1, |sum|).
// Throws NumericalError when the cap is hit, when the sum overflows, or when
// alternating terms cancel below the requested accuracy; the message names
// (a, b, z) and the last term.
double mittag_leffler(double a, double b, double z, const MittagLefflerOptions& options = {});

// E_a(-x) = E_{a,1}(-x) for 0 < a <= 1, x >= 0, from the completely monotone
// spectral representation
//   E_a(-x) = sin(pi a)/(pi a) int_0^inf exp(-r^{1/a}) x / (r^2 + 2 x r cos(pi a) + x^2) dr.
// Stays accurate where the power series cancels catastrophically (small a,
// large x). a = 1 returns exp(-x).
double mittag_leffler_relaxation(double a, double x);

}  // namespace hyperrough
