#include "hyperrough/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "hyperrough/errors.hpp"
#include "hyperrough/quadrature.hpp"

namespace hyperrough {

namespace {

[[noreturn]] void fail(const char* why, double a, double b, double z, std::size_t k, double term) {
    std::ostringstream os;
    os.precision(17);
    os << "mittag_leffler(" << a << ", " << b << ", " << z << "): " << why << " after " << k
       << " terms (last term " << term << ")";
    throw NumericalError(os.str());
}

}  // namespace

double mittag_leffler(double a, double b, double z, const MittagLefflerOptions& options) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("mittag_leffler: need a > 0 and b > 0");
    }
    if (z == 0.0) return 1.0 / std::tgamma(b);

    const double log_abs_z = std::log(std::abs(z));
    const bool alternating = z < 0.0;
    double sum = 0.0;
    double largest = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < options.max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const double magnitude = std::exp(kk * log_abs_z - std::lgamma(a * kk + b));
        const double term = (alternating && (k % 2 == 1)) ? -magnitude : magnitude;
        sum += term;
        largest = std::max(largest, magnitude);
        if (!std::isfinite(sum)) fail("sum overflowed", a, b, z, k + 1, term);

        const double scale = std::max(1.0, std::abs(sum));
        if (k > 0 && magnitude < previous && magnitude <= options.tolerance * scale) {
            // Rounding left behind by the largest term must also be below tolerance.
            if (largest * std::numeric_limits<double>::epsilon() > options.tolerance * scale) {
                fail("catastrophic cancellation", a, b, z, k + 1, term);
            }
            return sum;
        }
        previous = magnitude;
    }
    fail("no convergence within the term cap", a, b, z, options.max_terms, previous);
}

double mittag_leffler_relaxation(double a, double x) {
    if (!(a > 0.0) || !(a <= 1.0)) {
        throw DomainError("mittag_leffler_relaxation: need 0 < a <= 1");
    }
    if (!(x >= 0.0)) {
        throw DomainError("mittag_leffler_relaxation: need x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (a == 1.0) return std::exp(-x);

    const double pi = std::numbers::pi;
    const double c = std::cos(pi * a);
    const double prefactor = std::sin(pi * a) / (pi * a);
    const double inv_a = 1.0 / a;
    auto integrand = [&](double r) {
        const double cutoff = r > 0.0 ? std::exp(-std::pow(r, inv_a)) : 1.0;
        return cutoff * x / (r * r + 2.0 * x * r * c + x * x);
    };
    // exp(-r^{1/a}) < 1e-26 beyond r_max; the Cauchy-like factor peaks near r = x.
    const double r_max = std::pow(60.0, a);
    std::vector<double> breaks{0.0, std::min(1.0, r_max), r_max};
    if (x < r_max) breaks.push_back(x);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        total += quad::integral(integrand, breaks[i], breaks[i + 1], 1e-12);
    }
    return prefactor * total;
}

}  // namespace hyperrough
