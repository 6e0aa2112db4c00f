#include "hyperrough/quadrature.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hyperrough::quad {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
    double error = 0.0;
    const double value = Rule::integrate(f, a, b, 0, 0.0, &error);
    // Boost reports the non-adaptive error on the reference interval [-1, 1];
    // rescale it to the panel.
    return {a, b, value, error * 0.5 * (b - a)};
}

Result adapt(const std::function<double(double)>& f, double a, double b, double tolerance,
             std::size_t max_panels) {
    std::priority_queue<Panel> panels;
    panels.push(make_panel(f, a, b));
    double value = panels.top().value;
    double error = panels.top().error;
    while (panels.size() < max_panels && error > tolerance * std::abs(value)) {
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
        panels.pop();
        const Panel left = make_panel(f, worst.a, mid);
        const Panel right = make_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    // Re-sum to shed the cancellation accumulated by the running updates.
    value = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    return {value, error};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, double tolerance,
                 std::size_t max_panels) {
    if (a == b) return {0.0, 0.0};
    if (a > b) {
        const Result r = integrate(f, b, a, tolerance, max_panels);
        return {-r.value, r.error_estimate};
    }
    const bool lower_inf = std::isinf(a);
    const bool upper_inf = std::isinf(b);
    if (lower_inf && upper_inf) {
        // y = s / (1 - s^2) on (-1, 1).
        auto g = [&f](double s) {
            const double d = 1.0 - s * s;
            return f(s / d) * (1.0 + s * s) / (d * d);
        };
        return adapt(g, -1.0, 1.0, tolerance, max_panels);
    }
    if (upper_inf) {
        // y = a + s / (1 - s) on [0, 1).
        auto g = [&f, a](double s) {
            const double d = 1.0 - s;
            return f(a + s / d) / (d * d);
        };
        return adapt(g, 0.0, 1.0, tolerance, max_panels);
    }
    if (lower_inf) {
        auto g = [&f, b](double s) {
            const double d = 1.0 - s;
            return f(b - s / d) / (d * d);
        };
        return adapt(g, 0.0, 1.0, tolerance, max_panels);
    }
    return adapt(f, a, b, tolerance, max_panels);
}

double integral(const std::function<double(double)>& f, double a, double b, double tolerance) {
    return integrate(f, a, b, tolerance).value;
}

}  // namespace hyperrough::quad
