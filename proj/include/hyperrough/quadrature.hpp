#pragma once

#include <cstddef>
#include <functional>

namespace hyperrough::quad {

struct Result {
    double value;
    double error_estimate;
};

// Globally adaptive 61-point Gauss-Kronrod on [a, b]: the panel with the
// largest error estimate is bisected until the summed estimate drops below
// tolerance * |value| or max_panels is reached. Either limit may be infinite.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double tolerance = 1e-10, std::size_t max_panels = 4000);

// Value only.
double integral(const std::function<double(double)>& f, double a, double b,
                double tolerance = 1e-10);

}  // namespace hyperrough::quad
