#include "hyperrough/model.hpp"

#include <cmath>

#include "hyperrough/errors.hpp"

namespace hyperrough {

void ModelParams::validate() const {
    auto check = [](const char* name, double value, bool ok) {
        if (!std::isfinite(value) || !ok) {
            throw ConfigError(name, "invalid value " + std::to_string(value));
        }
    };
    check("v0", v0, v0 >= 0.0);
    check("lambda", lambda, lambda >= 0.0);
    check("theta", theta, theta >= 0.0);
    check("nu", nu, true);
    check("T", horizon, horizon > 0.0);
}

double g0n_eval(const ModelParams& model, double hurst, double t) {
    if (!(hurst > -0.5)) {
        throw DomainError("g0n_eval: Hurst index must exceed -1/2");
    }
    if (t < 0.0) {
        throw DomainError("g0n_eval: negative time");
    }
    if (t == 0.0) return 0.0;
    const double p = hurst + 1.5;
    return model.v0 * t + model.lambda * model.theta * std::pow(t, p) / p;
}

}  // namespace hyperrough
