#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperrough/errors.hpp"
#include "hyperrough/special.hpp"

using namespace hyperrough;

TEST_CASE("Mittag-Leffler reduces to elementary functions") {
    CHECK(mittag_leffler(1.0, 1.0, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-13));
    CHECK(mittag_leffler(1.0, 1.0, -2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(mittag_leffler(2.0, 1.0, 4.0) == doctest::Approx(std::cosh(2.0)).epsilon(1e-13));
    CHECK(mittag_leffler(1.0, 2.0, 3.0) == doctest::Approx(std::expm1(3.0) / 3.0).epsilon(1e-13));
    CHECK(mittag_leffler(0.5, 0.5, 0.0) == doctest::Approx(0.5641895835477563).epsilon(1e-14));
}

TEST_CASE("Mittag-Leffler series at mpmath reference points") {
    // E_{1/2}(1) = e erfc(-1); the others summed with mpmath at 30 digits.
    CHECK(mittag_leffler(0.5, 1.0, 1.0) == doctest::Approx(5.008980080762283).epsilon(1e-12));
    CHECK(mittag_leffler(0.3, 1.0, -2.0) == doctest::Approx(0.29023222616787535).epsilon(1e-10));
    CHECK(mittag_leffler(0.7, 1.0, -5.0) == doctest::Approx(0.07756935776476981).epsilon(1e-8));
    CHECK(mittag_leffler(0.45, 0.45, 3.0) == doctest::Approx(830612.0753364330).epsilon(5e-12));
}

TEST_CASE("Mittag-Leffler series reports non-convergence") {
    CHECK_THROWS_AS(mittag_leffler(0.01, 0.01, 2.0), NumericalError);
    CHECK_THROWS_AS(mittag_leffler(0.05, 1.0, -30.0), NumericalError);
}

TEST_CASE("relaxation function matches closed forms") {
    // E_{1/2}(-x) = exp(x^2) erfc(x).
    CHECK(mittag_leffler_relaxation(0.5, 1.0) == doctest::Approx(0.42758357615580700).epsilon(1e-10));
    CHECK(mittag_leffler_relaxation(0.5, 3.0) == doctest::Approx(0.17900115118138995).epsilon(1e-10));
    CHECK(mittag_leffler_relaxation(1.0, 2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(mittag_leffler_relaxation(0.3, 0.0) == 1.0);
}

TEST_CASE("relaxation function agrees with the series where both work") {
    for (double a : {0.2, 0.45, 0.8}) {
        for (double x : {0.1, 0.7, 1.5}) {
            CHECK(mittag_leffler_relaxation(a, x) ==
                  doctest::Approx(mittag_leffler(a, 1.0, -x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("relaxation function is completely monotone in x") {
    for (double a : {0.01, 0.3, 0.9}) {
        double previous = 1.0;
        for (double x = 0.25; x < 50.0; x *= 1.7) {
            const double v = mittag_leffler_relaxation(a, x);
            CHECK(v > 0.0);
            CHECK(v < previous);
            previous = v;
        }
    }
    CHECK_THROWS_AS(mittag_leffler_relaxation(1.5, 1.0), DomainError);
    CHECK_THROWS_AS(mittag_leffler_relaxation(0.5, -1.0), DomainError);
}
