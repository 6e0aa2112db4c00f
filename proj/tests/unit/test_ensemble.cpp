#include "doctest.h"
#include "hyperrough/ensemble.hpp"

using namespace hyperrough;

TEST_CASE("ensemble result does not depend on the thread count") {
    const ModelParams m;
    const UniformGrid g(1.0, 100);
    EnsembleOptions o;
    o.paths = 150;
    o.seed = 5;
    o.threads = 1;
    const auto one = run_ensemble(m, {-0.3, -0.49}, g, o);
    o.threads = 3;
    const auto three = run_ensemble(m, {-0.3, -0.49}, g, o);
    REQUIRE(one.processes.size() == 2);
    for (std::size_t h = 0; h < 2; ++h) {
        CHECK(one.processes[h].terminal.pairs == three.processes[h].terminal.pairs);
        CHECK(one.processes[h].sup_abs_m == three.processes[h].sup_abs_m);
        CHECK(one.processes[h].moments.sums()[0].m2 == three.processes[h].moments.sums()[0].m2);
    }
    CHECK(one.limit.terminal.pairs == three.limit.terminal.pairs);
    CHECK(one.limit.terminal.hurst == -0.5);
}

TEST_CASE("ensemble paths follow the stream-per-path convention") {
    const ModelParams m;
    const UniformGrid g(1.0, 50);
    EnsembleOptions o;
    o.paths = 70;
    o.seed = 9;
    const auto r = run_ensemble(m, {-0.2}, g, o);
    RandomStream s({9, 69});
    const auto run = simulate_coupled(m, std::vector<double>{-0.2}, g, s);
    CHECK(r.processes[0].terminal.pairs.back().first == run.paths[0].x.back());
    CHECK(r.processes[0].non_monotone_paths == 0);
    CHECK(r.limit.moments.count() == 70);
    for (double v : r.limit.sup_abs_residual) CHECK(v < 1e-12);
    o.paths = 0;
    CHECK_THROWS_AS(run_ensemble(m, {-0.2}, g, o), std::invalid_argument);
}
