#include <doctest.h>

#include <chrono>
#include <cmath>

#include "forestcc/dense_oracle.hpp"
#include "forestcc/jlt.hpp"
#include "helpers.hpp"

using namespace forestcc;

TEST_CASE("system count") {
    CHECK(compute_q(0.3, 100) == static_cast<count>(std::ceil(std::log(100.0) / 0.09)));
    CHECK(compute_q(0.1, 2000) == static_cast<count>(std::ceil(std::log(2000.0) / 0.01)));
    CHECK_THROWS_AS(compute_q(0.3, 1), std::invalid_argument);
}

TEST_CASE("3-star resistances are estimated around 1") {
    // r(u_star, v) = 1 exactly for the edgeless pair; with q = 200 the
    // estimate lands within 0.25 for at least 90% of seeds
    JltConfig cfg;
    cfg.q_override = 200;
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        const DiagResult dr = jlt_diag(test::edgeless(2), 1.0, cfg);
        CHECK(dr.samples == 200);
        if (std::abs(dr.diag(0) - 1.0) <= 0.25 && std::abs(dr.diag(1) - 1.0) <= 0.25)
            ++within;
    }
    CHECK(within >= 18);
}

TEST_CASE("K2 diagonal converges to 2/3 for large q") {
    JltConfig cfg;
    cfg.seed = 5;
    cfg.q_override = 20000;
    const DiagResult dr = jlt_diag(test::k2(), 1.0, cfg);
    CHECK(std::abs(dr.diag(0) - 2.0 / 3.0) < 0.03);
    CHECK(std::abs(dr.diag(1) - 2.0 / 3.0) < 0.03);
}

TEST_CASE("fixed seed gives identical output for any worker count") {
    const Graph g = test::random_graph(30, 0.2, 2);
    JltConfig cfg;
    cfg.eps = 0.4;
    cfg.seed = 77;
    cfg.workers = 1;
    const DiagResult one = jlt_diag(g, 1.0, cfg);
    cfg.workers = 8;
    const DiagResult eight = jlt_diag(g, 1.0, cfg);
    CHECK((one.diag.array() == eight.diag.array()).all());
    const DiagResult again = jlt_diag(g, 1.0, cfg);
    CHECK((again.diag.array() == eight.diag.array()).all());
}

TEST_CASE("estimates are statistically consistent with the oracle") {
    const Graph g = test::random_graph(20, 0.3, 61);
    const Eigen::MatrixXd omega = forest_matrix(g, 1.0);
    const int trials = 100;
    JltConfig cfg;
    cfg.eps = 0.45;
    Eigen::MatrixXd samples(trials, g.num_vertices());
    for (int t = 0; t < trials; ++t) {
        cfg.seed = 900 + t;
        samples.row(t) = jlt_diag(g, 1.0, cfg).diag.transpose();
    }
    for (node v = 0; v < g.num_vertices(); ++v) {
        const double mean = samples.col(v).mean();
        const double var = (samples.col(v).array() - mean).square().sum() / (trials - 1);
        const double se = std::sqrt(var / trials);
        CHECK(std::abs(mean - omega(v, v)) < 2.0 * se + 5e-3);
    }
}

TEST_CASE("runtime scales roughly linearly in q") {
    const Graph g = gen_er(800, 0.012, 19);
    JltConfig cfg;
    cfg.seed = 1;
    auto timed = [&](count q) {
        cfg.q_override = q;
        double best = 1e100;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            jlt_diag(g, 1.0, cfg);
            best = std::min(best, std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count());
        }
        return best;
    };
    const double t1 = timed(30);
    const double t2 = timed(60);
    const double ratio = t2 / t1;
    CHECK(ratio > 1.4);
    CHECK(ratio < 2.6);
}
