#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "forestcc/forest_approx.hpp"
#include "forestcc/metrics.hpp"
#include "forestcc/result_io.hpp"
#include "forestcc/rng.hpp"
#include "helpers.hpp"

using namespace forestcc;

namespace {

// quadratic reference for the tau-b implementation
double kendall_tau_bruteforce(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0, ties_both = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double da = a[i] - a[j], db = b[i] - b[j];
            if (da == 0.0 && db == 0.0)
                ++ties_both;
            else if (da == 0.0)
                ++ties_a;
            else if (db == 0.0)
                ++ties_b;
            else if ((da > 0) == (db > 0))
                ++concordant;
            else
                ++discordant;
        }
    const double n0 = static_cast<double>(n) * (n - 1) / 2.0;
    const double n1 = static_cast<double>(ties_a + ties_both);
    const double n2 = static_cast<double>(ties_b + ties_both);
    const double denom = std::sqrt(n0 - n1) * std::sqrt(n0 - n2);
    if (denom == 0.0)
        return (n1 == n0 && n2 == n0) ? 1.0 : 0.0;
    return static_cast<double>(concordant - discordant) / denom;
}

} // namespace

TEST_CASE("kendall tau on the frozen examples") {
    const std::vector<double> identity{0.1, 0.5, 0.3, 0.9};
    CHECK(kendall_tau(identity, identity) == doctest::Approx(1.0));

    const std::vector<double> reversed{0.9, 0.3, 0.5, 0.1};
    const std::vector<double> forward{0.1, 0.7, 0.4, 0.95};
    CHECK(kendall_tau(forward, reversed) == doctest::Approx(-1.0));

    const std::vector<double> a{3, 1, 2};
    const std::vector<double> b{3, 2, 1};
    CHECK(kendall_tau(a, b) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("kendall tau rejects mismatched lengths") {
    const std::vector<double> a{1, 2};
    const std::vector<double> b{1, 2, 3};
    CHECK_THROWS_AS(kendall_tau(a, b), std::invalid_argument);
}

TEST_CASE("kendall tau matches the quadratic reference on random data") {
    RngStream rng(2024, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.below(40);
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            // coarse grid produces plenty of ties
            a[i] = static_cast<double>(rng.below(6));
            b[i] = static_cast<double>(rng.below(6));
        }
        CHECK(kendall_tau(a, b) == doctest::Approx(kendall_tau_bruteforce(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("absolute error metrics") {
    const std::vector<double> x{0.5, 0.5};
    CHECK(max_abs_error(x, x) == 0.0);
    CHECK(avg_abs_error(x, x) == 0.0);
    const std::vector<double> y{0.6, 0.45};
    CHECK(max_abs_error(y, x) == doctest::Approx(0.1));
    CHECK(avg_abs_error(y, x) == doctest::Approx(0.075));
    const std::vector<double> bad{1.0};
    CHECK_THROWS_AS(max_abs_error(bad, x), std::invalid_argument);
    CHECK_THROWS_AS(avg_abs_error(bad, x), std::invalid_argument);
}

TEST_CASE("result files round trip exactly") {
    const Graph g = test::random_graph(17, 0.25, 8);
    ApproxConfig cfg;
    cfg.eps = 0.4;
    cfg.seed = 10;
    const DiagResult dr = approx_diag_forest_matrix(g, cfg);

    std::stringstream buffer;
    write_result(buffer, dr, g);
    const ResultFile rf = read_result(buffer);

    REQUIRE(rf.records.size() == g.num_vertices());
    CHECK(rf.metadata["method"] == "ust");
    CHECK(rf.metadata["seed"] == 10);
    CHECK(rf.metadata["n"] == g.num_vertices());
    for (const auto &rec : rf.records) {
        CHECK(rec.diag == dr.diag(rec.vertex));
        CHECK(rec.farness == dr.farness(rec.vertex));
        CHECK(rec.closeness == dr.closeness(rec.vertex));
    }
}

TEST_CASE("metadata reproduces the run bit for bit") {
    const Graph g = test::random_graph(25, 0.2, 15);
    ApproxConfig cfg;
    cfg.alpha = 1.5;
    cfg.eps = 0.35;
    cfg.delta = 0.2;
    cfg.kappa = 0.4;
    cfg.seed = 77;
    std::stringstream buffer;
    write_result(buffer, approx_diag_forest_matrix(g, cfg), g);
    const ResultFile rf = read_result(buffer);

    ApproxConfig replay;
    replay.alpha = rf.metadata["alpha"];
    replay.eps = rf.metadata["eps"];
    replay.delta = rf.metadata["delta"];
    replay.kappa = rf.metadata["kappa"];
    replay.seed = rf.metadata["seed"];
    replay.workers = rf.metadata["threads"];
    replay.estimator = rf.metadata["estimator"] == "paper" ? EstimatorMode::paper
                                                           : EstimatorMode::frequency;
    const DiagResult again = approx_diag_forest_matrix(g, replay);
    REQUIRE(again.samples == rf.metadata["samples"]);
    for (const auto &rec : rf.records) {
        CHECK(rec.diag == again.diag(rec.vertex));
        CHECK(rec.farness == again.farness(rec.vertex));
        CHECK(rec.closeness == again.closeness(rec.vertex));
    }
}

TEST_CASE("infinite closeness survives the round trip") {
    const Graph g = test::edgeless(1);
    ApproxConfig cfg;
    cfg.tau_override = 5;
    const DiagResult dr = approx_diag_forest_matrix(g, cfg);
    std::stringstream buffer;
    write_result(buffer, dr, g);
    const ResultFile rf = read_result(buffer);
    REQUIRE(rf.records.size() == 1);
    CHECK(std::isinf(rf.records[0].closeness));
}

TEST_CASE("group result file carries selection order and farness trail") {
    const Graph star = gen_star(5);
    const GroupResult gr = greedy_group(star, 1.0, 3);
    std::stringstream buffer;
    write_group_result(buffer, gr, star, 1.0);
    std::string first_line;
    std::getline(buffer, first_line);
    REQUIRE(first_line.rfind("# {", 0) == 0);
    const auto meta = nlohmann::json::parse(first_line.substr(2));
    CHECK(meta["method"] == "group");
    CHECK(meta["k"] == 3);
    CHECK(meta["gains"].size() == 2);
    int rows = 0;
    std::string line;
    while (std::getline(buffer, line))
        if (!line.empty() && line[0] != '#')
            ++rows;
    CHECK(rows == 3);
}

TEST_CASE("malformed result records raise parse errors") {
    std::istringstream in("# {\"method\":\"ust\"}\n0\tnot\tnumbers\n");
    CHECK_THROWS_AS(read_result(in), parse_error);
}
