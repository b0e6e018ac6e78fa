#include "forestcc/forest_approx.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "forestcc/dense_oracle.hpp"
#include "forestcc/lap_solver.hpp"
#include "forestcc/ust_sampler.hpp"

namespace forestcc {

void ApproxConfig::validate() const {
    if (alpha <= 0.0)
        throw std::invalid_argument("alpha must be positive");
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("eps must be in (0, 1)");
    if (delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("delta must be in (0, 1)");
    if (kappa <= 0.0 || kappa >= 1.0)
        throw std::invalid_argument("kappa must be in (0, 1)");
    if (tau_override && *tau_override == 0)
        throw std::invalid_argument("tau override must be at least 1");
}

count compute_tau(double eps, double delta, double kappa, const Graph &g) {
    if (eps <= 0.0 || eps >= 1.0 || delta <= 0.0 || delta >= 1.0 || kappa <= 0.0 || kappa >= 1.0)
        throw std::invalid_argument("compute_tau: parameters out of range");
    const double edges_star = static_cast<double>(g.num_edges() + g.num_vertices());
    const double raw =
        std::log(2.0 * edges_star / delta) / (2.0 * (1.0 - kappa) * (1.0 - kappa) * eps * eps);
    return std::max<count>(1, static_cast<count>(std::ceil(raw)));
}

void derive_scores(DiagResult &dr) {
    const auto n = dr.diag.size();
    dr.trace = 0.0;
    for (Eigen::Index v = 0; v < n; ++v)
        dr.trace += dr.diag(v);
    dr.farness.resize(n);
    dr.closeness.resize(n);
    for (Eigen::Index v = 0; v < n; ++v) {
        dr.farness(v) = static_cast<double>(n) * dr.diag(v) + dr.trace - 2.0;
        dr.closeness(v) = dr.farness(v) == 0.0 ? std::numeric_limits<double>::infinity()
                                               : static_cast<double>(n) / dr.farness(v);
    }
}

DiagResult approx_diag_forest_matrix(const Graph &g, const ApproxConfig &cfg) {
    cfg.validate();
    const node n = g.num_vertices();
    if (n == 0)
        throw std::invalid_argument("approx_diag_forest_matrix: empty graph");
    const auto t0 = std::chrono::steady_clock::now();

    const AugmentedGraph ag = augment(g, cfg.alpha);
    const count tau = cfg.tau_override ? *cfg.tau_override : compute_tau(cfg.eps, cfg.delta, cfg.kappa, g);
    const double eta = compute_eta(cfg.alpha, cfg.eps, cfg.kappa, g);

    const SampleAccumulator acc = sample_usts(ag, tau, cfg.seed, cfg.workers);

    SolverConfig solver_cfg;
    solver_cfg.target_residual = 0.1 * eta; // safety margin on the eta bound
    const SolveReport solve = solve_pivot_column(ag, solver_cfg);

    DiagResult dr;
    dr.method = "ust";
    dr.alpha = cfg.alpha;
    dr.eps = cfg.eps;
    dr.delta = cfg.delta;
    dr.kappa = cfg.kappa;
    dr.seed = cfg.seed;
    dr.workers = cfg.workers;
    dr.estimator = cfg.estimator == EstimatorMode::frequency ? "frequency" : "paper";
    dr.samples = tau;
    dr.solver_tolerance = solver_cfg.target_residual;
    dr.solver_residual = solve.residual;
    dr.solver_iterations = solve.iterations;
    dr.pivot_column = solve.x;

    dr.diag.resize(n);
    const double x_pivot = solve.x(ag.u_star());
    for (node v = 0; v < n; ++v) {
        double est = static_cast<double>(acc.r[v]) / static_cast<double>(tau);
        if (cfg.estimator == EstimatorMode::paper)
            est += -x_pivot + 2.0 * solve.x(v);
        dr.diag(v) = std::clamp(est, 0.0, 1.0);
    }
    derive_scores(dr);

    dr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return dr;
}

DiagResult exact_diag_forest_matrix(const Graph &g, double alpha, node max_n) {
    const auto t0 = std::chrono::steady_clock::now();
    const Eigen::MatrixXd omega = forest_matrix(g, alpha, max_n);

    DiagResult dr;
    dr.method = "exact";
    dr.alpha = alpha;
    dr.diag = omega.diagonal();
    derive_scores(dr);
    dr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return dr;
}

std::vector<std::pair<node, double>> rank_vertices(const DiagResult &dr,
                                                   std::optional<std::size_t> top_k) {
    std::vector<std::pair<node, double>> ranking(static_cast<std::size_t>(dr.closeness.size()));
    for (std::size_t v = 0; v < ranking.size(); ++v)
        ranking[v] = {static_cast<node>(v), dr.closeness(static_cast<Eigen::Index>(v))};
    std::sort(ranking.begin(), ranking.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    if (top_k && *top_k < ranking.size())
        ranking.resize(*top_k);
    return ranking;
}

} // namespace forestcc
