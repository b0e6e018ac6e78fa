#include "forestcc/jlt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "forestcc/lap_solver.hpp"
#include "forestcc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace forestcc {

void JltConfig::validate() const {
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("jlt: eps must be in (0, 1)");
    if (solver_tolerance <= 0.0)
        throw std::invalid_argument("jlt: solver tolerance must be positive");
    if (q_override && *q_override == 0)
        throw std::invalid_argument("jlt: q override must be at least 1");
}

count compute_q(double eps, node n) {
    if (n < 2)
        throw std::invalid_argument("compute_q: need at least two vertices");
    return std::max<count>(1, static_cast<count>(std::ceil(std::log(static_cast<double>(n)) /
                                                           (eps * eps))));
}

DiagResult jlt_diag(const Graph &g, double alpha, const JltConfig &cfg) {
    cfg.validate();
    const node n = g.num_vertices();
    if (n < 2)
        throw std::invalid_argument("jlt_diag: need at least two vertices");
    const auto t0 = std::chrono::steady_clock::now();

    const AugmentedGraph ag = augment(g, alpha);
    const Graph &star = ag.graph();
    const node size = star.num_vertices();
    const node u_star = ag.u_star();
    const count q = cfg.q_override ? *cfg.q_override : compute_q(cfg.eps, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));

    SolverConfig solver_cfg;
    solver_cfg.target_residual = cfg.solver_tolerance;

    std::vector<Eigen::VectorXd> sketches(q);
    double worst_residual = 0.0;
    std::size_t total_iterations = 0;

    int threads = 1;
#ifdef _OPENMP
    threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#endif

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) \
    reduction(max : worst_residual) reduction(+ : total_iterations)
#endif
    for (long long i = 0; i < static_cast<long long>(q); ++i) {
        // sketch row: +-1/sqrt(q) combination of the sqrt(w)-scaled
        // incidence columns, assembled edge by edge in canonical order
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(i));
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
        star.for_edges([&](node u, node v, double w) {
            const double r = rng.sign() * scale * std::sqrt(w);
            rhs(u) += r;
            rhs(v) -= r;
        });
        const SolveReport report = solve_laplacian(star, std::move(rhs), solver_cfg);
        sketches[i] = report.x;
        worst_residual = std::max(worst_residual, report.residual);
        total_iterations += report.iterations;
    }

    DiagResult dr;
    dr.method = "jlt";
    dr.alpha = alpha;
    dr.eps = cfg.eps;
    dr.seed = cfg.seed;
    dr.workers = cfg.workers;
    dr.samples = q;
    dr.solver_tolerance = cfg.solver_tolerance;
    dr.solver_residual = worst_residual;
    dr.solver_iterations = total_iterations;

    dr.diag.resize(n);
    for (node v = 0; v < n; ++v) {
        double est = 0.0;
        for (count i = 0; i < q; ++i) {
            const double diff = sketches[i](u_star) - sketches[i](v);
            est += diff * diff;
        }
        dr.diag(v) = std::clamp(est, 0.0, 1.0);
    }
    derive_scores(dr);

    dr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return dr;
}

} // namespace forestcc
