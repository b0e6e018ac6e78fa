#include "forestcc/lap_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace forestcc {

void laplacian_multiply(const Graph &g, const Eigen::VectorXd &x, Eigen::VectorXd &y) {
    const node n = g.num_vertices();
    y.resize(n);
    for (node v = 0; v < n; ++v) {
        const auto nbrs = g.neighbors(v);
        const auto ws = g.weights(v);
        double acc = g.weighted_degree(v) * x(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            acc -= ws[i] * x(nbrs[i]);
        y(v) = acc;
    }
}

SolveReport solve_laplacian(const Graph &g, Eigen::VectorXd b, const SolverConfig &cfg) {
    const node n = g.num_vertices();
    if (cfg.target_residual <= 0.0)
        throw std::invalid_argument("solver: target residual must be positive");
    const std::size_t max_iter =
        cfg.max_iterations > 0
            ? cfg.max_iterations
            : static_cast<std::size_t>(10.0 * std::sqrt(static_cast<double>(n))) + 100;

    b.array() -= b.mean(); // project onto range(L)
    const double b_norm = b.norm();

    SolveReport report;
    report.x = Eigen::VectorXd::Zero(n);
    if (b_norm == 0.0)
        return report;

    Eigen::VectorXd inv_diag(n);
    for (node v = 0; v < n; ++v) {
        const double d = g.weighted_degree(v);
        if (d <= 0.0)
            throw std::invalid_argument("solver: Laplacian has a zero diagonal entry");
        inv_diag(v) = cfg.preconditioner == Preconditioner::diagonal ? 1.0 / d : 1.0;
    }

    Eigen::VectorXd r = b;
    Eigen::VectorXd z = inv_diag.cwiseProduct(r);
    Eigen::VectorXd p = z;
    Eigen::VectorXd lp(n);
    double rz = r.dot(z);
    double rel_res = 1.0;

    for (std::size_t it = 0; it < max_iter; ++it) {
        laplacian_multiply(g, p, lp);
        const double p_lp = p.dot(lp);
        if (p_lp <= 0.0)
            break; // numerical breakdown; report what we have
        const double step = rz / p_lp;
        report.x += step * p;
        r -= step * lp;
        // keep iterates in the zero-mean complement of the null space
        report.x.array() -= report.x.mean();
        r.array() -= r.mean();

        ++report.iterations;
        rel_res = r.norm() / b_norm;
        report.residual_history.push_back(rel_res);
        if (rel_res <= cfg.target_residual)
            break;

        z = inv_diag.cwiseProduct(r);
        const double rz_next = r.dot(z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
    }

    report.residual = rel_res;
    if (rel_res > cfg.target_residual)
        throw solver_error("conjugate gradient did not reach residual " +
                               std::to_string(cfg.target_residual) + " (achieved " +
                               std::to_string(rel_res) + " after " +
                               std::to_string(report.iterations) + " iterations)",
                           rel_res, report.iterations);
    return report;
}

SolveReport solve_pivot_column(const AugmentedGraph &ag, const SolverConfig &cfg) {
    const node size = ag.graph().num_vertices();
    Eigen::VectorXd b = Eigen::VectorXd::Constant(size, -1.0 / static_cast<double>(size));
    b(ag.u_star()) += 1.0;
    return solve_laplacian(ag.graph(), std::move(b), cfg);
}

double compute_eta(double alpha, double eps, double kappa, const Graph &g) {
    if (alpha <= 0.0 || eps <= 0.0 || eps >= 1.0 || kappa <= 0.0 || kappa >= 1.0)
        throw std::invalid_argument("compute_eta: parameters out of range");
    double vol = volume(g);
    if (vol <= 0.0)
        vol = static_cast<double>(g.num_vertices()); // edgeless: n as lower-bound scale
    const double c = static_cast<double>(g.num_vertices()) / (alpha * vol);
    return kappa * eps / (6.0 * std::sqrt(alpha * (c + 2.0) * vol));
}

} // namespace forestcc
