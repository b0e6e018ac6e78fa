#ifndef FORESTCC_LAP_SOLVER_HPP
#define FORESTCC_LAP_SOLVER_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "forestcc/graph.hpp"

namespace forestcc {

enum class Preconditioner { none, diagonal };

struct SolverConfig {
    double target_residual = 1e-9;  // relative 2-norm residual
    std::size_t max_iterations = 0; // 0 selects 10*sqrt(N) + 100
    Preconditioner preconditioner = Preconditioner::diagonal;
};

struct SolveReport {
    Eigen::VectorXd x; // mean-zero solution
    double residual = 0.0;
    std::size_t iterations = 0;
    std::vector<double> residual_history; // relative residual after each iteration
};

class solver_error : public std::runtime_error {
public:
    solver_error(const std::string &what, double achieved_residual, std::size_t iterations)
        : std::runtime_error(what), residual(achieved_residual), iterations(iterations) {}
    double residual;
    std::size_t iterations;
};

/// y = L x for the Laplacian of g, computed straight off the adjacency
/// structure (no explicit matrix).
void laplacian_multiply(const Graph &g, const Eigen::VectorXd &x, Eigen::VectorXd &y);

/// Preconditioned conjugate gradient on the singular Laplacian system
/// L x = b. The right-hand side is projected onto the complement of the
/// all-ones null space and iterates are re-centered every iteration; the
/// returned solution has zero mean. Throws solver_error if the target
/// relative residual is not reached within the iteration budget.
SolveReport solve_laplacian(const Graph &g, Eigen::VectorXd b, const SolverConfig &cfg = {});

/// Solves L_star x = e_{u_star} - 1/(n+1) * 1, yielding the u_star column
/// of the pseudoinverse of the augmented Laplacian up to solver tolerance.
SolveReport solve_pivot_column(const AugmentedGraph &ag, const SolverConfig &cfg = {});

/// Solver accuracy eta = kappa*eps / (6*sqrt(alpha*(c+2)*vol(G))) with
/// c = n / (alpha*vol(G)). For edgeless graphs the volume is replaced by n
/// as a lower-bound scale.
double compute_eta(double alpha, double eps, double kappa, const Graph &g);

} // namespace forestcc

#endif
