#ifndef FORESTCC_FOREST_APPROX_HPP
#define FORESTCC_FOREST_APPROX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forestcc/graph.hpp"

namespace forestcc {

enum class EstimatorMode { frequency, paper };

struct ApproxConfig {
    double alpha = 1.0;
    double eps = 0.1;     // in (0, 1)
    double delta = 0.1;   // in (0, 1)
    double kappa = 0.5;   // in (0, 1); splits the error budget solver/sampling
    std::uint64_t seed = 1;
    int workers = 0; // 0: OpenMP default
    EstimatorMode estimator = EstimatorMode::frequency;
    std::optional<count> tau_override;
    void validate() const;
};

struct DiagResult {
    std::string method; // "exact" | "ust" | "jlt"
    double alpha = 1.0;
    double eps = 0.0;
    double delta = 0.0;
    double kappa = 0.0;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string estimator;   // "frequency" | "paper" | ""
    count samples = 0;       // tau for ust, q for jlt, 0 for exact
    double solver_tolerance = 0.0; // target residual handed to the solver
    double solver_residual = 0.0;
    std::size_t solver_iterations = 0;
    double wall_seconds = 0.0;

    Eigen::VectorXd diag;
    double trace = 0.0;
    Eigen::VectorXd farness;   // n*diag[v] + trace - 2
    Eigen::VectorXd closeness; // n / farness, +inf where farness is 0
    Eigen::VectorXd pivot_column; // solver diagnostics (ust only)
};

/// Sample size tau = ceil(ln(2M/delta) / (2 (1-kappa)^2 eps^2)) with
/// M = m + n, the edge count of the augmented graph.
count compute_tau(double eps, double delta, double kappa, const Graph &g);

/// Estimates diag(Omega) by UST sampling on the augmented graph plus one
/// Laplacian solve, then derives farness and closeness from the trace
/// identity. The frequency estimator uses R[v]/tau directly (the diagonal
/// of Omega equals the u_star-to-v effective resistance); the paper mode
/// additionally applies the -x[u_star] + 2x[v] correction.
DiagResult approx_diag_forest_matrix(const Graph &g, const ApproxConfig &cfg);

/// Dense reference result in the same shape (method = "exact").
DiagResult exact_diag_forest_matrix(const Graph &g, double alpha, node max_n = 5000);

/// Vertices sorted by descending closeness, ties by ascending id.
std::vector<std::pair<node, double>> rank_vertices(const DiagResult &dr,
                                                   std::optional<std::size_t> top_k = std::nullopt);

/// Shared derivation of trace/farness/closeness from an estimated diagonal.
void derive_scores(DiagResult &dr);

} // namespace forestcc

#endif
