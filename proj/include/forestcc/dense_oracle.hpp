#ifndef FORESTCC_DENSE_ORACLE_HPP
#define FORESTCC_DENSE_ORACLE_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "forestcc/graph.hpp"

namespace forestcc {

/// Default size cap for the dense reference computations below. They exist
/// as ground truth for tests and for the `--method exact` path, not for
/// large production graphs.
inline constexpr node kOracleMaxN = 5000;

Eigen::MatrixXd dense_laplacian(const Graph &g, double scale = 1.0);

/// Forest matrix (alpha*L + I)^{-1}. Symmetric, doubly stochastic, entries
/// in [0, 1].
Eigen::MatrixXd forest_matrix(const Graph &g, double alpha, node max_n = kOracleMaxN);

/// Forest distance Omega[u,u] + Omega[v,v] - 2*Omega[u,v]; 0 for u == v.
double forest_distance(const Graph &g, double alpha, node u, node v, node max_n = kOracleMaxN);

/// Farness f(v) = sum_w d(v, w) together with closeness n/f(v).
/// Computes the pairwise sum and the trace identity
/// n*Omega[v,v] + tr(Omega) - 2 and cross-checks them to 1e-9.
/// Zero farness (n = 1) is reported as +infinity closeness.
std::pair<Eigen::VectorXd, Eigen::VectorXd>
exact_farness_closeness(const Graph &g, double alpha, node max_n = kOracleMaxN);

/// Moore-Penrose pseudoinverse of the augmented Laplacian, obtained from one
/// SPD factorization and n+1 projected right-hand sides.
Eigen::MatrixXd pseudo_inverse_lstar(const AugmentedGraph &ag, node max_n = kOracleMaxN);

/// Group forest farness: trace of the inverse of L_star with the rows and
/// columns of S removed. S must be nonempty and contain only base vertices.
double group_farness_exact(const AugmentedGraph &ag, const std::vector<node> &group,
                           node max_n = kOracleMaxN);

/// Exhaustive minimizer of group_farness_exact over all size-k subsets.
/// Ties resolve to the lexicographically smallest subset.
std::pair<std::vector<node>, double> brute_force_best_group(const AugmentedGraph &ag, node k,
                                                            node max_n = 15);

} // namespace forestcc

#endif
