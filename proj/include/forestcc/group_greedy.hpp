#ifndef FORESTCC_GROUP_GREEDY_HPP
#define FORESTCC_GROUP_GREEDY_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "forestcc/graph.hpp"

namespace forestcc {

struct GroupResult {
    std::vector<node> selected;  // in selection order, |selected| = k
    std::vector<double> gains;   // farness decrement of each selection after the first (k-1 entries)
    double final_farness = 0.0;
    double final_closeness = 0.0; // 1 / final_farness
    double wall_seconds = 0.0;
    std::size_t refreshes = 0;   // full inverse recomputations triggered by symmetry drift
};

/// Called after every selection with the maintained inverse (entries outside
/// `active` are stale) and the vertices selected so far; test hook for the
/// inverse-maintenance contract.
using GreedyObserver =
    std::function<void(const Eigen::MatrixXd &m, const std::vector<node> &active,
                       const std::vector<node> &selected)>;

/// Greedy maximization of group forest closeness. Seeds with the vertex of
/// smallest diagonal in the pseudoinverse of the augmented Laplacian, then
/// repeatedly adds the vertex maximizing ||M e_v||^2 / M[v,v], maintaining
/// M = inverse of the row/column-deleted L_star by rank-one updates over an
/// active index set. Ties break to the smallest vertex id.
GroupResult greedy_group(const Graph &g, double alpha, node k, node max_n = 5000,
                         const GreedyObserver &observer = {});

/// f(S) - f(S u {v}) from two fresh dense inverses; the reference for the
/// incrementally maintained quantity above.
double marginal_gain_exact(const AugmentedGraph &ag, const std::vector<node> &group, node v);

} // namespace forestcc

#endif
