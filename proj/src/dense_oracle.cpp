#include "forestcc/dense_oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace forestcc {

namespace {

void check_oracle_size(node n, node max_n, const char *what) {
    if (n > max_n)
        throw std::invalid_argument(std::string(what) + ": dense oracle size guard exceeded (n=" +
                                    std::to_string(n) + ", guard=" + std::to_string(max_n) + ")");
}

} // namespace

Eigen::MatrixXd dense_laplacian(const Graph &g, double scale) {
    const node n = g.num_vertices();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    g.for_edges([&](node u, node v, double w) {
        lap(u, u) += scale * w;
        lap(v, v) += scale * w;
        lap(u, v) -= scale * w;
        lap(v, u) -= scale * w;
    });
    return lap;
}

Eigen::MatrixXd forest_matrix(const Graph &g, double alpha, node max_n) {
    if (alpha <= 0.0)
        throw std::invalid_argument("forest_matrix: alpha must be positive");
    const node n = g.num_vertices();
    if (n == 0)
        throw std::invalid_argument("forest_matrix: empty graph");
    check_oracle_size(n, max_n, "forest_matrix");
    Eigen::MatrixXd system = dense_laplacian(g, alpha);
    system.diagonal().array() += 1.0;
    return system.llt().solve(Eigen::MatrixXd::Identity(n, n));
}

double forest_distance(const Graph &g, double alpha, node u, node v, node max_n) {
    if (u >= g.num_vertices() || v >= g.num_vertices())
        throw std::invalid_argument("forest_distance: vertex out of range");
    if (u == v)
        return 0.0;
    const Eigen::MatrixXd omega = forest_matrix(g, alpha, max_n);
    return omega(u, u) + omega(v, v) - 2.0 * omega(u, v);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> exact_farness_closeness(const Graph &g, double alpha,
                                                                    node max_n) {
    const node n = g.num_vertices();
    const Eigen::MatrixXd omega = forest_matrix(g, alpha, max_n);
    const double trace = omega.trace();

    Eigen::VectorXd farness(n), pairwise(n);
    for (node v = 0; v < n; ++v) {
        farness(v) = static_cast<double>(n) * omega(v, v) + trace - 2.0;
        double sum = 0.0;
        for (node w = 0; w < n; ++w)
            if (w != v)
                sum += omega(v, v) + omega(w, w) - 2.0 * omega(v, w);
        pairwise(v) = sum;
    }
    if ((farness - pairwise).cwiseAbs().maxCoeff() > 1e-9)
        throw std::logic_error("exact_farness_closeness: trace identity and pairwise sum disagree");

    Eigen::VectorXd closeness(n);
    for (node v = 0; v < n; ++v)
        closeness(v) = farness(v) == 0.0 ? std::numeric_limits<double>::infinity()
                                         : static_cast<double>(n) / farness(v);
    return {farness, closeness};
}

Eigen::MatrixXd pseudo_inverse_lstar(const AugmentedGraph &ag, node max_n) {
    const node size = ag.graph().num_vertices();
    check_oracle_size(size, max_n, "pseudo_inverse_lstar");
    const double inv_n = 1.0 / static_cast<double>(size);

    // L_star + J/N is SPD and (L_star + J/N) X = I - J/N has the
    // pseudoinverse as its unique solution.
    Eigen::MatrixXd system = dense_laplacian(ag.graph());
    system.array() += inv_n;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Identity(size, size);
    rhs.array() -= inv_n;
    return system.llt().solve(rhs);
}

double group_farness_exact(const AugmentedGraph &ag, const std::vector<node> &group, node max_n) {
    const node size = ag.graph().num_vertices();
    check_oracle_size(size, max_n, "group_farness_exact");
    if (group.empty())
        throw std::invalid_argument("group_farness_exact: group must be nonempty");
    std::vector<bool> removed(size, false);
    for (node v : group) {
        if (v >= ag.base_vertices())
            throw std::invalid_argument("group_farness_exact: group must contain base vertices only");
        removed[v] = true;
    }

    std::vector<node> keep;
    keep.reserve(size - group.size());
    for (node v = 0; v < size; ++v)
        if (!removed[v])
            keep.push_back(v);

    const Eigen::MatrixXd lap = dense_laplacian(ag.graph());
    const auto k = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd grounded(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            grounded(i, j) = lap(keep[i], keep[j]);
    const Eigen::MatrixXd inv = grounded.llt().solve(Eigen::MatrixXd::Identity(k, k));
    return inv.trace();
}

std::pair<std::vector<node>, double> brute_force_best_group(const AugmentedGraph &ag, node k,
                                                            node max_n) {
    const node n = ag.base_vertices();
    if (k == 0 || k > n)
        throw std::invalid_argument("brute_force_best_group: k out of range");
    check_oracle_size(n, max_n, "brute_force_best_group");

    std::vector<node> subset(k);
    for (node i = 0; i < k; ++i)
        subset[i] = i;

    std::vector<node> best;
    double best_farness = std::numeric_limits<double>::infinity();
    while (true) {
        const double f = group_farness_exact(ag, subset);
        if (f < best_farness) { // strict: lexicographic enumeration keeps first optimum
            best_farness = f;
            best = subset;
        }
        // next subset in lexicographic order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && subset[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++subset[i];
        for (node j = static_cast<node>(i) + 1; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return {best, best_farness};
}

} // namespace forestcc
