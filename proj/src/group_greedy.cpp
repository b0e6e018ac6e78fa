#include "forestcc/group_greedy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "forestcc/dense_oracle.hpp"

namespace forestcc {

namespace {

// Fresh inverse of L_star restricted to `active`, written into the matching
// entries of M (an (n+1) x (n+1) workspace).
void refresh_inverse(const Eigen::MatrixXd &lap, const std::vector<node> &active,
                     Eigen::MatrixXd &m) {
    const auto k = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            sub(i, j) = lap(active[i], active[j]);
    const Eigen::MatrixXd inv = sub.llt().solve(Eigen::MatrixXd::Identity(k, k));
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            m(active[i], active[j]) = inv(i, j);
}

double symmetry_defect(const Eigen::MatrixXd &m, const std::vector<node> &active) {
    double defect = 0.0;
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j)
            defect = std::max(defect, std::abs(m(active[i], active[j]) - m(active[j], active[i])));
    return defect;
}

} // namespace

GroupResult greedy_group(const Graph &g, double alpha, node k, node max_n,
                         const GreedyObserver &observer) {
    const node n = g.num_vertices();
    if (k == 0 || k > n)
        throw std::invalid_argument("greedy_group: k out of range");
    if (n > max_n)
        throw std::invalid_argument("greedy_group: dense inverse maintenance guard exceeded");
    const auto t0 = std::chrono::steady_clock::now();

    const AugmentedGraph ag = augment(g, alpha);
    const node u_star = ag.u_star();
    const Eigen::MatrixXd lap = dense_laplacian(ag.graph());

    GroupResult result;

    // Seed: smallest pseudoinverse diagonal == smallest singleton farness.
    const Eigen::MatrixXd pinv = pseudo_inverse_lstar(ag, max_n + 1);
    node seed = 0;
    for (node v = 1; v < n; ++v)
        if (pinv(v, v) < pinv(seed, seed))
            seed = v;
    result.selected.push_back(seed);

    // M = (L_star with seed's row/column deleted)^{-1}, tracked over the
    // active index set so later deletions are O(n) bookkeeping.
    std::vector<node> active;
    active.reserve(n);
    for (node v = 0; v <= n; ++v)
        if (v != seed)
            active.push_back(v);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
    refresh_inverse(lap, active, m);
    if (observer)
        observer(m, active, result.selected);

    std::vector<double> scores(n + 1);

    while (result.selected.size() < k) {
        // candidates: active base vertices (never u_star)
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long ci = 0; ci < static_cast<long long>(active.size()); ++ci) {
            const node v = active[ci];
            if (v == u_star)
                continue;
            double col_sq = 0.0;
            for (node j : active) {
                const double mjv = m(j, v);
                col_sq += mjv * mjv;
            }
            scores[v] = col_sq / m(v, v);
        }
        node best = u_star;
        for (node v : active)
            if (v != u_star && (best == u_star || scores[v] > scores[best]))
                best = v;
        if (best == u_star)
            throw std::logic_error("greedy_group: no candidate left");

        result.gains.push_back(scores[best]);
        result.selected.push_back(best);

        // Sherman-Morrison downdate, then drop best from the active set.
        // Both triangles are updated independently; the symmetry check below
        // catches accumulated rounding drift.
        const double pivot = m(best, best);
        for (node j : active) {
            if (j == best)
                continue;
            const double cj = m(best, j) / pivot;
            for (node i : active) {
                if (i == best)
                    continue;
                m(i, j) -= m(i, best) * cj;
            }
        }
        std::erase(active, best);

        if (symmetry_defect(m, active) > 1e-6) {
            refresh_inverse(lap, active, m);
            ++result.refreshes;
        }
        if (observer)
            observer(m, active, result.selected);
    }

    result.final_farness = 0.0;
    for (node i : active)
        result.final_farness += m(i, i);
    result.final_closeness = 1.0 / result.final_farness;
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

double marginal_gain_exact(const AugmentedGraph &ag, const std::vector<node> &group, node v) {
    if (group.empty())
        throw std::invalid_argument("marginal_gain_exact: group must be nonempty");
    for (node s : group)
        if (s == v)
            throw std::invalid_argument("marginal_gain_exact: v already in group");
    std::vector<node> extended = group;
    extended.push_back(v);
    return group_farness_exact(ag, group) - group_farness_exact(ag, extended);
}

} // namespace forestcc
