#ifndef FORESTCC_TEST_HELPERS_HPP
#define FORESTCC_TEST_HELPERS_HPP

#include <queue>
#include <vector>

#include "forestcc/generators.hpp"
#include "forestcc/graph.hpp"
#include "forestcc/rng.hpp"

namespace forestcc::test {

inline Graph k2() { return gen_complete(2); }
inline Graph k3() { return gen_complete(3); }
inline Graph edgeless(node n) { return Graph::from_edges(n, {}); }

/// Random graph with an occasional weighted edge; used by property tests.
inline Graph random_graph(node n, double p, std::uint64_t seed, bool weighted = false) {
    RngStream rng(seed, 9000);
    std::vector<Edge> edges;
    for (node i = 0; i < n; ++i)
        for (node j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) {
                const double w = weighted ? 0.25 + 2.0 * rng.uniform01() : 1.0;
                edges.push_back({i, j, w});
            }
    return Graph::from_edges(n, std::move(edges));
}

inline node count_components(const Graph &g) {
    const node n = g.num_vertices();
    std::vector<char> seen(n, 0);
    node components = 0;
    for (node s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        ++components;
        std::queue<node> frontier;
        frontier.push(s);
        seen[s] = 1;
        while (!frontier.empty()) {
            const node v = frontier.front();
            frontier.pop();
            for (node w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    frontier.push(w);
                }
        }
    }
    return components;
}

inline bool is_connected(const Graph &g) { return count_components(g) <= 1; }

/// Deterministic mixed instance pool: ER / paths / stars / complete graphs /
/// disjoint unions, n <= 30, cycling alpha through {0.5, 1, 2}.
struct Instance {
    Graph graph;
    double alpha;
};

inline std::vector<Instance> mixed_instances(std::size_t how_many, std::uint64_t seed,
                                             bool force_disconnected = false) {
    const double alphas[3] = {0.5, 1.0, 2.0};
    std::vector<Instance> out;
    RngStream rng(seed, 4242);
    for (std::size_t i = 0; i < how_many; ++i) {
        const node n = 4 + static_cast<node>(rng.below(27)); // 4..30
        Graph g;
        switch (i % 5) {
        case 0:
            g = random_graph(n, 0.2, seed + i);
            break;
        case 1:
            g = gen_path(n);
            break;
        case 2:
            g = gen_star(n);
            break;
        case 3:
            g = gen_complete(4 + n % 7);
            break;
        default:
            g = random_graph(n, 0.08, seed + i, true); // sparse, often disconnected
            break;
        }
        if (force_disconnected) {
            const node part = std::max<node>(2, n / 4);
            const Graph pieces[3] = {g, gen_path(part), gen_star(part)};
            g = disjoint_union(pieces);
        }
        out.push_back({std::move(g), alphas[i % 3]});
    }
    return out;
}

} // namespace forestcc::test

#endif
