#include "forestcc/generators.hpp"

#include <stdexcept>

#include "forestcc/rng.hpp"

namespace forestcc {

Graph gen_er(node n, double p, std::uint64_t seed) {
    if (p <= 0.0 || p > 1.0)
        throw std::invalid_argument("er: p must be in (0, 1]");
    RngStream rng(seed, 0);
    std::vector<Edge> edges;
    for (node i = 0; i < n; ++i)
        for (node j = i + 1; j < n; ++j)
            if (rng.uniform01() < p)
                edges.push_back({i, j, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_path(node n) {
    std::vector<Edge> edges;
    for (node i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_star(node n) {
    if (n == 0)
        throw std::invalid_argument("star: n must be positive");
    std::vector<Edge> edges;
    for (node i = 1; i < n; ++i)
        edges.push_back({0, i, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_complete(node n) {
    std::vector<Edge> edges;
    for (node i = 0; i < n; ++i)
        for (node j = i + 1; j < n; ++j)
            edges.push_back({i, j, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_grid(node rows, node cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("grid: dimensions must be positive");
    auto id = [cols](node r, node c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (node r = 0; r < rows; ++r)
        for (node c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < rows)
                edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::vector<Edge> edges;
    node offset = 0;
    for (const Graph &g : parts) {
        g.for_edges([&](node u, node v, double w) { edges.push_back({u + offset, v + offset, w}); });
        offset += g.num_vertices();
    }
    return Graph::from_edges(offset, std::move(edges));
}

} // namespace forestcc
