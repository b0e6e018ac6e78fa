#ifndef FORESTCC_GENERATORS_HPP
#define FORESTCC_GENERATORS_HPP

#include <cstdint>
#include <span>

#include "forestcc/graph.hpp"

namespace forestcc {

/// Erdos-Renyi G(n, p); deterministic for a fixed seed, may be disconnected.
Graph gen_er(node n, double p, std::uint64_t seed);

Graph gen_path(node n);
Graph gen_star(node n); // vertex 0 is the center, degree n-1
Graph gen_complete(node n);
Graph gen_grid(node rows, node cols);

/// Relabels the inputs onto disjoint id ranges and concatenates them.
Graph disjoint_union(std::span<const Graph> parts);

} // namespace forestcc

#endif
