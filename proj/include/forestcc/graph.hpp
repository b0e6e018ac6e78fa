#ifndef FORESTCC_GRAPH_HPP
#define FORESTCC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace forestcc {

using node = std::uint32_t;
using count = std::uint64_t;

struct Edge {
    node u;
    node v;
    double weight;
};

/// Immutable undirected graph in adjacency-array (CSR) form.
/// Neighbor lists are sorted by id; per-vertex prefix sums of edge weights
/// support O(log deg) weighted neighbor sampling (O(1) for uniform rows).
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops are dropped, parallel
    /// edges are merged by weight summation. `n_hint` extends the vertex
    /// range beyond the largest endpoint id.
    static Graph from_edges(node n_hint, std::vector<Edge> edges);

    node num_vertices() const { return n_; }
    count num_edges() const { return m_; }
    bool weighted() const { return weighted_; }

    node degree(node v) const { return static_cast<node>(offsets_[v + 1] - offsets_[v]); }
    double weighted_degree(node v) const;

    std::span<const node> neighbors(node v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::span<const double> weights(node v) const {
        return {w_.data() + offsets_[v], w_.data() + offsets_[v + 1]};
    }
    /// Inclusive prefix sums of `weights(v)`.
    std::span<const double> cumulative_weights(node v) const {
        return {cumw_.data() + offsets_[v], cumw_.data() + offsets_[v + 1]};
    }
    /// True if all edges incident to v carry the same weight.
    bool uniform_row(node v) const { return uniform_[v] != 0; }

    double total_edge_weight() const { return total_weight_; }

    bool has_edge(node u, node v) const;
    double edge_weight(node u, node v) const; // 0 if absent

    template <typename F>
    void for_edges(F &&f) const {
        for (node u = 0; u < n_; ++u)
            for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i)
                if (u < adj_[i])
                    f(u, adj_[i], w_[i]);
    }

private:
    node n_ = 0;
    count m_ = 0;
    bool weighted_ = false;
    double total_weight_ = 0.0;
    std::vector<std::size_t> offsets_{0};
    std::vector<node> adj_;
    std::vector<double> w_;
    std::vector<double> cumw_;
    std::vector<std::uint8_t> uniform_;
};

/// Sum of weighted degrees, i.e. twice the total edge weight.
double volume(const Graph &g);

/// The input graph with edge weights scaled by alpha plus one universal
/// vertex (id = n) joined to every original vertex by a unit-weight edge.
/// Connected regardless of the base graph's connectivity.
class AugmentedGraph {
public:
    AugmentedGraph(const Graph &base, double alpha);

    const Graph &graph() const { return star_; }
    node u_star() const { return star_.num_vertices() - 1; }
    node base_vertices() const { return star_.num_vertices() - 1; }
    double alpha() const { return alpha_; }

private:
    Graph star_;
    double alpha_;
};

inline AugmentedGraph augment(const Graph &g, double alpha) { return AugmentedGraph(g, alpha); }

struct LoadOptions {
    bool one_indexed = false;
    std::string comment_prefixes = "#%";
    double default_weight = 1.0;
    bool compact_ids = false; // remap ids to 0..k-1; otherwise max id fixes n
};

struct LoadStats {
    count dropped_self_loops = 0;
    count merged_duplicates = 0;
};

/// Parses "u v" / "u v w" lines. Malformed lines and nonpositive weights
/// raise a parse_error carrying the line number. A comment of the form
/// "# n=<n> m=<m> weighted=<0|1>" (as emitted by save_edge_list) pins the
/// vertex count so isolated trailing vertices survive a round trip.
Graph load_edge_list(std::istream &in, const LoadOptions &opts = {}, LoadStats *stats = nullptr);
Graph load_edge_list_file(const std::string &path, const LoadOptions &opts = {},
                          LoadStats *stats = nullptr);

/// Emits "u v w" lines sorted by (u, v) after a "# n= m= weighted=" header.
void save_edge_list(std::ostream &out, const Graph &g);
void save_edge_list_file(const std::string &path, const Graph &g);

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string &what, count line) : std::runtime_error(what), line_(line) {}
    count line() const { return line_; }

private:
    count line_;
};

} // namespace forestcc

#endif
