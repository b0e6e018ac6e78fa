#include "forestcc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace forestcc {

Graph Graph::from_edges(node n_hint, std::vector<Edge> edges) {
    node n = n_hint;
    for (const Edge &e : edges) {
        if (e.weight <= 0.0 || !std::isfinite(e.weight))
            throw std::invalid_argument("edge weight must be strictly positive");
        n = std::max({n, e.u + 1, e.v + 1});
    }

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);

    // drop self-loops, count half-edges
    std::erase_if(edges, [](const Edge &e) { return e.u == e.v; });
    for (const Edge &e : edges) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

    const std::size_t half_edges = g.offsets_[n];
    g.adj_.resize(half_edges);
    g.w_.resize(half_edges);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge &e : edges) {
        g.adj_[cursor[e.u]] = e.v;
        g.w_[cursor[e.u]++] = e.weight;
        g.adj_[cursor[e.v]] = e.u;
        g.w_[cursor[e.v]++] = e.weight;
    }

    // sort rows by neighbor id, merge duplicates by weight summation
    std::vector<std::size_t> perm;
    std::vector<std::size_t> new_offsets(static_cast<std::size_t>(n) + 1, 0);
    std::vector<node> adj;
    std::vector<double> w;
    adj.reserve(half_edges);
    w.reserve(half_edges);
    for (node v = 0; v < n; ++v) {
        const std::size_t begin = g.offsets_[v], end = g.offsets_[v + 1];
        perm.resize(end - begin);
        std::iota(perm.begin(), perm.end(), begin);
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return g.adj_[a] < g.adj_[b]; });
        for (std::size_t i : perm) {
            if (!adj.empty() && adj.size() > new_offsets[v] && adj.back() == g.adj_[i])
                w.back() += g.w_[i];
            else {
                adj.push_back(g.adj_[i]);
                w.push_back(g.w_[i]);
            }
        }
        new_offsets[v + 1] = adj.size();
    }
    g.offsets_ = std::move(new_offsets);
    g.adj_ = std::move(adj);
    g.w_ = std::move(w);

    g.m_ = g.adj_.size() / 2;
    g.total_weight_ = 0.0;
    g.weighted_ = false;
    for (node v = 0; v < n; ++v)
        for (std::size_t i = g.offsets_[v]; i < g.offsets_[v + 1]; ++i) {
            if (v < g.adj_[i])
                g.total_weight_ += g.w_[i];
            if (g.w_[i] != 1.0)
                g.weighted_ = true;
        }

    g.cumw_.resize(g.adj_.size());
    g.uniform_.assign(n, 1);
    for (node v = 0; v < n; ++v) {
        double acc = 0.0;
        const std::size_t begin = g.offsets_[v], end = g.offsets_[v + 1];
        for (std::size_t i = begin; i < end; ++i) {
            acc += g.w_[i];
            g.cumw_[i] = acc;
            if (g.w_[i] != g.w_[begin])
                g.uniform_[v] = 0;
        }
    }
    return g;
}

double Graph::weighted_degree(node v) const {
    const std::size_t begin = offsets_[v], end = offsets_[v + 1];
    return begin == end ? 0.0 : cumw_[end - 1];
}

bool Graph::has_edge(node u, node v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::edge_weight(node u, node v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        return 0.0;
    return w_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

double volume(const Graph &g) {
    double vol = 0.0;
    for (node v = 0; v < g.num_vertices(); ++v)
        vol += g.weighted_degree(v);
    return vol;
}

AugmentedGraph::AugmentedGraph(const Graph &base, double alpha) : alpha_(alpha) {
    if (alpha <= 0.0 || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be strictly positive");
    const node n = base.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(base.num_edges() + n);
    base.for_edges([&](node u, node v, double w) { edges.push_back({u, v, w * alpha}); });
    for (node v = 0; v < n; ++v)
        edges.push_back({v, n, 1.0});
    star_ = Graph::from_edges(n + 1, std::move(edges));
}

namespace {

bool parse_header_counts(const std::string &line, node &n_out) {
    // recognizes the save_edge_list header: "# n=<n> m=<m> weighted=<0|1>"
    auto pos = line.find("n=");
    if (pos == std::string::npos)
        return false;
    unsigned long long n = 0;
    auto first = line.data() + pos + 2;
    auto last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr == first)
        return false;
    n_out = static_cast<node>(n);
    return true;
}

} // namespace

Graph load_edge_list(std::istream &in, const LoadOptions &opts, LoadStats *stats) {
    std::vector<Edge> edges;
    std::string line;
    count line_no = 0;
    node n_hint = 0;
    LoadStats local;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        if (opts.comment_prefixes.find(line[start]) != std::string::npos) {
            node header_n = 0;
            if (parse_header_counts(line, header_n))
                n_hint = std::max(n_hint, header_n);
            continue;
        }
        std::istringstream ls(line.substr(start));
        long long u = -1, v = -1;
        double w = opts.default_weight;
        if (!(ls >> u >> v))
            throw parse_error("malformed edge line " + std::to_string(line_no) + ": '" + line + "'",
                              line_no);
        std::string token;
        if (ls >> token) {
            char *end = nullptr;
            w = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size())
                throw parse_error("malformed weight on line " + std::to_string(line_no), line_no);
            std::string rest;
            if (ls >> rest)
                throw parse_error("trailing tokens on line " + std::to_string(line_no), line_no);
        }
        if (opts.one_indexed) {
            --u;
            --v;
        }
        if (u < 0 || v < 0)
            throw parse_error("negative vertex id on line " + std::to_string(line_no), line_no);
        if (u >= 0xFFFFFFFFLL || v >= 0xFFFFFFFFLL)
            throw parse_error("vertex id out of range on line " + std::to_string(line_no), line_no);
        if (w <= 0.0 || !std::isfinite(w))
            throw parse_error("nonpositive weight on line " + std::to_string(line_no), line_no);
        if (u == v) {
            ++local.dropped_self_loops;
            continue;
        }
        edges.push_back({static_cast<node>(u), static_cast<node>(v), w});
    }

    if (opts.compact_ids) {
        std::vector<node> ids;
        ids.reserve(edges.size() * 2);
        for (const Edge &e : edges) {
            ids.push_back(e.u);
            ids.push_back(e.v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        auto remap = [&](node x) {
            return static_cast<node>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
        };
        for (Edge &e : edges) {
            e.u = remap(e.u);
            e.v = remap(e.v);
        }
        n_hint = static_cast<node>(ids.size());
    }

    // count undirected duplicates before the merge inside from_edges
    {
        std::vector<std::pair<node, node>> keys;
        keys.reserve(edges.size());
        for (const Edge &e : edges)
            keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 1; i < keys.size(); ++i)
            if (keys[i] == keys[i - 1])
                ++local.merged_duplicates;
    }

    if (stats)
        *stats = local;
    return Graph::from_edges(n_hint, std::move(edges));
}

Graph load_edge_list_file(const std::string &path, const LoadOptions &opts, LoadStats *stats) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in, opts, stats);
}

void save_edge_list(std::ostream &out, const Graph &g) {
    out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << " weighted=" << (g.weighted() ? 1 : 0)
        << "\n";
    char buf[64];
    g.for_edges([&](node u, node v, double w) {
        std::snprintf(buf, sizeof(buf), "%.17g", w);
        out << u << ' ' << v << ' ' << buf << "\n";
    });
}

void save_edge_list_file(const std::string &path, const Graph &g) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    save_edge_list(out, g);
}

} // namespace forestcc
