#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forestcc/dense_oracle.hpp"
#include "forestcc/forest_approx.hpp"
#include "forestcc/generators.hpp"
#include "forestcc/graph.hpp"
#include "forestcc/group_greedy.hpp"
#include "forestcc/jlt.hpp"
#include "forestcc/lap_solver.hpp"
#include "forestcc/metrics.hpp"
#include "forestcc/ust_sampler.hpp"

namespace py = pybind11;
using namespace forestcc;

namespace {

Graph graph_from_edges(node n, const std::vector<std::tuple<node, node, double>> &edges) {
    std::vector<Edge> converted;
    converted.reserve(edges.size());
    for (const auto &[u, v, w] : edges)
        converted.push_back({u, v, w});
    return Graph::from_edges(n, std::move(converted));
}

std::vector<std::tuple<node, node, double>> graph_edges(const Graph &g) {
    std::vector<std::tuple<node, node, double>> out;
    out.reserve(g.num_edges());
    g.for_edges([&](node u, node v, double w) { out.emplace_back(u, v, w); });
    return out;
}

ApproxConfig make_approx_config(double alpha, double eps, double delta, double kappa,
                                std::uint64_t seed, int workers, const std::string &estimator,
                                std::optional<count> tau) {
    ApproxConfig cfg;
    cfg.alpha = alpha;
    cfg.eps = eps;
    cfg.delta = delta;
    cfg.kappa = kappa;
    cfg.seed = seed;
    cfg.workers = workers;
    if (estimator == "paper")
        cfg.estimator = EstimatorMode::paper;
    else if (estimator == "frequency")
        cfg.estimator = EstimatorMode::frequency;
    else
        throw std::invalid_argument("estimator must be 'frequency' or 'paper'");
    cfg.tau_override = tau;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "forest closeness centrality: exact, UST-sampled, and JLT estimators";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"),
             "Build an undirected graph from (u, v, weight) triples; parallel "
             "edges merge by weight, self-loops are dropped.")
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("weighted", &Graph::weighted)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("weighted_degree", &Graph::weighted_degree, py::arg("v"))
        .def("edge_weight", &Graph::edge_weight, py::arg("u"), py::arg("v"))
        .def("edges", &graph_edges)
        .def("volume", [](const Graph &g) { return volume(g); })
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("load_graph",
          [](const std::string &path, bool one_indexed, bool compact_ids) {
              LoadOptions opts;
              opts.one_indexed = one_indexed;
              opts.compact_ids = compact_ids;
              return load_edge_list_file(path, opts);
          },
          py::arg("path"), py::arg("one_indexed") = false, py::arg("compact_ids") = false);
    m.def("save_graph", [](const std::string &path, const Graph &g) { save_edge_list_file(path, g); },
          py::arg("path"), py::arg("graph"));

    m.def("gen_er", &gen_er, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_path", &gen_path, py::arg("n"));
    m.def("gen_star", &gen_star, py::arg("n"));
    m.def("gen_complete", &gen_complete, py::arg("n"));
    m.def("gen_grid", &gen_grid, py::arg("rows"), py::arg("cols"));
    m.def("disjoint_union", [](const std::vector<Graph> &parts) { return disjoint_union(parts); },
          py::arg("parts"));

    m.def("forest_matrix", &forest_matrix, py::arg("graph"), py::arg("alpha") = 1.0,
          py::arg("max_n") = kOracleMaxN, "Dense (alpha L + I)^{-1}.");
    m.def("forest_distance", &forest_distance, py::arg("graph"), py::arg("alpha"), py::arg("u"),
          py::arg("v"), py::arg("max_n") = kOracleMaxN);
    m.def("exact_farness_closeness",
          [](const Graph &g, double alpha) { return exact_farness_closeness(g, alpha); },
          py::arg("graph"), py::arg("alpha") = 1.0);
    m.def("group_farness",
          [](const Graph &g, double alpha, const std::vector<node> &group) {
              return group_farness_exact(augment(g, alpha), group);
          },
          py::arg("graph"), py::arg("alpha"), py::arg("group"),
          "Trace of the inverse of the row/column-deleted augmented Laplacian.");
    m.def("brute_force_best_group",
          [](const Graph &g, double alpha, node k) {
              return brute_force_best_group(augment(g, alpha), k);
          },
          py::arg("graph"), py::arg("alpha"), py::arg("k"));

    py::class_<DiagResult>(m, "DiagResult")
        .def_readonly("method", &DiagResult::method)
        .def_readonly("alpha", &DiagResult::alpha)
        .def_readonly("eps", &DiagResult::eps)
        .def_readonly("delta", &DiagResult::delta)
        .def_readonly("kappa", &DiagResult::kappa)
        .def_readonly("seed", &DiagResult::seed)
        .def_readonly("estimator", &DiagResult::estimator)
        .def_readonly("samples", &DiagResult::samples)
        .def_readonly("solver_residual", &DiagResult::solver_residual)
        .def_readonly("wall_seconds", &DiagResult::wall_seconds)
        .def_readonly("diag", &DiagResult::diag)
        .def_readonly("trace", &DiagResult::trace)
        .def_readonly("farness", &DiagResult::farness)
        .def_readonly("closeness", &DiagResult::closeness)
        .def("__repr__", [](const DiagResult &dr) {
            return "DiagResult(method=" + dr.method + ", n=" + std::to_string(dr.diag.size()) +
                   ")";
        });

    m.def("exact_diag", &exact_diag_forest_matrix, py::arg("graph"), py::arg("alpha") = 1.0,
          py::arg("max_n") = kOracleMaxN);
    m.def("approx_diag",
          [](const Graph &g, double alpha, double eps, double delta, double kappa,
             std::uint64_t seed, int workers, const std::string &estimator,
             std::optional<count> tau) {
              return approx_diag_forest_matrix(
                  g, make_approx_config(alpha, eps, delta, kappa, seed, workers, estimator, tau));
          },
          py::arg("graph"), py::arg("alpha") = 1.0, py::arg("eps") = 0.1, py::arg("delta") = 0.1,
          py::arg("kappa") = 0.5, py::arg("seed") = 1, py::arg("workers") = 0,
          py::arg("estimator") = "frequency", py::arg("tau") = std::nullopt,
          "UST-sampled estimate of diag(Omega) plus farness/closeness.");
    m.def("jlt_diag",
          [](const Graph &g, double alpha, double eps, std::uint64_t seed, int workers,
             double tolerance, std::optional<count> q) {
              JltConfig cfg;
              cfg.eps = eps;
              cfg.seed = seed;
              cfg.workers = workers;
              cfg.solver_tolerance = tolerance;
              cfg.q_override = q;
              return jlt_diag(g, alpha, cfg);
          },
          py::arg("graph"), py::arg("alpha") = 1.0, py::arg("eps") = 0.3, py::arg("seed") = 1,
          py::arg("workers") = 0, py::arg("tolerance") = 1e-8, py::arg("q") = std::nullopt);
    m.def("rank_vertices",
          [](const DiagResult &dr, std::optional<std::size_t> top_k) {
              return rank_vertices(dr, top_k);
          },
          py::arg("result"), py::arg("top_k") = std::nullopt);

    py::class_<GroupResult>(m, "GroupResult")
        .def_readonly("selected", &GroupResult::selected)
        .def_readonly("gains", &GroupResult::gains)
        .def_readonly("final_farness", &GroupResult::final_farness)
        .def_readonly("final_closeness", &GroupResult::final_closeness)
        .def_readonly("wall_seconds", &GroupResult::wall_seconds)
        .def("__repr__", [](const GroupResult &gr) {
            return "GroupResult(k=" + std::to_string(gr.selected.size()) +
                   ", farness=" + std::to_string(gr.final_farness) + ")";
        });

    m.def("greedy_group",
          [](const Graph &g, double alpha, node k) { return greedy_group(g, alpha, k); },
          py::arg("graph"), py::arg("alpha"), py::arg("k"),
          "Greedy group forest closeness maximization with incremental "
          "inverse maintenance.");

    m.def("kendall_tau",
          [](const std::vector<double> &a, const std::vector<double> &b) {
              return kendall_tau(a, b);
          },
          py::arg("a"), py::arg("b"));
    m.def("max_abs_error",
          [](const std::vector<double> &est, const std::vector<double> &ref) {
              return max_abs_error(est, ref);
          },
          py::arg("estimate"), py::arg("reference"));
    m.def("avg_abs_error",
          [](const std::vector<double> &est, const std::vector<double> &ref) {
              return avg_abs_error(est, ref);
          },
          py::arg("estimate"), py::arg("reference"));

    m.def("compute_tau", &compute_tau, py::arg("eps"), py::arg("delta"), py::arg("kappa"),
          py::arg("graph"));
    m.def("compute_eta", &compute_eta, py::arg("alpha"), py::arg("eps"), py::arg("kappa"),
          py::arg("graph"));
    m.def("compute_q", &compute_q, py::arg("eps"), py::arg("n"));

    m.attr("__version__") = "0.1.0";
}
