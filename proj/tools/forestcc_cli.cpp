// forestcc: forest closeness centrality toolkit
//
// Subcommands: diag, rank, group, compare, gen, bench. Structured results go
// to the -o path (TSV records behind a JSON metadata line); a short summary
// is printed to stdout. Exit codes: 0 success, 1 runtime error, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "forestcc/dense_oracle.hpp"
#include "forestcc/forest_approx.hpp"
#include "forestcc/generators.hpp"
#include "forestcc/graph.hpp"
#include "forestcc/group_greedy.hpp"
#include "forestcc/jlt.hpp"
#include "forestcc/metrics.hpp"
#include "forestcc/result_io.hpp"

namespace fcc = forestcc;

namespace {

struct MethodFlags {
    std::string method = "ust";
    double alpha = 1.0;
    double eps = 0.1;
    double delta = 0.1;
    double kappa = 0.5;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string estimator = "frequency";
    double jlt_tolerance = 1e-8;
};

void add_method_flags(CLI::App *cmd, MethodFlags &flags) {
    cmd->add_option("--method", flags.method, "exact | ust | jlt")
        ->check(CLI::IsMember({"exact", "ust", "jlt"}))
        ->capture_default_str();
    cmd->add_option("--alpha", flags.alpha, "forest parameter alpha > 0")->capture_default_str();
    cmd->add_option("--eps", flags.eps, "error bound in (0,1)")->capture_default_str();
    cmd->add_option("--delta", flags.delta, "failure probability in (0,1)")->capture_default_str();
    cmd->add_option("--kappa", flags.kappa, "solver/sampling error split in (0,1)")
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "random seed")->capture_default_str();
    cmd->add_option("--threads", flags.threads,
                    "worker threads (0: OpenMP default, honors OMP_NUM_THREADS)")
        ->capture_default_str();
    cmd->add_option("--estimator", flags.estimator, "ust diagonal estimator")
        ->check(CLI::IsMember({"frequency", "paper"}))
        ->capture_default_str();
    cmd->add_option("--jlt-tolerance", flags.jlt_tolerance, "solver tolerance for jlt")
        ->capture_default_str();
}

fcc::DiagResult run_method(const fcc::Graph &g, const MethodFlags &flags) {
    if (flags.method == "exact")
        return fcc::exact_diag_forest_matrix(g, flags.alpha);
    if (flags.method == "jlt") {
        fcc::JltConfig cfg;
        cfg.eps = flags.eps;
        cfg.seed = flags.seed;
        cfg.workers = flags.threads;
        cfg.solver_tolerance = flags.jlt_tolerance;
        return fcc::jlt_diag(g, flags.alpha, cfg);
    }
    fcc::ApproxConfig cfg;
    cfg.alpha = flags.alpha;
    cfg.eps = flags.eps;
    cfg.delta = flags.delta;
    cfg.kappa = flags.kappa;
    cfg.seed = flags.seed;
    cfg.workers = flags.threads;
    cfg.estimator =
        flags.estimator == "paper" ? fcc::EstimatorMode::paper : fcc::EstimatorMode::frequency;
    return fcc::approx_diag_forest_matrix(g, cfg);
}

void print_summary(const fcc::DiagResult &dr, const fcc::Graph &g) {
    std::printf("method=%s n=%u m=%llu alpha=%g", dr.method.c_str(), g.num_vertices(),
                static_cast<unsigned long long>(g.num_edges()), dr.alpha);
    if (dr.method != "exact")
        std::printf(" eps=%g seed=%llu samples=%llu residual=%.3g", dr.eps,
                    static_cast<unsigned long long>(dr.seed),
                    static_cast<unsigned long long>(dr.samples), dr.solver_residual);
    std::printf(" wall=%.3fs\n", dr.wall_seconds);
    if (g.num_vertices() <= 8) {
        std::printf("diag = (");
        for (Eigen::Index v = 0; v < dr.diag.size(); ++v)
            std::printf("%s%g", v ? ", " : "", dr.diag(v));
        std::printf(")\n");
    }
    std::printf("trace estimate = %g\n", dr.trace);
}

std::vector<double> parse_grid(const std::string &csv) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        values.push_back(std::stod(token));
    if (values.empty())
        throw std::runtime_error("--eps-grid: empty grid");
    return values;
}

std::vector<double> column(const Eigen::VectorXd &v) {
    return {v.data(), v.data() + v.size()};
}

} // namespace

int run_main(int argc, char **argv) {
    CLI::App app{"forest closeness centrality toolkit"};
    app.require_subcommand(1);

    // diag -----------------------------------------------------------------
    auto *diag = app.add_subcommand("diag", "estimate diag of the forest matrix plus scores");
    std::string diag_graph, diag_out;
    MethodFlags diag_flags;
    diag->add_option("graph", diag_graph, "edge list file")->required();
    add_method_flags(diag, diag_flags);
    diag->add_option("-o,--output", diag_out, "result file path");

    // rank -----------------------------------------------------------------
    auto *rank = app.add_subcommand("rank", "rank vertices by forest closeness");
    std::string rank_graph, rank_out;
    MethodFlags rank_flags;
    std::size_t rank_top = 0;
    rank->add_option("graph", rank_graph, "edge list file")->required();
    add_method_flags(rank, rank_flags);
    rank->add_option("--top", rank_top, "print only the top K vertices");
    rank->add_option("-o,--output", rank_out, "result file path (rank order)");

    // group ----------------------------------------------------------------
    auto *group = app.add_subcommand("group", "greedy maximum group forest closeness");
    std::string group_graph, group_out;
    double group_alpha = 1.0;
    fcc::node group_k = 1;
    group->add_option("graph", group_graph, "edge list file")->required();
    group->add_option("-k,--group-size", group_k, "vertices to select")->required();
    group->add_option("--alpha", group_alpha, "forest parameter alpha > 0")->capture_default_str();
    group->add_option("-o,--output", group_out, "result file path");

    // compare ----------------------------------------------------------------
    auto *compare = app.add_subcommand("compare", "compare two result files");
    std::string cmp_a, cmp_b, cmp_metric = "kt";
    compare->add_option("a", cmp_a, "result file")->required();
    compare->add_option("b", cmp_b, "result file")->required();
    compare->add_option("--metric", cmp_metric, "kt | maxabs | avgabs")
        ->check(CLI::IsMember({"kt", "maxabs", "avgabs"}))
        ->capture_default_str();

    // gen --------------------------------------------------------------------
    auto *gen = app.add_subcommand("gen", "generate a synthetic graph");
    std::string gen_model, gen_out;
    std::vector<double> gen_params;
    std::uint64_t gen_seed = 1;
    gen->add_option("model", gen_model, "er | path | star | complete | grid")
        ->check(CLI::IsMember({"er", "path", "star", "complete", "grid"}))
        ->required();
    gen->add_option("params", gen_params, "model parameters (er: n p; grid: rows cols; else: n)");
    gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
    gen->add_option("-o,--output", gen_out, "edge list output path")->required();

    // bench ------------------------------------------------------------------
    auto *bench = app.add_subcommand("bench", "accuracy/time table for ust and jlt");
    std::string bench_graph, bench_out, bench_methods = "ust,jlt";
    std::string bench_grid = "0.05,0.1,0.2,0.3,0.4,0.5";
    double bench_alpha = 1.0;
    std::uint64_t bench_seed = 1;
    int bench_threads = 0;
    bench->add_option("graph", bench_graph, "edge list file")->required();
    bench->add_option("--methods", bench_methods, "comma list of ust,jlt")->capture_default_str();
    bench->add_option("--eps-grid", bench_grid, "comma list of eps values")->capture_default_str();
    bench->add_option("--alpha", bench_alpha, "forest parameter")->capture_default_str();
    bench->add_option("--seed", bench_seed, "random seed")->capture_default_str();
    bench->add_option("--threads", bench_threads, "worker threads")->capture_default_str();
    bench->add_option("-o,--output", bench_out, "TSV table path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) // --help and friends
            return app.exit(e);
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    try {
        if (*diag) {
            const fcc::Graph g = fcc::load_edge_list_file(diag_graph);
            const fcc::DiagResult dr = run_method(g, diag_flags);
            print_summary(dr, g);
            if (!diag_out.empty())
                fcc::write_result_file(diag_out, dr, g);
        } else if (*rank) {
            const fcc::Graph g = fcc::load_edge_list_file(rank_graph);
            const fcc::DiagResult dr = run_method(g, rank_flags);
            const std::optional<std::size_t> top =
                rank->count("--top") ? std::optional<std::size_t>(rank_top) : std::nullopt;
            const auto ranking = fcc::rank_vertices(dr, top);
            std::printf("rank\tvertex\tcloseness\n");
            for (std::size_t i = 0; i < ranking.size(); ++i)
                std::printf("%zu\t%u\t%s\n", i + 1, ranking[i].first,
                            fcc::format_double(ranking[i].second).c_str());
            if (!rank_out.empty()) {
                std::ofstream out(rank_out);
                if (!out)
                    throw std::runtime_error("cannot open output file: " + rank_out);
                fcc::write_ranking(out, dr, g, top);
            }
        } else if (*group) {
            const fcc::Graph g = fcc::load_edge_list_file(group_graph);
            const fcc::GroupResult gr = fcc::greedy_group(g, group_alpha, group_k);
            std::printf("selected =");
            for (fcc::node v : gr.selected)
                std::printf(" %u", v);
            std::printf("\ngroup farness = %g\ngroup closeness = %g\nwall = %.3fs\n",
                        gr.final_farness, gr.final_closeness, gr.wall_seconds);
            if (!group_out.empty())
                fcc::write_group_result_file(group_out, gr, g, group_alpha);
        } else if (*compare) {
            const fcc::ResultFile a = fcc::read_result_file(cmp_a);
            const fcc::ResultFile b = fcc::read_result_file(cmp_b);
            if (a.records.size() != b.records.size())
                throw std::runtime_error("result files cover different vertex sets");
            const std::size_t n = a.records.size();
            std::vector<double> xa(n), xb(n);
            std::vector<char> seen_a(n, 0), seen_b(n, 0);
            for (const auto &rec : a.records) {
                if (rec.vertex >= n)
                    throw std::runtime_error("result files cover different vertex sets");
                xa[rec.vertex] = cmp_metric == "kt" ? rec.closeness : rec.diag;
                seen_a[rec.vertex] = 1;
            }
            for (const auto &rec : b.records) {
                if (rec.vertex >= n)
                    throw std::runtime_error("result files cover different vertex sets");
                xb[rec.vertex] = cmp_metric == "kt" ? rec.closeness : rec.diag;
                seen_b[rec.vertex] = 1;
            }
            for (std::size_t v = 0; v < n; ++v)
                if (!seen_a[v] || !seen_b[v])
                    throw std::runtime_error("result files cover different vertex sets");
            double value = 0.0;
            if (cmp_metric == "kt")
                value = fcc::kendall_tau(xa, xb);
            else if (cmp_metric == "maxabs")
                value = fcc::max_abs_error(xa, xb);
            else
                value = fcc::avg_abs_error(xa, xb);
            std::printf("%s\n", fcc::format_double(value).c_str());
        } else if (*gen) {
            fcc::Graph g;
            auto need = [&](std::size_t n_params) {
                if (gen_params.size() != n_params)
                    throw std::runtime_error("model '" + gen_model + "' expects " +
                                             std::to_string(n_params) + " parameter(s)");
            };
            if (gen_model == "er") {
                need(2);
                g = fcc::gen_er(static_cast<fcc::node>(gen_params[0]), gen_params[1], gen_seed);
            } else if (gen_model == "path") {
                need(1);
                g = fcc::gen_path(static_cast<fcc::node>(gen_params[0]));
            } else if (gen_model == "star") {
                need(1);
                g = fcc::gen_star(static_cast<fcc::node>(gen_params[0]));
            } else if (gen_model == "complete") {
                need(1);
                g = fcc::gen_complete(static_cast<fcc::node>(gen_params[0]));
            } else {
                need(2);
                g = fcc::gen_grid(static_cast<fcc::node>(gen_params[0]),
                                  static_cast<fcc::node>(gen_params[1]));
            }
            fcc::save_edge_list_file(gen_out, g);
            std::printf("n=%u m=%llu -> %s\n", g.num_vertices(),
                        static_cast<unsigned long long>(g.num_edges()), gen_out.c_str());
        } else if (*bench) {
            const fcc::Graph g = fcc::load_edge_list_file(bench_graph);
            const fcc::DiagResult exact = fcc::exact_diag_forest_matrix(g, bench_alpha);
            const std::vector<double> grid = parse_grid(bench_grid);

            std::ofstream out(bench_out);
            if (!out)
                throw std::runtime_error("cannot open output file: " + bench_out);
            out << "method\teps\tsamples\twall_seconds\tmax_abs_err\tavg_abs_err\tkendall_tau\n";
            auto emit = [&](const fcc::DiagResult &dr) {
                const double max_err = fcc::max_abs_error(column(dr.diag), column(exact.diag));
                out << dr.method << '\t' << dr.eps << '\t' << dr.samples << '\t'
                    << fcc::format_double(dr.wall_seconds) << '\t'
                    << fcc::format_double(max_err) << '\t'
                    << fcc::format_double(fcc::avg_abs_error(column(dr.diag), column(exact.diag)))
                    << '\t'
                    << fcc::format_double(
                           fcc::kendall_tau(column(dr.closeness), column(exact.closeness)))
                    << '\n';
                std::printf("%s eps=%g samples=%llu wall=%.3fs maxerr=%.4f\n", dr.method.c_str(),
                            dr.eps, static_cast<unsigned long long>(dr.samples), dr.wall_seconds,
                            max_err);
            };
            const bool want_ust = bench_methods.find("ust") != std::string::npos;
            const bool want_jlt = bench_methods.find("jlt") != std::string::npos;
            for (double eps : grid) {
                if (want_ust) {
                    fcc::ApproxConfig cfg;
                    cfg.alpha = bench_alpha;
                    cfg.eps = eps;
                    cfg.seed = bench_seed;
                    cfg.workers = bench_threads;
                    emit(fcc::approx_diag_forest_matrix(g, cfg));
                }
                if (want_jlt) {
                    fcc::JltConfig cfg;
                    cfg.eps = eps;
                    cfg.seed = bench_seed;
                    cfg.workers = bench_threads;
                    emit(fcc::jlt_diag(g, bench_alpha, cfg));
                }
            }
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

int main(int argc, char **argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
