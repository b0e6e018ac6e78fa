#include "forestcc/result_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace forestcc {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

nlohmann::json diag_metadata(const DiagResult &dr, const Graph &g) {
    nlohmann::json meta;
    meta["method"] = dr.method;
    meta["n"] = g.num_vertices();
    meta["m"] = g.num_edges();
    meta["weighted"] = g.weighted();
    meta["alpha"] = dr.alpha;
    if (dr.method != "exact") {
        meta["eps"] = dr.eps;
        meta["seed"] = dr.seed;
        meta["threads"] = dr.workers;
        meta["samples"] = dr.samples;
        meta["solver_tolerance"] = dr.solver_tolerance;
        meta["solver_residual"] = dr.solver_residual;
        meta["solver_iterations"] = dr.solver_iterations;
    }
    if (dr.method == "ust") {
        meta["delta"] = dr.delta;
        meta["kappa"] = dr.kappa;
        meta["estimator"] = dr.estimator;
    }
    meta["trace"] = dr.trace;
    meta["wall_seconds"] = dr.wall_seconds;
    return meta;
}

namespace {

void write_record(std::ostream &out, node v, double diag, double farness, double closeness) {
    out << v << '\t' << format_double(diag) << '\t' << format_double(farness) << '\t'
        << format_double(closeness) << '\n';
}

} // namespace

void write_result(std::ostream &out, const DiagResult &dr, const Graph &g) {
    out << "# " << diag_metadata(dr, g).dump() << '\n';
    for (Eigen::Index v = 0; v < dr.diag.size(); ++v)
        write_record(out, static_cast<node>(v), dr.diag(v), dr.farness(v), dr.closeness(v));
}

void write_result_file(const std::string &path, const DiagResult &dr, const Graph &g) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    write_result(out, dr, g);
}

void write_ranking(std::ostream &out, const DiagResult &dr, const Graph &g,
                   std::optional<std::size_t> top_k) {
    nlohmann::json meta = diag_metadata(dr, g);
    meta["ranked"] = true;
    if (top_k)
        meta["top"] = *top_k;
    out << "# " << meta.dump() << '\n';
    for (const auto &[v, closeness] : rank_vertices(dr, top_k))
        write_record(out, v, dr.diag(v), dr.farness(v), closeness);
}

void write_group_result(std::ostream &out, const GroupResult &gr, const Graph &g, double alpha) {
    nlohmann::json meta;
    meta["method"] = "group";
    meta["n"] = g.num_vertices();
    meta["m"] = g.num_edges();
    meta["alpha"] = alpha;
    meta["k"] = gr.selected.size();
    meta["final_farness"] = gr.final_farness;
    meta["final_closeness"] = gr.final_closeness;
    meta["gains"] = gr.gains;
    meta["wall_seconds"] = gr.wall_seconds;
    out << "# " << meta.dump() << '\n';

    // reconstruct the farness after each selection by undoing the gains
    double farness = gr.final_farness;
    std::vector<double> after(gr.selected.size());
    for (std::size_t i = gr.selected.size(); i-- > 0;) {
        after[i] = farness;
        if (i > 0)
            farness += gr.gains[i - 1];
    }
    for (std::size_t i = 0; i < gr.selected.size(); ++i)
        out << i + 1 << '\t' << gr.selected[i] << '\t' << format_double(after[i]) << '\n';
}

void write_group_result_file(const std::string &path, const GroupResult &gr, const Graph &g,
                             double alpha) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    write_group_result(out, gr, g, alpha);
}

ResultFile read_result(std::istream &in) {
    ResultFile rf;
    std::string line;
    bool have_meta = false;
    count line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (!have_meta && line.size() > 1) {
                const auto body = line.substr(1);
                const auto start = body.find_first_not_of(" \t");
                if (start != std::string::npos && body[start] == '{') {
                    rf.metadata = nlohmann::json::parse(body.substr(start));
                    have_meta = true;
                }
            }
            continue;
        }
        std::istringstream ls(line);
        ResultFile::Record rec{};
        std::string d, f, c;
        if (!(ls >> rec.vertex >> d >> f >> c))
            throw parse_error("malformed result record on line " + std::to_string(line_no), line_no);
        // strtod, not stream extraction: the writer may emit "inf"
        auto to_double = [&](const std::string &token) {
            char *end = nullptr;
            const double value = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size())
                throw parse_error("malformed number '" + token + "' on line " +
                                      std::to_string(line_no),
                                  line_no);
            return value;
        };
        rec.diag = to_double(d);
        rec.farness = to_double(f);
        rec.closeness = to_double(c);
        rf.records.push_back(rec);
    }
    return rf;
}

ResultFile read_result_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open result file: " + path);
    return read_result(in);
}

} // namespace forestcc
