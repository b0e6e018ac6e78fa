#ifndef FORESTCC_RESULT_IO_HPP
#define FORESTCC_RESULT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "forestcc/forest_approx.hpp"
#include "forestcc/graph.hpp"
#include "forestcc/group_greedy.hpp"

namespace forestcc {

/// On-disk result format: one "# "-prefixed compact-JSON metadata line,
/// then one TSV record per vertex. Doubles are printed with 17 significant
/// digits so a write/read round trip is exact.
struct ResultFile {
    nlohmann::json metadata;
    struct Record {
        node vertex;
        double diag;
        double farness;
        double closeness;
    };
    std::vector<Record> records;
};

nlohmann::json diag_metadata(const DiagResult &dr, const Graph &g);

void write_result(std::ostream &out, const DiagResult &dr, const Graph &g);
void write_result_file(const std::string &path, const DiagResult &dr, const Graph &g);

/// Writes the ranked view: same record shape, rows ordered by descending
/// closeness (ties by vertex id), optionally truncated to the top k.
void write_ranking(std::ostream &out, const DiagResult &dr, const Graph &g,
                   std::optional<std::size_t> top_k);

/// Group selection result: metadata carries the gains; records are
/// (rank, vertex, farness after that selection).
void write_group_result(std::ostream &out, const GroupResult &gr, const Graph &g, double alpha);
void write_group_result_file(const std::string &path, const GroupResult &gr, const Graph &g,
                             double alpha);

ResultFile read_result(std::istream &in);
ResultFile read_result_file(const std::string &path);

std::string format_double(double value); // %.17g

} // namespace forestcc

#endif
