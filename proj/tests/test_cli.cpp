// CLI behavior tests; the binary path arrives as argv[1] and a scratch
// directory as argv[2].

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "forestcc/result_io.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_scratch;

int run(const std::string &args, const fs::path &stdout_file = {}) {
    std::string cmd = "\"" + g_cli + "\" " + args;
    cmd += stdout_file.empty() ? std::string(" > /dev/null") : " > \"" + stdout_file.string() + "\"";
    cmd += " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("gen then exact diag reproduces the K2 values") {
    const fs::path graph = g_scratch / "k2.tsv";
    const fs::path out = g_scratch / "k2_exact.tsv";
    const fs::path log = g_scratch / "k2_exact.log";
    REQUIRE(run("gen complete 2 -o \"" + graph.string() + "\"") == 0);
    REQUIRE(run("diag \"" + graph.string() + "\" --method exact -o \"" + out.string() + "\"",
                log) == 0);
    CHECK(slurp(log).find("0.666667, 0.666667") != std::string::npos);

    const forestcc::ResultFile rf = forestcc::read_result_file(out.string());
    REQUIRE(rf.records.size() == 2);
    CHECK(rf.records[0].diag == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rf.metadata["method"] == "exact");
}

TEST_CASE("compare of identical files prints 1") {
    const fs::path graph = g_scratch / "cmp_graph.tsv";
    const fs::path out = g_scratch / "cmp_run.tsv";
    const fs::path log = g_scratch / "cmp.log";
    REQUIRE(run("gen er 30 0.2 --seed 9 -o \"" + graph.string() + "\"") == 0);
    REQUIRE(run("diag \"" + graph.string() + "\" --method ust --eps 0.4 --seed 2 -o \"" +
                out.string() + "\"") == 0);
    REQUIRE(run("compare \"" + out.string() + "\" \"" + out.string() + "\" --metric kt", log) == 0);
    CHECK(slurp(log).find("1\n") != std::string::npos);
    REQUIRE(run("compare \"" + out.string() + "\" \"" + out.string() + "\" --metric maxabs", log) ==
            0);
    CHECK(slurp(log).find("0\n") != std::string::npos);
}

TEST_CASE("compare rejects mismatched vertex sets") {
    const fs::path g1 = g_scratch / "mm1.tsv";
    const fs::path g2 = g_scratch / "mm2.tsv";
    const fs::path r1 = g_scratch / "mm1_res.tsv";
    const fs::path r2 = g_scratch / "mm2_res.tsv";
    REQUIRE(run("gen path 4 -o \"" + g1.string() + "\"") == 0);
    REQUIRE(run("gen path 6 -o \"" + g2.string() + "\"") == 0);
    REQUIRE(run("diag \"" + g1.string() + "\" --method exact -o \"" + r1.string() + "\"") == 0);
    REQUIRE(run("diag \"" + g2.string() + "\" --method exact -o \"" + r2.string() + "\"") == 0);
    CHECK(run("compare \"" + r1.string() + "\" \"" + r2.string() + "\" --metric kt") == 1);
}

TEST_CASE("group subcommand selects the star center") {
    const fs::path graph = g_scratch / "star4.tsv";
    const fs::path log = g_scratch / "star4.log";
    REQUIRE(run("gen star 4 -o \"" + graph.string() + "\"") == 0);
    REQUIRE(run("group \"" + graph.string() + "\" -k 1", log) == 0);
    CHECK(slurp(log).find("selected = 0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2, runtime errors with 1") {
    CHECK(run("diag") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("diag /nonexistent/graph.tsv") == 1);
    CHECK(run("gen er 10 -o \"" + (g_scratch / "x.tsv").string() + "\"") == 1); // er needs n and p
}

TEST_CASE("rank honors --top") {
    const fs::path graph = g_scratch / "p3.tsv";
    const fs::path log = g_scratch / "p3_rank.log";
    REQUIRE(run("gen path 3 -o \"" + graph.string() + "\"") == 0);
    REQUIRE(run("rank \"" + graph.string() + "\" --method exact --top 1", log) == 0);
    const std::string text = slurp(log);
    CHECK(text.find("1\t1\t") != std::string::npos); // middle vertex first
    const bool only_one_row = text.find("\n2\t") == std::string::npos;
    CHECK(only_one_row);
}

int main(int argc, char **argv) {
    doctest::Context context;
    if (argc > 1)
        g_cli = argv[1];
    if (argc > 2)
        g_scratch = argv[2];
    else
        g_scratch = fs::temp_directory_path() / "forestcc_cli_tests";
    fs::create_directories(g_scratch);
    context.applyCommandLine(1, argv); // doctest flags unused; binary path is positional
    return context.run();
}
