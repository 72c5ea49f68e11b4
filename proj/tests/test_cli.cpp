#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nac/cli.hpp"
#include "nac/fixtures.hpp"
#include "nac/graph.hpp"

using namespace nac;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        if (!l.empty())
            out.push_back(l);
    return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("nac_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

const char* kPrismEdges = "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n0 3\n1 4\n2 5\n";

}  // namespace

TEST_CASE("cli exists") {
    auto r = cli({"exists", "-"}, kPrismEdges);
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 1);
    auto j = nlohmann::json::parse(ls[0]);
    CHECK(j["red"].size() + j["blue"].size() == 9);
    CHECK((j["red"].size() == 6 || j["red"].size() == 3));

    CHECK(cli({"exists", "--g6", to_graph6(fixtures::complete(4))}).code == 1);
    auto s = cli({"exists", "--g6", to_graph6(fixtures::cycle(5)), "--stats"});
    CHECK(s.code == 0);
    REQUIRE(lines(s.out).size() == 2);
    CHECK(nlohmann::json::parse(lines(s.out)[1])["stats"]["found"] == 1);
}

TEST_CASE("cli count, enumerate and oracle agree") {
    CHECK(cli({"count", "--g6", to_graph6(fixtures::cycle(4))}).out == "3\n");
    for (const auto& g : {fixtures::cycle(6), fixtures::prism(), fixtures::grid_ladder(2, 4, false)}) {
        const auto g6 = to_graph6(g);
        const auto count = std::stoul(cli({"count", "--g6", g6}).out);
        CHECK(lines(cli({"enumerate", "--g6", g6}).out).size() == count);
        CHECK(lines(cli({"enumerate", "--g6", g6, "--strategy", "none", "--merge", "shared-vertices"}).out).size() ==
              count);
        CHECK(std::stoul(cli({"oracle", "--g6", g6, "--count"}).out) == count);
        CHECK(cli({"enumerate", "--g6", g6}).out == cli({"enumerate", "--g6", g6}).out);
    }
    CHECK(lines(cli({"enumerate", "--g6", to_graph6(fixtures::cycle(8)), "--limit", "5"}).out).size() == 5);
}

TEST_CASE("cli output uses the input vertex names") {
    auto r = cli({"classes", "-"}, "10 20\n20 30\n10 30\n30 40\n");
    CHECK(r.code == 0);
    CHECK(r.out == "[[[10,20],[20,30],[10,30]],[[30,40]]]\n");
}

TEST_CASE("cli input errors exit 2") {
    CHECK(cli({"exists", "--g6", "C~x"}).code == 2);
    CHECK(cli({"exists", "/nonexistent/file.txt"}).code == 2);
    CHECK(cli({"exists", "-", "--bogus"}, kPrismEdges).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"exists", "-", "--strategy", "magic"}, kPrismEdges).code == 2);
    CHECK(cli({"exists", "-", "--bag-size", "0"}, kPrismEdges).code == 2);
    auto bad = cli({"classes", "-"}, "0 1\n1 x\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(cli({"oracle", "--g6", to_graph6(fixtures::complete(8))}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli reduce") {
    const auto sat = temp_file("sat.cnf", "p cnf 1 1\n1 1 1 0\n");
    const auto unsat = temp_file("unsat.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    auto r = cli({"reduce", "--cnf", sat, "--emit", "graph6", "--verify"});
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    auto g = parse_graph6(ls[0]).graph;
    CHECK(g.vertex_count() == 85 + 89 + 4);
    CHECK(g.max_degree() == 5);
    auto v = nlohmann::json::parse(ls[1]);
    CHECK(v["agree"] == true);
    CHECK(v["decoded"] == nlohmann::json::array({true}));

    auto u = cli({"reduce", "--cnf", unsat, "--verify", "--labels"});
    CHECK(u.code == 0);
    auto uls = lines(u.out);
    REQUIRE(uls.size() == 3);
    auto graph = nlohmann::json::parse(uls[0]);
    auto labels = nlohmann::json::parse(uls[1]);
    CHECK(labels["edge_labels"].size() == graph["edges"].size());
    CHECK(labels["gadgets"].contains("C2"));
    CHECK(nlohmann::json::parse(uls[2])["nac"] == false);

    auto d = cli({"reduce", "--cnf", sat, "--epsilon", "1/4", "--emit", "edgelist"});
    CHECK(d.code == 0);
    auto dg = parse_edge_list(d.out).graph;
    CHECK(4 * dg.edge_count() <= 9 * dg.vertex_count());
    CHECK(cli({"reduce", "--cnf", sat, "--epsilon", "0.25", "--emit", "edgelist"}).out == d.out);
    CHECK(cli({"reduce", "--cnf", sat, "--epsilon", "0.5"}).code == 2);
    CHECK(cli({"reduce", "--cnf", temp_file("short.cnf", "p cnf 2 1\n1 2 0\n")}).code == 2);
    CHECK(cli({"reduce", "--cnf", temp_file("short2.cnf", "p cnf 2 1\n1 2 0\n"), "--pad-clauses"}).code == 0);
    CHECK(cli({"oracle", "--cnf", unsat}).out == "{\"sat\":false}\n");
}

TEST_CASE("cli bench") {
    const auto csv = std::filesystem::temp_directory_path() / "nac_cli_test_bench.csv";
    auto r = cli({"bench", "--family", "cycles", "--param", "n_min=5", "--param", "n_max=7", "--strategy",
                  "naive,neighbors-degree", "--repeats", "2", "--csv", csv.string(), "--group-by", "m"});
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6 + 6);
    auto rec = nlohmann::json::parse(ls[0]);
    CHECK(rec["graph_id"] == "cycles:0");
    CHECK(rec["m"] == 5);
    CHECK(rec["strategy"] == "none");
    CHECK(rec["found"] == 10);
    CHECK(rec["repeats"] == 2);
    CHECK(nlohmann::json::parse(ls[6])["group_by"] == "m");

    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "graph_id,n,m,strategy,merge,bag_size,mean_ms,mask_candidates,cycle_rejections,full_checks,found,timed_out");
    int rows = 0;
    for (std::string l; std::getline(in, l);)
        ++rows;
    CHECK(rows == 6);

    const auto g6 = temp_file("bench.g6", to_graph6(fixtures::cycle(26)) + "\n" + to_graph6(fixtures::prism()) + "\n");
    auto t = cli({"bench", g6, "--strategy", "none", "--no-cycles", "--repeats", "1", "--timeout-ms", "1", "--strict"});
    CHECK(t.code == 1);
    auto tl = lines(t.out);
    REQUIRE(tl.size() == 2);
    CHECK(nlohmann::json::parse(tl[0])["timed_out"] == true);
    CHECK(nlohmann::json::parse(tl[0])["graph_id"] == "nac_cli_test_bench.g6:0");
    auto t2 = cli({"bench", g6, "--strategy", "none", "--no-cycles", "--repeats", "1", "--timeout-ms", "1"});
    CHECK(t2.code == 0);
    auto par = cli({"bench", "--family", "prism-chains", "--param", "t_min=1", "--param", "t_max=4", "--jobs", "3",
                    "--repeats", "1"});
    CHECK(par.code == 0);
    CHECK(lines(par.out).size() == 8);
    CHECK(cli({"bench", "--repeats", "1"}).code == 2);
}
