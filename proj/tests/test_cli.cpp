#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "cograph/cotree.hpp"
#include "cograph/graph_io.hpp"
#include "cograph/sibling.hpp"

using namespace cograph;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("cograph-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    fs::path dir_;
};

std::string term_file(const Workspace& w, const std::string& name, const CographTerm& t) {
    return w.write(name, term_to_json(t).dump());
}

}  // namespace

TEST_CASE("recognize") {
    Workspace w;
    const auto p4 = w.write("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    const auto r = run({"recognize", p4});
    CHECK(r.code == cli::kNegative);
    CHECK(r.out == "not a cograph\nwitness 0 1 2 3\n");
    const auto k3 = w.write("k3.json", R"({"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]})");
    const auto ok = run({"recognize", k3});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out == "cograph\n");
}

TEST_CASE("decompose and rebuild") {
    Workspace w;
    const auto g = w.write("2k2.txt", "4 2\n0 1\n2 3\n");
    const auto r = run({"decompose", g});
    REQUIRE(r.code == cli::kOk);
    const auto tree = nlohmann::json::parse(r.out);
    CHECK(tree["value"] == 0);

    const auto tree_path = w.write("tree.json", r.out);
    const auto back = run({"rebuild", tree_path});
    REQUIRE(back.code == cli::kOk);
    CHECK(parse_graph(back.out) == Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}));
    const auto as_json = run({"rebuild", tree_path, "--format", "json"});
    CHECK(parse_graph(as_json.out) == parse_graph(back.out));

    const auto dot = run({"decompose", g, "--format", "dot"});
    CHECK(dot.code == cli::kOk);
    CHECK(dot.out == run({"decompose", g, "--format", "dot"}).out);

    const auto p4 = w.write("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    CHECK(run({"decompose", p4}).code == cli::kNegative);

    const auto bad = w.write("bad.json", R"({"value": 1, "children": [{"value": 1, "children": [{"leaf": 0}, {"leaf": 1}]}, {"leaf": 2}]})");
    CHECK(run({"rebuild", bad}).code == cli::kUsage);
}

TEST_CASE("rebuild after decompose is the identity on cographs") {
    Workspace w;
    std::mt19937_64 rng(61);
    for (int round = 0; round < 30; ++round) {
        const Graph g = graph_of(random_valued_tree(rng, std::uniform_int_distribution<int>(1, 12)(rng)));
        const auto tree = run({"decompose", w.write("g.txt", format_edge_list(g))});
        REQUIRE(tree.code == cli::kOk);
        const auto back = run({"rebuild", w.write("t.json", tree.out)});
        REQUIRE(back.code == cli::kOk);
        CHECK(canonical_code(decomposition_tree(parse_graph(back.out))) == canonical_code(decomposition_tree(g)));
    }
}

TEST_CASE("classify") {
    Workspace w;
    const auto omega_k2 = normalize(CographTerm::dsum({{CographTerm::clique(Multiplicity::finite(2)), Multiplicity::infinite()}}));
    const auto r = run({"classify", term_file(w, "t.json", omega_k2)});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "Infinite: IncreasingComponentChain\nclasses: omega\n");
    const auto k = run({"classify", term_file(w, "k.json", CographTerm::clique(Multiplicity::infinite()))});
    CHECK(k.out == "One\nclasses: 1\n");
}

TEST_CASE("embed") {
    Workspace w;
    const auto k2 = w.write("k2.txt", "2 1\n0 1\n");
    const auto p4 = w.write("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    CHECK(run({"embed", k2, p4}).code == cli::kOk);
    const auto no = run({"embed", p4, k2});
    CHECK(no.code == cli::kNegative);
    CHECK(no.out == "does not embed\n");
    const auto k3 = w.write("k3.txt", format_edge_list(Graph::complete(3)));
    const auto c9 = w.write("c9.txt", format_edge_list(Graph::cycle(9)));
    CHECK(run({"embed", k3, c9}).code == cli::kNegative);
    CHECK(run({"embed", k3, c9, "--budget", "1"}).code == cli::kBudget);

    const auto a = term_file(w, "a.json", CographTerm::clique(Multiplicity::finite(3)));
    const auto b = term_file(w, "b.json", CographTerm::clique(Multiplicity::infinite()));
    CHECK(run({"embed", "--terms", a, b}).code == cli::kOk);
    CHECK(run({"embed", "--terms", b, a}).code == cli::kNegative);
}

TEST_CASE("chain") {
    Workspace w;
    const auto om = w.write("om.json", R"({"segments":[{"kind":"omegastar","word":[0]}]})");
    const auto om01 = w.write("om01.json", R"({"segments":[{"kind":"omegastar","word":[0,1]}]})");
    const auto ab = w.write("ab.json", R"({"segments":[{"kind":"finite","word":[0,1]}]})");
    CHECK(run({"chain", "embed", om, om01}).code == cli::kOk);
    CHECK(run({"chain", "embed", om01, om}).code == cli::kNegative);
    CHECK(run({"chain", "indecomposable", om}).out == "indecomposable\n");
    CHECK(run({"chain", "indecomposable", ab}).code == cli::kNegative);
    const auto prod = run({"chain", "product", ab, "--n", "2"});
    CHECK(nlohmann::json::parse(prod.out)["segments"][0]["word"] == nlohmann::json::array({0, 0, 1, 1}));
    CHECK(run({"chain", "decompose", ab}).out == R"([{"segments":[{"kind":"finite","word":[0]}]},{"segments":[{"kind":"finite","word":[1]}]}])"
                                                 "\n");
    CHECK(run({"chain", "left-segment", ab}).code == cli::kUsage);
    CHECK(run({"chain", "sum", ab}).code == cli::kUsage);
    CHECK(run({"chain", "frobnicate", ab}).code == cli::kUsage);
    const auto order = w.write("q.json", R"({"size": 2, "leq": [[0, 1]]})");
    const auto aa = w.write("aa.json", R"({"segments":[{"kind":"finite","word":[0,0]}]})");
    const auto bb = w.write("bb.json", R"({"segments":[{"kind":"finite","word":[1,1]}]})");
    CHECK(run({"chain", "embed", aa, bb}).code == cli::kNegative);
    CHECK(run({"chain", "embed", aa, bb, "--order", order}).code == cli::kOk);
}

TEST_CASE("family") {
    const auto r = run({"family", "--anchors", "4", "--f", "10", "--verify"});
    CHECK(r.code == cli::kOk);
    CHECK(r.err.find("decoded f: 10") != std::string::npos);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["positions"].size() == 4 * 4 + 4);
    CHECK(run({"family", "--f", "1"}).out == run({"family", "--f", "1"}).out);
    CHECK(run({"family", "--random-block", "--seed", "3"}).out == run({"family", "--random-block", "--seed", "3"}).out);
    CHECK(run({"family", "--anchors", "1", "--f", "11"}).code == cli::kUsage);
    CHECK(run({"family", "--f", "12"}).code == cli::kUsage);
    CHECK(run({"family", "--emit", "graph", "--anchors", "2"}).out.find('\n') != std::string::npos);
}

TEST_CASE("oracle") {
    Workspace w;
    const auto c4 = w.write("c4.txt", format_edge_list(Graph::cycle(4)));
    const auto r = run({"oracle", c4});
    CHECK(r.code == cli::kOk);
    std::istringstream lines(r.out);
    int count = 0;
    for (std::string line; std::getline(lines, line); ++count) CHECK(nlohmann::json::parse(line)["agree"] == true);
    CHECK(count >= 4);
    CHECK(run({"oracle", "--random", "20", "--max-n", "6"}).code == cli::kOk);
    CHECK(run({"oracle"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
    Workspace w;
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"recognize", "/nonexistent/file"}).code == cli::kUsage);
    CHECK(run({"recognize", w.write("junk.txt", "3 1\n0 7\n")}).code == cli::kUsage);
    CHECK(run({"classify", w.write("junk.json", "{not json")}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}
