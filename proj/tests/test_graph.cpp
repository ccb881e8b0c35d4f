#include "doctest.h"

#include <random>

#include "cograph/errors.hpp"
#include "cograph/graph.hpp"
#include "cograph/graph_io.hpp"
#include "cograph/oracle.hpp"
#include "helpers.hpp"

using namespace cograph;

namespace {

Graph k(int n) { return Graph::complete(n); }
Graph kbar(int n) { return Graph::empty(n); }

}  // namespace

TEST_CASE("complement") {
    CHECK(complement(k(3)) == kbar(3));
    CHECK(complement(complement(Graph::path(4))) == Graph::path(4));
    const std::vector<Graph> two_k2{k(2), k(2)};
    CHECK(oracle::isomorphic(complement(Graph::cycle(4)), direct_sum(two_k2)));
}

TEST_CASE("direct and complete sums") {
    {
        const std::vector<Graph> parts{k(1), k(1)};
        CHECK(direct_sum(parts) == kbar(2));
        CHECK(complete_sum(parts) == k(2));
    }
    {
        const std::vector<Graph> parts{k(2), k(2)};
        const Graph g = direct_sum(parts);
        CHECK(g.size() == 4);
        CHECK(g.edge_count() == 2);
    }
    {
        const std::vector<Graph> parts{k(3), kbar(2)};
        const Graph g = direct_sum(parts);
        CHECK(g.size() == 5);
        CHECK(g.edge_count() == 3);
        const auto comps = connected_components(g);
        CHECK(comps.size() == 3);
        CHECK(std::count_if(comps.begin(), comps.end(), [](const VertexSet& c) { return c.size() > 1; }) == 1);
    }
    {
        const std::vector<Graph> parts{kbar(2), kbar(2)};
        CHECK(oracle::isomorphic(complete_sum(parts), Graph::cycle(4)));
        const std::vector<Graph> kk{k(2), k(1)};
        CHECK(complete_sum(kk) == k(3));
    }
    const std::vector<Graph> single{Graph::path(3)};
    CHECK(direct_sum(single) == Graph::path(3));
    CHECK_THROWS_AS(direct_sum(std::vector<Graph>{}), std::invalid_argument);
    CHECK_THROWS_AS(complete_sum(std::vector<Graph>{}), std::invalid_argument);
}

TEST_CASE("labelled sum") {
    CHECK(labelled_sum({{k(1), 1}, {k(1), 0}}) == k(2));
    const std::vector<Graph> k2k1{k(2), k(1)};
    CHECK(labelled_sum({{k(2), 0}, {k(1), 1}}) == direct_sum(k2k1));
    // Bits (1, 0, .): vertex 0 sees 1 and 2; vertex 1 does not see 2.
    const Graph g = labelled_sum({{k(1), 1}, {k(1), 0}, {k(1), 0}});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(oracle::isomorphic(g, Graph::path(3)));
}

TEST_CASE("lexicographic sum") {
    const std::vector<Graph> parts{kbar(2), kbar(2)};
    CHECK(oracle::isomorphic(lex_sum(k(2), parts), Graph::cycle(4)));
    const std::vector<Graph> singles(5, k(1));
    CHECK(lex_sum(kbar(5), singles) == kbar(5));
    const std::vector<Graph> four(4, k(1));
    CHECK(lex_sum(Graph::path(4), four) == Graph::path(4));
    const std::vector<Graph> short_parts{k(1)};
    CHECK_THROWS_AS(lex_sum(k(2), short_parts), std::invalid_argument);
}

TEST_CASE("cograph recognition") {
    CHECK_FALSE(is_cograph(Graph::path(4)));
    CHECK(is_cograph(k(3)));
    CHECK_FALSE(is_cograph(Graph::cycle(5)));
    CHECK(*find_induced_p4(Graph::path(4)) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("induced embedding") {
    CHECK(embeds(k(2), Graph::path(4)));
    CHECK_FALSE(embeds(Graph::cycle(4), Graph::path(4)));
    const Graph g = Graph::cycle(6);
    CHECK(embeds(g, g));
    CHECK_THROWS_AS(embeds(kbar(12), kbar(24), 10), BudgetExceeded);
}

TEST_CASE("connected components") {
    const std::vector<Graph> parts{k(2), k(2)};
    CHECK(connected_components(direct_sum(parts)).size() == 2);
    CHECK(connected_components(kbar(3)).size() == 3);
    CHECK(connected_components(Graph::cycle(4)).size() == 1);
}

TEST_CASE("sum identities on random graphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        std::vector<Graph> parts;
        const int count = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < count; ++i) parts.push_back(testing::random_graph(rng, std::uniform_int_distribution<int>(1, 4)(rng)));
        std::vector<Graph> comps;
        for (const auto& p : parts) comps.push_back(complement(p));
        CHECK(complement(direct_sum(parts)) == complete_sum(comps));
        const Graph g = parts.front();
        CHECK(complement(complement(g)) == g);
        if (parts.size() >= 2) {
            const std::vector<Graph> two{parts[0], parts[1]};
            CHECK(labelled_sum({{parts[0], 1}, {parts[1], 0}}) == complete_sum(two));
            CHECK(labelled_sum({{parts[0], 0}, {parts[1], 1}}) == direct_sum(two));
        }
        const Graph index = testing::random_graph(rng, 5);
        const std::vector<Graph> singles(5, k(1));
        CHECK(lex_sum(index, singles) == index);
    }
}

TEST_CASE("embedding is reflexive and transitive") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const Graph a = testing::random_graph(rng, 3), b = testing::random_graph(rng, 5), c = testing::random_graph(rng, 7);
        CHECK(embeds(a, a));
        CHECK(embeds(a, b) == oracle::embeds(a, b));
        CHECK(embeds(b, c) == oracle::embeds(b, c));
        if (embeds(a, b) && embeds(b, c)) CHECK(embeds(a, c));
    }
}

TEST_CASE("cograph iff complement is, and P4 search agrees with brute force") {
    for (int n = 1; n <= 6; ++n) {
        const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            const Graph g = testing::graph_from_mask(n, mask);
            REQUIRE(is_cograph(g) == is_cograph(complement(g)));
            REQUIRE(find_induced_p4(g) == oracle::find_p4(g));
        }
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const Graph g = testing::random_graph(rng, 7);
        CHECK(is_cograph(g) == is_cograph(complement(g)));
    }
}

TEST_CASE("edge list and JSON formats") {
    const Graph g = Graph::path(4);
    CHECK(format_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(parse_graph("{\"n\": 2, \"edges\": [[0, 1]]}") == k(2));
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), FormatError);
    CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0]]}"), FormatError);
    CHECK_THROWS_AS(parse_graph("{oops"), FormatError);
}
