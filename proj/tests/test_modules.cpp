#include "doctest.h"

#include <algorithm>
#include <random>

#include "cograph/modules.hpp"
#include "cograph/oracle.hpp"
#include "helpers.hpp"

using namespace cograph;

namespace {

BinaryStructure two_k2() { return to_structure(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})); }
BinaryStructure p4() { return to_structure(Graph::path(4)); }
BinaryStructure c4() { return to_structure(Graph::cycle(4)); }

std::vector<VertexSet> family_sets(const StrongFamily& f) {
    std::vector<VertexSet> out;
    for (const auto& n : f.nodes) out.push_back(n.vertices);
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

TEST_CASE("is_module") {
    const auto m = p4();
    CHECK(is_module(m, {}));
    CHECK(is_module(m, {2}));
    CHECK(is_module(m, {0, 1, 2, 3}));
    CHECK_FALSE(is_module(m, {1, 2}));
    CHECK(is_module(two_k2(), {0, 1}));
    CHECK(is_module(two_k2(), {2, 3}));
    CHECK_FALSE(is_module(two_k2(), {0, 2}));
}

TEST_CASE("is_strong_module") {
    CHECK(is_strong_module(c4(), {0, 2}));
    CHECK(is_strong_module(c4(), {1, 3}));
    CHECK(is_strong_module(c4(), {0, 1, 2, 3}));
    CHECK(is_strong_module(c4(), {3}));
    const auto k3 = to_structure(Graph::complete(3));
    CHECK_FALSE(is_strong_module(k3, {0, 1}));
    CHECK_FALSE(is_strong_module(p4(), {1, 2}));
}

TEST_CASE("least strong module and closure") {
    const auto m = two_k2();
    CHECK(least_strong_module(m, {2}) == VertexSet{2});
    CHECK(least_strong_module(m, {0, 1}) == VertexSet{0, 1});
    CHECK(least_strong_module(m, {0, 2}) == VertexSet{0, 1, 2, 3});
    CHECK(module_closure(p4(), {1, 2}) == VertexSet{0, 1, 2, 3});
    CHECK(module_closure(p4(), {}).empty());
    CHECK_THROWS_AS(least_strong_module(m, {}), std::invalid_argument);
}

TEST_CASE("robust modules") {
    CHECK(robust_modules(to_structure(Graph::empty(3))) == std::vector<VertexSet>{{0, 1, 2}, {0}, {1}, {2}});
    CHECK(robust_modules(p4()) == std::vector<VertexSet>{{0, 1, 2, 3}, {0}, {1}, {2}, {3}});
    CHECK(robust_modules(two_k2()) == std::vector<VertexSet>{{0, 1, 2, 3}, {0, 1}, {2, 3}, {0}, {1}, {2}, {3}});
}

TEST_CASE("components and Gallai quotients") {
    CHECK(components_of(two_k2(), {0, 1, 2, 3}) == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK(components_of(to_structure(Graph::complete(4)), {0, 1, 2, 3}).size() == 4);
    CHECK(components_of(p4(), {0, 1, 2, 3}).size() == 4);

    const auto q1 = gallai_quotient(two_k2(), {0, 1, 2, 3});
    CHECK(q1.quotient.size() == 2);
    CHECK(q1.type == GallaiType::constant(0));
    const auto q2 = gallai_quotient(c4(), {0, 1, 2, 3});
    CHECK(q2.classes == std::vector<VertexSet>{{0, 2}, {1, 3}});
    CHECK(q2.type == GallaiType::constant(1));
    const auto q3 = gallai_quotient(p4(), {0, 1, 2, 3});
    CHECK(q3.quotient.size() == 4);
    CHECK(q3.type == GallaiType::prime());

    CHECK_THROWS_AS(components_of(p4(), {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gallai_quotient(p4(), {1}), std::invalid_argument);
}

TEST_CASE("linear quotient of a tournament") {
    // Transitive tournament on 3 vertices: d(x, y) = 1 iff x < y, else 2.
    BinaryStructure m(3, LabelAlphabet{3, 0}, 2);
    for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y) m.set_label(x, y, 1);
    const auto q = gallai_quotient(m, {0, 1, 2});
    CHECK(q.type == GallaiType::linear(1, 2));
    CHECK(q.classes.size() == 3);
    // A 3-cycle tournament is prime.
    BinaryStructure cyc(3, LabelAlphabet{3, 0}, 2);
    cyc.set_label(0, 1, 1);
    cyc.set_label(1, 2, 1);
    cyc.set_label(2, 0, 1);
    CHECK(gallai_quotient(cyc, {0, 1, 2}).type == GallaiType::prime());
    CHECK_THROWS_AS(GallaiType::linear(1, 1), std::invalid_argument);
}

TEST_CASE("strong family JSON") {
    const auto j = strong_family_to_json(strong_family(two_k2()));
    REQUIRE(j["nodes"].size() == 7);
    CHECK(j["nodes"][0]["parent"].is_null());
    CHECK(j["nodes"][0]["gallaiType"]["kind"] == "constant");
    CHECK(j["nodes"][0]["gallaiType"]["symbol"] == 0);
    CHECK(j["nodes"][1]["vertexSubset"] == nlohmann::json::array({0, 1}));
    CHECK(j["nodes"][2]["gallaiType"].is_null());
}

TEST_CASE("production strong family matches enumeration") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const int symbols = std::uniform_int_distribution<int>(2, 3)(rng);
        const BinaryStructure m = round % 2 ? testing::random_structure(rng, n, symbols)
                                            : testing::random_modular_structure(rng, n, symbols);
        const StrongFamily f = strong_family(m);
        REQUIRE(family_sets(f) == oracle::strong_modules(m));
        for (const auto& node : f.nodes) {
            CHECK(is_strong_module(m, node.vertices));
            if (node.vertices.size() < 2) continue;
            CHECK(components_of(m, node.vertices) == oracle::maximal_strong_submodules(m, node.vertices));
            const GallaiQuotient q = gallai_quotient(m, node.vertices);
            for (const auto& s : oracle::strong_modules(q.quotient))
                CHECK((s.size() == 1 || static_cast<int>(s.size()) == q.quotient.size()));
            CHECK((q.type.kind == GallaiType::Kind::Prime) ==
                  (q.quotient.size() >= 3 && oracle::only_trivial_modules(q.quotient)));
        }
        const auto sets = family_sets(f);
        for (const auto& a : oracle::enumerate_modules(m)) {
            if (a.empty()) continue;
            CHECK(is_strong_module(m, a) == (std::find(sets.begin(), sets.end(), a) != sets.end()));
        }
    }
}

TEST_CASE("undirected graphs never give linear quotients") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 200; ++round) {
        const Graph g = testing::random_graph(rng, std::uniform_int_distribution<int>(2, 8)(rng));
        for (const auto& node : strong_family(to_structure(g)).nodes)
            if (node.type) CHECK(node.type->kind != GallaiType::Kind::Linear);
    }
}

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST_CASE("module closure lemmas") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 150; ++round) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const BinaryStructure m = testing::random_modular_structure(rng, n, 3);
        const auto mods = oracle::enumerate_modules(m);
        for (const auto& a : mods)
            for (const auto& b : mods) {
                const VertexSet common = set_intersection(a, b);
                CHECK(is_module(m, common));
                if (!common.empty()) CHECK(is_module(m, set_union(a, b)));
                if (!set_difference(b, a).empty()) CHECK(is_module(m, set_difference(a, b)));
            }
    }
}

TEST_CASE("strong family is laminar and every strong non-singleton is robust") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 150; ++round) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const BinaryStructure m = testing::random_modular_structure(rng, n, 2 + round % 2);
        const auto sets = family_sets(strong_family(m));
        for (Vertex v = 0; v < n; ++v) CHECK(std::find(sets.begin(), sets.end(), VertexSet{v}) != sets.end());
        CHECK(sets.back().size() == static_cast<std::size_t>(n));
        const auto robust = robust_modules(m);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                const VertexSet common = set_intersection(a, b);
                CHECK((common.empty() || common == a || common == b));
            }
        for (const auto& a : sets) CHECK(std::find(robust.begin(), robust.end(), a) != robust.end());
    }
}

TEST_CASE("a module joined to a robust module of matching type is not a module") {
    std::mt19937_64 rng(13);
    int exercised = 0;
    for (int round = 0; round < 300; ++round) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        const BinaryStructure m = testing::random_modular_structure(rng, n, 2 + round % 2);
        const auto mods = oracle::enumerate_modules(m);
        for (const auto& node : strong_family(m).nodes) {
            const VertexSet& y = node.vertices;
            if (y.size() < 2 || static_cast<int>(y.size()) == n) continue;
            const auto t = node.type->symbols();
            for (const auto& x : mods) {
                if (x.empty() || !set_intersection(x, y).empty()) continue;
                std::vector<int> seen{m.label(x[0], y[0]), m.label(y[0], x[0])};
                std::sort(seen.begin(), seen.end());
                seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
                if (seen != t) continue;
                ++exercised;
                CHECK_FALSE(is_module(m, set_union(x, y)));
            }
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("nested robust modules of one type are separated by another type") {
    std::mt19937_64 rng(14);
    for (int round = 0; round < 200; ++round) {
        const int n = std::uniform_int_distribution<int>(3, 8)(rng);
        const BinaryStructure m = testing::random_modular_structure(rng, n, 2 + round % 2);
        const StrongFamily f = strong_family(m);
        for (const auto& a : f.nodes) {
            if (!a.type || a.type->kind == GallaiType::Kind::Prime) continue;
            for (const auto& b : f.nodes) {
                if (!b.type || b.vertices.size() >= a.vertices.size() || !subset(b.vertices, a.vertices)) continue;
                if (b.type->symbols() != a.type->symbols()) continue;
                const bool separated = std::any_of(f.nodes.begin(), f.nodes.end(), [&](const StrongNode& c) {
                    return c.type && c.vertices.size() > b.vertices.size() && c.vertices.size() < a.vertices.size() &&
                           subset(b.vertices, c.vertices) && subset(c.vertices, a.vertices) &&
                           c.type->symbols() != a.type->symbols();
                });
                CHECK(separated);
            }
        }
    }
}
