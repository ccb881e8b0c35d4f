#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/graph.hpp"

namespace testing {

inline cograph::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    cograph::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Graph number `mask` on n vertices: bit k is the k-th pair in (u, v) u < v order.
inline cograph::Graph graph_from_mask(int n, unsigned mask) {
    cograph::Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (mask & (1u << k)) g.add_edge(u, v);
    return g;
}

inline cograph::BinaryStructure random_structure(std::mt19937_64& rng, int n, int symbols) {
    cograph::BinaryStructure m(n, cograph::LabelAlphabet{symbols, 0}, 0);
    std::uniform_int_distribution<int> pick(0, symbols - 1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) m.set_label(x, y, pick(rng));
    return m;
}

// Random binary structure with planted modules: a random substitution of
// small random structures into a random quotient, so non-trivial modules
// actually occur.
inline cograph::BinaryStructure random_modular_structure(std::mt19937_64& rng, int n, int symbols) {
    if (n <= 2) return random_structure(rng, n, symbols);
    std::uniform_int_distribution<int> parts_dist(2, std::max(2, n - 1));
    const int parts = std::min(n, parts_dist(rng));
    std::vector<int> owner(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) owner[static_cast<std::size_t>(v)] = v < parts ? v : std::uniform_int_distribution<int>(0, parts - 1)(rng);
    std::shuffle(owner.begin(), owner.end(), rng);
    const cograph::BinaryStructure q = random_structure(rng, parts, symbols);
    cograph::BinaryStructure inner = random_structure(rng, n, symbols);
    cograph::BinaryStructure m(n, cograph::LabelAlphabet{symbols, 0}, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const int ox = owner[static_cast<std::size_t>(x)], oy = owner[static_cast<std::size_t>(y)];
            m.set_label(x, y, ox == oy ? inner.label(x, y) : q.label(ox, oy));
        }
    return m;
}

inline cograph::Graph random_cograph(std::mt19937_64& rng, int n) {
    return cograph::graph_of(cograph::random_valued_tree(rng, n));
}

}  // namespace testing
