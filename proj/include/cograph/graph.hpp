#pragma once

// Finite binary structures and simple undirected graphs, together with the
// sum constructors used throughout the library (direct, complete, labelled
// and lexicographic sums) and a few basic predicates.
//
// Vertices are dense integers 0..n-1. Every operation that produces a vertex
// set or a partition returns it in increasing order so results are
// reproducible byte for byte.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cograph {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always sorted, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Symbols are 0..size-1. The diagonal symbol labels every (x, x) pair and is
// ignored by module and type computations.
struct LabelAlphabet {
    int size = 2;
    int diagonal = 0;

    bool contains(int symbol) const noexcept { return symbol >= 0 && symbol < size; }
    friend bool operator==(const LabelAlphabet&, const LabelAlphabet&) = default;
};

// A total map d : V x V -> alphabet with d(x, x) = diagonal.
class BinaryStructure {
public:
    BinaryStructure() = default;
    // All off-diagonal pairs start labelled with `fill`.
    BinaryStructure(int n, LabelAlphabet alphabet, int fill = 0);

    int size() const noexcept { return n_; }
    const LabelAlphabet& alphabet() const noexcept { return alphabet_; }

    int label(Vertex x, Vertex y) const noexcept {
        return labels_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    }
    // Diagonal pairs cannot be relabelled.
    void set_label(Vertex x, Vertex y, int symbol);

    // Symmetric iff d(x, y) = d(y, x) for all x, y.
    bool is_symmetric() const noexcept;

    BinaryStructure induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const BinaryStructure&, const BinaryStructure&) = default;

private:
    int n_ = 0;
    LabelAlphabet alphabet_{};
    std::vector<std::uint8_t> labels_;
};

// Undirected loopless graph stored as a dense adjacency matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph complete(int n);
    static Graph empty(int n);  // independent set on n vertices
    static Graph path(int n);
    static Graph cycle(int n);

    int size() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const noexcept {
        return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
    }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const noexcept { return degree_[static_cast<std::size_t>(v)]; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::vector<Edge> edges() const;  // u < v, lexicographic
    VertexSet neighbours(Vertex v) const;

    Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degree_;
    std::size_t edges_ = 0;
};

// Graph as a binary structure over {0, 1} with diagonal 0.
BinaryStructure to_structure(const Graph& g);

// A finite chain of (graph, bit) entries, listed in increasing chain order.
struct LabelledChainEntry {
    Graph part;
    int bit = 0;
};
using LabelledChainSpec = std::vector<LabelledChainEntry>;

Graph complement(const Graph& g);

// Disjoint union of the parts in order; parts are laid out consecutively.
// A single part is returned unchanged. Throws std::invalid_argument on an
// empty list or an empty part.
Graph direct_sum(std::span<const Graph> parts);
// Disjoint union plus every edge between distinct parts.
Graph complete_sum(std::span<const Graph> parts);
// For x in part i and y in part j with i < j, {x, y} is an edge iff bit(i) = 1.
Graph labelled_sum(const LabelledChainSpec& chain);
// parts[i] replaces index vertex i; parts i and j are fully joined iff {i, j}
// is an edge of the index graph.
Graph lex_sum(const Graph& index, std::span<const Graph> parts);

// Lexicographically smallest 4-subset inducing a P4, listed in path order
// starting from the smaller endpoint; nullopt for cographs.
std::optional<std::vector<Vertex>> find_induced_p4(const Graph& g);
bool is_cograph(const Graph& g);

inline constexpr std::uint64_t kDefaultEmbedBudget = 10'000'000;

// Induced embedding search. Returns the image of each pattern vertex, or
// nullopt when none exists. Throws BudgetExceeded once `budget` search nodes
// have been expanded.
std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& target,
                                                  std::uint64_t budget = kDefaultEmbedBudget);
bool embeds(const Graph& pattern, const Graph& target, std::uint64_t budget = kDefaultEmbedBudget);
bool isomorphic(const Graph& a, const Graph& b, std::uint64_t budget = kDefaultEmbedBudget);

// Parts ordered by least vertex, each part sorted.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace cograph
