#pragma once

// Modules of finite binary structures.
//
// A set A is a module when no vertex outside A distinguishes two members of
// A. Strong modules (comparable or disjoint with every module) form a laminar
// family; on finite structures every strong module with at least two
// elements is robust, i.e. the least strong module containing some pair of
// distinct vertices. The components of a robust module A are its maximal
// strong proper submodules, and the Gallai quotient of A is the structure
// those components induce. The diagonal symbol never takes part in any of
// these computations.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cograph/graph.hpp"

namespace cograph {

struct GallaiType {
    enum class Kind { Constant, Linear, Prime };

    Kind kind = Kind::Prime;
    // Constant: alpha is the symbol. Linear: alpha < beta, and the pairs
    // labelled alpha form a strict linear order on the quotient.
    int alpha = -1;
    int beta = -1;

    static GallaiType constant(int symbol) { return {Kind::Constant, symbol, -1}; }
    static GallaiType linear(int a, int b);
    static GallaiType prime() { return {Kind::Prime, -1, -1}; }

    // The symbol set t(A): {alpha}, {alpha, beta}, or empty for prime.
    std::vector<int> symbols() const;
    std::string to_string() const;

    friend bool operator==(const GallaiType&, const GallaiType&) = default;
};

bool is_module(const BinaryStructure& m, const VertexSet& a);

// Least module containing `seed` (empty seed gives the empty set).
VertexSet module_closure(const BinaryStructure& m, const VertexSet& seed);

// False for sets that are not modules.
bool is_strong_module(const BinaryStructure& m, const VertexSet& a);

// S(A): the intersection of all strong modules containing `a`.
// Throws std::invalid_argument for an empty set.
VertexSet least_strong_module(const BinaryStructure& m, const VertexSet& a);

// Singletons plus S(x, y) for all x != y, ordered by size (largest first)
// and then lexicographically.
std::vector<VertexSet> robust_modules(const BinaryStructure& m);

struct GallaiQuotient {
    std::vector<VertexSet> classes;  // ordered by least vertex
    BinaryStructure quotient;        // vertex i is classes[i]
    GallaiType type;
};

// Components of a robust module with >= 2 elements. Throws
// std::invalid_argument when `a` is not such a module.
std::vector<VertexSet> components_of(const BinaryStructure& m, const VertexSet& a);
GallaiQuotient gallai_quotient(const BinaryStructure& m, const VertexSet& a);

// Classifies a structure whose strong modules are all trivial.
GallaiType classify_quotient(const BinaryStructure& q);

struct StrongNode {
    VertexSet vertices;
    int parent = -1;
    std::vector<int> children;          // ordered by least vertex
    std::optional<GallaiType> type;     // absent on singletons
};

// All non-empty strong modules as a rooted forest under inclusion. Node 0 is
// the full vertex set (absent only for the empty structure); nodes are listed
// in depth-first preorder.
struct StrongFamily {
    std::vector<StrongNode> nodes;

    bool empty() const noexcept { return nodes.empty(); }
    const StrongNode& root() const { return nodes.front(); }
};

// Recursive Gallai decomposition: split V into the components of S(V) and
// recurse into each.
StrongFamily strong_family(const BinaryStructure& m);

nlohmann::json gallai_type_to_json(const GallaiType& t);
nlohmann::json strong_family_to_json(const StrongFamily& f);

}  // namespace cograph
