#pragma once

// Brute-force reference implementations. They follow the definitions
// directly (subset scans, permutations, exhaustive injections) and are only
// meant for the small instances used to cross-check the real algorithms.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cograph/chain.hpp"
#include "cograph/graph.hpp"

namespace cograph::oracle {

inline constexpr int kMaxModuleVertices = 12;
inline constexpr int kMaxMonomorphicVertices = 7;

// Every module, by checking the definition on all subsets (including the
// empty set). Sorted by size, then lexicographically. Throws
// std::invalid_argument above kMaxModuleVertices.
std::vector<VertexSet> enumerate_modules(const BinaryStructure& m);

// The non-empty modules that overlap no module properly.
std::vector<VertexSet> strong_modules(const BinaryStructure& m);

// Maximal strong modules properly inside `a`.
std::vector<VertexSet> maximal_strong_submodules(const BinaryStructure& m, const VertexSet& a);

// True iff the only modules are the empty set, singletons and everything.
bool only_trivial_modules(const BinaryStructure& m);

std::optional<std::vector<Vertex>> find_p4(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);
bool embeds(const Graph& pattern, const Graph& target);

// All pairs of vertex subsets with equal intersection sizes on every block
// induce isomorphic graphs. Throws above kMaxMonomorphicVertices.
bool definition_monomorphic_check(const Graph& g, const std::vector<VertexSet>& partition);

// The last n letters of c (all of c if shorter) as a subsequence of d with
// every omega* segment unrolled to n copies of its period. An embedding of c
// places those n letters in at most n blocks of each omega* segment, and the
// blocks can be slid to the last n, so a failure here refutes embedding.
bool truncation_embedding(const RegularChain& c, const RegularChain& d, const QuasiOrder& q, int n);
// Last n letters of the chain in left-to-right order.
std::vector<int> last_letters(const RegularChain& c, std::size_t n);
// d with every omega* segment replaced by `copies` copies of its period.
std::vector<int> unrolled(const RegularChain& d, std::size_t copies);
// Default refutation depth: 4 * (letters of c + letters of d).
int refutation_bound(const RegularChain& c, const RegularChain& d);

struct OracleReport {
    std::string operation;
    std::string instance;
    nlohmann::json oracle_result;
    nlohmann::json production_result;
    bool agree = false;

    nlohmann::json to_json() const;
};

// Cross-checks every graph-level algorithm on g (modules, strong family,
// Gallai types, cograph recognition and cotree, canonical decomposition).
std::vector<OracleReport> cross_check_graph(const Graph& g, const std::string& instance);

}  // namespace cograph::oracle
