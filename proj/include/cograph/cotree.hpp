#pragma once

// Valued meet-trees and the decomposition tree of a cograph.
//
// The decomposition tree has the robust modules of G as nodes, ordered by
// reverse inclusion. Leaves are the singletons; an internal node carries 1
// when its Gallai quotient is a clique and 0 when it is an independent set.
// Conversely, a finite ramified tree whose internal values alternate along
// every edge determines the graph in which x and y are adjacent iff the meet
// of the leaves x and y carries 1.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cograph/graph.hpp"

namespace cograph {

struct TreeNode {
    int parent = -1;
    std::vector<int> children;
    int value = -1;   // 0 or 1 on internal nodes, -1 on leaves
    Vertex leaf = -1; // vertex id on leaves, -1 on internal nodes

    bool is_leaf() const noexcept { return children.empty(); }
};

struct ValuedMeetTree {
    std::vector<TreeNode> nodes;
    int root = 0;

    int leaf_count() const;
    // Node holding vertex v; throws std::out_of_range if absent.
    int leaf_node(Vertex v) const;
};

struct TreeValidation {
    // Empty when the tree is valid; otherwise one of "structure", "meet",
    // "ramified", "dense", "leaves".
    std::string violation;
    std::vector<int> witness;  // offending node indices
    std::string detail;

    bool ok() const noexcept { return violation.empty(); }
};

// Checks single root, parent/child consistency, the leaf labelling
// (vertex ids 0..n-1, each once), ramification (>= 2 children on internal
// nodes) and density (no internal parent and child with equal value).
TreeValidation validate(const ValuedMeetTree& t);

// Throws NotACograph with an induced P4 as witness; std::invalid_argument
// on the empty graph.
ValuedMeetTree decomposition_tree(const Graph& g);

// Throws std::invalid_argument naming the violated invariant.
Graph graph_of(const ValuedMeetTree& t);

// Greatest common ancestor of two nodes.
int meet(const ValuedMeetTree& t, int x, int y);

// Vertices below meet(leaf x, leaf y); x and y are vertex ids.
VertexSet ball(const ValuedMeetTree& t, Vertex x, Vertex y);
int value_of_least_robust(const ValuedMeetTree& t, Vertex x, Vertex y);

// Vertex-name-free code; equal iff the valued trees are isomorphic.
std::string canonical_code(const ValuedMeetTree& t);

// {"value": 0|1|null, "children": [...], "leaf": id} nested from the root.
nlohmann::json tree_to_json(const ValuedMeetTree& t);
ValuedMeetTree tree_from_json(const nlohmann::json& j);
std::string tree_to_dot(const ValuedMeetTree& t);

// Random valid tree with exactly `leaves` leaves: random shape, values
// alternating down every path, vertex ids shuffled.
ValuedMeetTree random_valued_tree(std::mt19937_64& rng, int leaves);

}  // namespace cograph
