#include "cograph/cotree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cograph/errors.hpp"
#include "cograph/modules.hpp"

namespace cograph {

int ValuedMeetTree::leaf_count() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

int ValuedMeetTree::leaf_node(Vertex v) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].is_leaf() && nodes[i].leaf == v) return static_cast<int>(i);
    throw std::out_of_range("no leaf for vertex " + std::to_string(v));
}

namespace {

TreeValidation fail(std::string kind, std::vector<int> witness, std::string detail) {
    return TreeValidation{std::move(kind), std::move(witness), std::move(detail)};
}

int depth(const ValuedMeetTree& t, int x) {
    int d = 0;
    while (t.nodes[static_cast<std::size_t>(x)].parent >= 0) {
        x = t.nodes[static_cast<std::size_t>(x)].parent;
        ++d;
    }
    return d;
}

void collect_leaves(const ValuedMeetTree& t, int x, VertexSet& out) {
    const TreeNode& n = t.nodes[static_cast<std::size_t>(x)];
    if (n.is_leaf()) {
        out.push_back(n.leaf);
        return;
    }
    for (int c : n.children) collect_leaves(t, c, out);
}

std::string code_of(const ValuedMeetTree& t, int x) {
    const TreeNode& n = t.nodes[static_cast<std::size_t>(x)];
    if (n.is_leaf()) return "L";
    std::vector<std::string> parts;
    parts.reserve(n.children.size());
    for (int c : n.children) parts.push_back(code_of(t, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + std::to_string(n.value);
    for (const auto& p : parts) out += p;
    return out + ")";
}

nlohmann::json node_json(const ValuedMeetTree& t, int x) {
    const TreeNode& n = t.nodes[static_cast<std::size_t>(x)];
    nlohmann::json j;
    if (n.is_leaf()) {
        j["value"] = nullptr;
        j["children"] = nlohmann::json::array();
        j["leaf"] = n.leaf;
        return j;
    }
    j["value"] = n.value;
    j["children"] = nlohmann::json::array();
    for (int c : n.children) j["children"].push_back(node_json(t, c));
    return j;
}

int node_from_json(const nlohmann::json& j, int parent, ValuedMeetTree& t) {
    if (!j.is_object()) throw FormatError("tree node must be an object");
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(TreeNode{parent, {}, -1, -1});
    const bool has_children = j.contains("children") && j["children"].is_array() && !j["children"].empty();
    if (!has_children) {
        if (!j.contains("leaf") || !j["leaf"].is_number_integer()) throw FormatError("leaf node needs an integer \"leaf\"");
        t.nodes[static_cast<std::size_t>(id)].leaf = j["leaf"].get<int>();
        return id;
    }
    if (j.contains("leaf") && !j["leaf"].is_null()) throw FormatError("internal node must not carry \"leaf\"");
    if (!j.contains("value") || !j["value"].is_number_integer()) throw FormatError("internal node needs an integer \"value\"");
    t.nodes[static_cast<std::size_t>(id)].value = j["value"].get<int>();
    for (const auto& c : j["children"]) {
        const int child = node_from_json(c, id, t);
        t.nodes[static_cast<std::size_t>(id)].children.push_back(child);
    }
    return id;
}

void random_subtree(std::mt19937_64& rng, int leaves, int parent, int value, ValuedMeetTree& t) {
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(TreeNode{parent, {}, -1, -1});
    if (parent >= 0) t.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
    if (leaves == 1) return;
    t.nodes[static_cast<std::size_t>(id)].value = value;
    const int arity = std::uniform_int_distribution<int>(2, std::min(leaves, 5))(rng);
    // Random composition of `leaves` into `arity` positive parts.
    std::vector<int> cuts(static_cast<std::size_t>(leaves - 1));
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(arity - 1));
    std::sort(cuts.begin(), cuts.end());
    int prev = 0;
    cuts.push_back(leaves);
    for (int c : cuts) {
        random_subtree(rng, c - prev, id, 1 - value, t);
        prev = c;
    }
}

}  // namespace

TreeValidation validate(const ValuedMeetTree& t) {
    const int n = static_cast<int>(t.nodes.size());
    if (n == 0) return fail("structure", {}, "tree has no nodes");
    if (t.root < 0 || t.root >= n) return fail("structure", {t.root}, "root index out of range");

    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const TreeNode& x = t.nodes[static_cast<std::size_t>(i)];
        if (x.parent < 0) {
            roots.push_back(i);
            continue;
        }
        if (x.parent >= n) return fail("structure", {i}, "parent index out of range");
        const auto& sib = t.nodes[static_cast<std::size_t>(x.parent)].children;
        if (std::count(sib.begin(), sib.end(), i) != 1) return fail("structure", {x.parent, i}, "parent does not list child once");
    }
    if (roots.size() != 1) return fail("meet", roots, "nodes without a common ancestor (several roots)");
    if (roots.front() != t.root) return fail("structure", {t.root}, "declared root has a parent");
    for (int i = 0; i < n; ++i)
        for (int c : t.nodes[static_cast<std::size_t>(i)].children)
            if (c < 0 || c >= n || t.nodes[static_cast<std::size_t>(c)].parent != i)
                return fail("structure", {i, c}, "child does not point back to parent");

    // Reachability from the root rules out cycles.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{t.root};
    int reached = 0;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(x)]) return fail("structure", {x}, "node reached twice");
        seen[static_cast<std::size_t>(x)] = 1;
        ++reached;
        for (int c : t.nodes[static_cast<std::size_t>(x)].children) stack.push_back(c);
    }
    if (reached != n) {
        std::vector<int> lost;
        for (int i = 0; i < n; ++i)
            if (!seen[static_cast<std::size_t>(i)]) lost.push_back(i);
        return fail("meet", lost, "nodes unreachable from the root");
    }

    std::vector<int> owner;
    for (int i = 0; i < n; ++i) {
        const TreeNode& x = t.nodes[static_cast<std::size_t>(i)];
        if (x.is_leaf()) {
            if (x.leaf < 0) return fail("leaves", {i}, "leaf without vertex id");
            if (x.leaf >= static_cast<int>(owner.size())) owner.resize(static_cast<std::size_t>(x.leaf) + 1, -1);
            if (owner[static_cast<std::size_t>(x.leaf)] >= 0)
                return fail("leaves", {owner[static_cast<std::size_t>(x.leaf)], i}, "vertex id used twice");
            owner[static_cast<std::size_t>(x.leaf)] = i;
            continue;
        }
        if (x.leaf >= 0) return fail("leaves", {i}, "internal node carries a vertex id");
        if (x.value != 0 && x.value != 1) return fail("structure", {i}, "internal value must be 0 or 1");
        if (x.children.size() < 2) return fail("ramified", {i}, "internal node with a single child");
        for (int c : x.children) {
            const TreeNode& y = t.nodes[static_cast<std::size_t>(c)];
            if (!y.is_leaf() && y.value == x.value) return fail("dense", {i, c}, "parent and child share a value");
        }
    }
    for (std::size_t v = 0; v < owner.size(); ++v)
        if (owner[v] < 0) return fail("leaves", {}, "vertex ids are not 0..n-1 (missing " + std::to_string(v) + ")");
    return {};
}

ValuedMeetTree decomposition_tree(const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("decomposition tree of the empty graph");
    if (auto p4 = find_induced_p4(g)) throw NotACograph(*p4);
    const StrongFamily f = strong_family(to_structure(g));
    ValuedMeetTree t;
    t.nodes.reserve(f.nodes.size());
    for (const auto& node : f.nodes) {
        TreeNode x{node.parent, node.children, -1, -1};
        if (node.vertices.size() == 1) x.leaf = node.vertices.front();
        else x.value = node.type->alpha;
        t.nodes.push_back(std::move(x));
    }
    return t;
}

Graph graph_of(const ValuedMeetTree& t) {
    const TreeValidation v = validate(t);
    if (!v.ok()) throw std::invalid_argument("invalid tree (" + v.violation + "): " + v.detail);
    const int n = t.leaf_count();
    Graph g(n);
    // Join every pair of leaves meeting at a 1-node: for each internal node,
    // connect leaves across distinct children.
    for (const auto& x : t.nodes) {
        if (x.is_leaf() || x.value != 1) continue;
        std::vector<VertexSet> below;
        for (int c : x.children) {
            below.emplace_back();
            collect_leaves(t, c, below.back());
        }
        for (std::size_t i = 0; i < below.size(); ++i)
            for (std::size_t j = i + 1; j < below.size(); ++j)
                for (Vertex a : below[i])
                    for (Vertex b : below[j]) g.add_edge(a, b);
    }
    return g;
}

int meet(const ValuedMeetTree& t, int x, int y) {
    const int n = static_cast<int>(t.nodes.size());
    if (x < 0 || y < 0 || x >= n || y >= n) throw std::out_of_range("meet of unknown node");
    int dx = depth(t, x), dy = depth(t, y);
    while (dx > dy) x = t.nodes[static_cast<std::size_t>(x)].parent, --dx;
    while (dy > dx) y = t.nodes[static_cast<std::size_t>(y)].parent, --dy;
    while (x != y) {
        x = t.nodes[static_cast<std::size_t>(x)].parent;
        y = t.nodes[static_cast<std::size_t>(y)].parent;
    }
    return x;
}

VertexSet ball(const ValuedMeetTree& t, Vertex x, Vertex y) {
    VertexSet out;
    collect_leaves(t, meet(t, t.leaf_node(x), t.leaf_node(y)), out);
    std::sort(out.begin(), out.end());
    return out;
}

int value_of_least_robust(const ValuedMeetTree& t, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("value_of_least_robust needs distinct vertices");
    return t.nodes[static_cast<std::size_t>(meet(t, t.leaf_node(x), t.leaf_node(y)))].value;
}

std::string canonical_code(const ValuedMeetTree& t) {
    if (t.nodes.empty()) return "";
    return code_of(t, t.root);
}

nlohmann::json tree_to_json(const ValuedMeetTree& t) {
    if (t.nodes.empty()) return nullptr;
    return node_json(t, t.root);
}

ValuedMeetTree tree_from_json(const nlohmann::json& j) {
    ValuedMeetTree t;
    node_from_json(j, -1, t);
    return t;
}

std::string tree_to_dot(const ValuedMeetTree& t) {
    std::ostringstream out;
    out << "digraph cotree {\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const TreeNode& x = t.nodes[i];
        out << "  n" << i << " [label=\"" << (x.is_leaf() ? std::to_string(x.leaf) : std::to_string(x.value)) << "\""
            << (x.is_leaf() ? ", shape=box" : "") << "];\n";
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        std::vector<int> kids = t.nodes[i].children;
        std::sort(kids.begin(), kids.end());
        for (int c : kids) out << "  n" << i << " -> n" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

ValuedMeetTree random_valued_tree(std::mt19937_64& rng, int leaves) {
    if (leaves < 1) throw std::invalid_argument("a tree needs at least one leaf");
    ValuedMeetTree t;
    random_subtree(rng, leaves, -1, std::uniform_int_distribution<int>(0, 1)(rng), t);
    std::vector<int> ids(static_cast<std::size_t>(leaves));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::size_t next = 0;
    for (auto& x : t.nodes)
        if (x.is_leaf()) x.leaf = ids[next++];
    return t;
}

}  // namespace cograph
