#include "cograph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cograph/errors.hpp"

namespace cograph {

namespace {

std::string join_vertices(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

}  // namespace

NotACograph::NotACograph(std::vector<int> witness)
    : std::invalid_argument("graph is not a cograph: induced P4 " + join_vertices(witness)),
      witness_(std::move(witness)) {}

// ---------------------------------------------------------------------------
// BinaryStructure

BinaryStructure::BinaryStructure(int n, LabelAlphabet alphabet, int fill) : n_(n), alphabet_(alphabet) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (alphabet.size < 1 || alphabet.size > 255) throw std::invalid_argument("alphabet size must be in 1..255");
    if (!alphabet.contains(alphabet.diagonal)) throw std::invalid_argument("diagonal symbol outside alphabet");
    if (!alphabet.contains(fill)) throw std::invalid_argument("fill symbol outside alphabet");
    labels_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), static_cast<std::uint8_t>(fill));
    for (int x = 0; x < n; ++x)
        labels_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
            static_cast<std::uint8_t>(alphabet.diagonal);
}

void BinaryStructure::set_label(Vertex x, Vertex y, int symbol) {
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("vertex out of range");
    if (x == y) throw std::invalid_argument("diagonal labels are fixed");
    if (!alphabet_.contains(symbol)) throw std::invalid_argument("symbol outside alphabet");
    labels_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)] =
        static_cast<std::uint8_t>(symbol);
}

bool BinaryStructure::is_symmetric() const noexcept {
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (label(x, y) != label(y, x)) return false;
    return true;
}

BinaryStructure BinaryStructure::induced(std::span<const Vertex> vertices) const {
    BinaryStructure out(static_cast<int>(vertices.size()), alphabet_, alphabet_.diagonal);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (i != j) out.set_label(static_cast<int>(i), static_cast<int>(j), label(vertices[i], vertices[j]));
    return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto& a = adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    if (a) return;
    a = 1;
    adj_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = 1;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto& a = adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    if (!a) return;
    a = 0;
    adj_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = 0;
    --degree_[static_cast<std::size_t>(u)];
    --degree_[static_cast<std::size_t>(v)];
    --edges_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighbours(Vertex v) const {
    check_vertex(v);
    VertexSet out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

BinaryStructure to_structure(const Graph& g) {
    BinaryStructure m(g.size(), LabelAlphabet{2, 0}, 0);
    for (auto [u, v] : g.edges()) {
        m.set_label(u, v, 1);
        m.set_label(v, u, 1);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Constructors

Graph complement(const Graph& g) {
    Graph out(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

namespace {

// Lays the parts out consecutively; `join(i, j)` decides whether parts i < j
// are fully joined.
template <class Join>
Graph layout_sum(std::span<const Graph> parts, Join join) {
    if (parts.empty()) throw std::invalid_argument("sum of an empty list of graphs");
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() == 0) throw std::invalid_argument("sum parts must be non-empty");
        offset[i + 1] = offset[i] + parts[i].size();
    }
    Graph out(offset.back());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto [u, v] : parts[i].edges()) out.add_edge(offset[i] + u, offset[i] + v);
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (!join(i, j)) continue;
            for (int x = offset[i]; x < offset[i + 1]; ++x)
                for (int y = offset[j]; y < offset[j + 1]; ++y) out.add_edge(x, y);
        }
    }
    return out;
}

}  // namespace

Graph direct_sum(std::span<const Graph> parts) {
    return layout_sum(parts, [](std::size_t, std::size_t) { return false; });
}

Graph complete_sum(std::span<const Graph> parts) {
    return layout_sum(parts, [](std::size_t, std::size_t) { return true; });
}

Graph labelled_sum(const LabelledChainSpec& chain) {
    if (chain.empty()) return Graph(0);
    std::vector<Graph> parts;
    parts.reserve(chain.size());
    for (const auto& e : chain) {
        if (e.bit != 0 && e.bit != 1) throw std::invalid_argument("labelled sum bits must be 0 or 1");
        parts.push_back(e.part);
    }
    return layout_sum(parts, [&](std::size_t i, std::size_t) { return chain[i].bit == 1; });
}

Graph lex_sum(const Graph& index, std::span<const Graph> parts) {
    if (static_cast<int>(parts.size()) != index.size())
        throw std::invalid_argument("lex_sum needs exactly one part per index vertex");
    if (parts.empty()) return Graph(0);
    return layout_sum(parts, [&](std::size_t i, std::size_t j) {
        return index.adjacent(static_cast<int>(i), static_cast<int>(j));
    });
}

// ---------------------------------------------------------------------------
// Cograph recognition

namespace {

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& vs, bool use_complement) {
    std::vector<int> where(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) where[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    std::vector<char> seen(vs.size(), 0);
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < vs.size(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            comp.push_back(vs[i]);
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (seen[j] || j == i) continue;
                if (g.adjacent(vs[i], vs[j]) != use_complement) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Every induced subgraph on >= 2 vertices of a cograph is disconnected or has
// a disconnected complement.
bool cograph_recursive(const Graph& g, const VertexSet& vs) {
    if (vs.size() <= 3) {
        return true;
    }
    auto comps = components_within(g, vs, false);
    if (comps.size() == 1) comps = components_within(g, vs, true);
    if (comps.size() == 1) return false;
    for (const auto& c : comps)
        if (!cograph_recursive(g, c)) return false;
    return true;
}

}  // namespace

bool is_cograph(const Graph& g) {
    VertexSet all(static_cast<std::size_t>(g.size()));
    std::iota(all.begin(), all.end(), 0);
    return cograph_recursive(g, all);
}

std::optional<std::vector<Vertex>> find_induced_p4(const Graph& g) {
    if (is_cograph(g)) return std::nullopt;
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int q[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++deg[i];
                                ++deg[j];
                                ++edges;
                            }
                    if (edges != 3) continue;
                    // Three edges with degree sequence (1,1,2,2) is a path.
                    int ones = 0;
                    for (int dv : deg) ones += dv == 1;
                    if (ones != 2) continue;
                    int start = -1;
                    for (int i = 0; i < 4 && start < 0; ++i)
                        if (deg[i] == 1) start = i;
                    std::vector<Vertex> walk{q[start]};
                    int prev = -1, cur = start;
                    while (walk.size() < 4) {
                        for (int j = 0; j < 4; ++j) {
                            if (j == cur || j == prev || !g.adjacent(q[cur], q[j])) continue;
                            prev = cur;
                            cur = j;
                            walk.push_back(q[j]);
                            break;
                        }
                    }
                    return walk;
                }
    return std::nullopt;  // unreachable for non-cographs
}

// ---------------------------------------------------------------------------
// Embedding

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& p, const Graph& t, std::uint64_t budget)
        : p_(p), t_(t), budget_(budget), image_(static_cast<std::size_t>(p.size()), -1),
          used_(static_cast<std::size_t>(t.size()), 0) {
        order_pattern();
    }

    bool run() { return extend(0); }
    std::vector<Vertex> image() const { return image_; }

private:
    // Most constrained first: prefer vertices with many already placed
    // neighbours, then high degree.
    void order_pattern() {
        const int n = p_.size();
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        std::vector<int> links(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < n; ++k) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (best < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(best)] ||
                    (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(best)] &&
                     p_.degree(v) > p_.degree(best)))
                    best = v;
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order_.push_back(best);
            for (int u = 0; u < n; ++u)
                if (p_.adjacent(best, u)) ++links[static_cast<std::size_t>(u)];
        }
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const int pv = order_[k];
        const int p_deg = p_.degree(pv);
        const int p_non = p_.size() - 1 - p_deg;
        for (int tv = 0; tv < t_.size(); ++tv) {
            if (used_[static_cast<std::size_t>(tv)]) continue;
            if (t_.degree(tv) < p_deg || t_.size() - 1 - t_.degree(tv) < p_non) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int pu = order_[j];
                ok = p_.adjacent(pv, pu) == t_.adjacent(tv, image_[static_cast<std::size_t>(pu)]);
            }
            if (!ok) continue;
            if (++nodes_ > budget_) throw BudgetExceeded("embedding search exceeded its node budget");
            image_[static_cast<std::size_t>(pv)] = tv;
            used_[static_cast<std::size_t>(tv)] = 1;
            if (extend(k + 1)) return true;
            used_[static_cast<std::size_t>(tv)] = 0;
            image_[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    }

    const Graph& p_;
    const Graph& t_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> order_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& target, std::uint64_t budget) {
    if (pattern.size() > target.size()) return std::nullopt;
    const auto pairs = [](const Graph& g) {
        return static_cast<std::size_t>(g.size()) * static_cast<std::size_t>(g.size() > 0 ? g.size() - 1 : 0) / 2;
    };
    if (pattern.edge_count() > target.edge_count()) return std::nullopt;
    if (pairs(pattern) - pattern.edge_count() > pairs(target) - target.edge_count()) return std::nullopt;
    EmbeddingSearch search(pattern, target, budget);
    if (!search.run()) return std::nullopt;
    return search.image();
}

bool embeds(const Graph& pattern, const Graph& target, std::uint64_t budget) {
    return find_embedding(pattern, target, budget).has_value();
}

bool isomorphic(const Graph& a, const Graph& b, std::uint64_t budget) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.size(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return embeds(a, b, budget);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    VertexSet all(static_cast<std::size_t>(g.size()));
    std::iota(all.begin(), all.end(), 0);
    return components_within(g, all, false);
}

}  // namespace cograph
