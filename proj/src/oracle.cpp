#include "cograph/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cograph/cotree.hpp"
#include "cograph/modules.hpp"
#include "cograph/sibling.hpp"

namespace cograph::oracle {

namespace {

bool module_by_definition(const BinaryStructure& m, const std::vector<char>& in) {
    const int n = m.size();
    for (int x = 0; x < n; ++x) {
        if (in[static_cast<std::size_t>(x)]) continue;
        for (int y = 0; y < n; ++y) {
            if (!in[static_cast<std::size_t>(y)]) continue;
            for (int z = 0; z < n; ++z) {
                if (!in[static_cast<std::size_t>(z)]) continue;
                if (m.label(x, y) != m.label(x, z) || m.label(y, x) != m.label(z, x)) return false;
            }
        }
    }
    return true;
}

bool overlaps(const VertexSet& a, const VertexSet& b) {
    VertexSet common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return !common.empty() && common.size() < a.size() && common.size() < b.size();
}

bool subset_of(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool same_adjacency(const Graph& a, const Graph& b, const std::vector<int>& map, int upto) {
    for (int i = 0; i < upto; ++i)
        if (a.adjacent(i, upto) != b.adjacent(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(upto)]))
            return false;
    return true;
}

// Extends an injective partial map pattern -> target one vertex at a time.
bool extend_map(const Graph& p, const Graph& t, std::vector<int>& map, std::vector<char>& used, int k) {
    if (k == p.size()) return true;
    for (int v = 0; v < t.size(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        map[static_cast<std::size_t>(k)] = v;
        if (!same_adjacency(p, t, map, k)) continue;
        used[static_cast<std::size_t>(v)] = 1;
        if (extend_map(p, t, map, used, k + 1)) return true;
        used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

VertexSet bits_to_set(unsigned mask, int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) s.push_back(v);
    return s;
}

nlohmann::json sets_json(const std::vector<VertexSet>& sets) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : sets) j.push_back(s);
    return j;
}

}  // namespace

std::vector<VertexSet> enumerate_modules(const BinaryStructure& m) {
    const int n = m.size();
    if (n > kMaxModuleVertices) throw std::invalid_argument("module enumeration is limited to 12 vertices");
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) in[static_cast<std::size_t>(v)] = (mask >> v) & 1u;
        if (module_by_definition(m, in)) out.push_back(bits_to_set(mask, n));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<VertexSet> strong_modules(const BinaryStructure& m) {
    const auto all = enumerate_modules(m);
    std::vector<VertexSet> out;
    for (const auto& a : all) {
        if (a.empty()) continue;
        if (std::none_of(all.begin(), all.end(), [&](const VertexSet& b) { return overlaps(a, b); })) out.push_back(a);
    }
    return out;
}

std::vector<VertexSet> maximal_strong_submodules(const BinaryStructure& m, const VertexSet& a) {
    const auto strong = strong_modules(m);
    std::vector<VertexSet> inside;
    for (const auto& s : strong)
        if (s.size() < a.size() && subset_of(s, a)) inside.push_back(s);
    std::vector<VertexSet> out;
    for (const auto& s : inside) {
        const bool maximal = std::none_of(inside.begin(), inside.end(), [&](const VertexSet& t) {
            return t.size() > s.size() && subset_of(s, t);
        });
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool only_trivial_modules(const BinaryStructure& m) {
    for (const auto& a : enumerate_modules(m))
        if (a.size() >= 2 && static_cast<int>(a.size()) < m.size()) return false;
    return true;
}

std::optional<std::vector<Vertex>> find_p4(const Graph& g) {
    const int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const std::vector<Vertex> q{a, b, c, d};
                    int edges = 0;
                    std::vector<int> deg(4, 0);
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)])) {
                                ++edges;
                                ++deg[static_cast<std::size_t>(i)];
                                ++deg[static_cast<std::size_t>(j)];
                            }
                    std::vector<int> sorted = deg;
                    std::sort(sorted.begin(), sorted.end());
                    if (edges != 3 || sorted != std::vector<int>{1, 1, 2, 2}) continue;
                    // Walk the path from its smaller endpoint.
                    int start = -1;
                    for (int i = 0; i < 4 && start < 0; ++i)
                        if (deg[static_cast<std::size_t>(i)] == 1) start = i;
                    std::vector<Vertex> path{q[static_cast<std::size_t>(start)]};
                    std::vector<char> seen(4, 0);
                    seen[static_cast<std::size_t>(start)] = 1;
                    int cur = start;
                    for (int step = 0; step < 3; ++step)
                        for (int i = 0; i < 4; ++i)
                            if (!seen[static_cast<std::size_t>(i)] &&
                                g.adjacent(q[static_cast<std::size_t>(cur)], q[static_cast<std::size_t>(i)])) {
                                seen[static_cast<std::size_t>(i)] = 1;
                                path.push_back(q[static_cast<std::size_t>(i)]);
                                cur = i;
                                break;
                            }
                    return path;
                }
    return std::nullopt;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.size() == b.size() && a.edge_count() == b.edge_count() && oracle::embeds(a, b);
}

bool embeds(const Graph& pattern, const Graph& target) {
    if (pattern.size() > target.size()) return false;
    std::vector<int> map(static_cast<std::size_t>(pattern.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(target.size()), 0);
    return extend_map(pattern, target, map, used, 0);
}

bool definition_monomorphic_check(const Graph& g, const std::vector<VertexSet>& partition) {
    const int n = g.size();
    if (n > kMaxMonomorphicVertices) throw std::invalid_argument("monomorphy check is limited to 7 vertices");
    std::vector<int> block(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < partition.size(); ++b)
        for (Vertex v : partition[b]) block[static_cast<std::size_t>(v)] = static_cast<int>(b);
    if (std::find(block.begin(), block.end(), -1) != block.end()) throw std::invalid_argument("not a partition of the vertices");
    // Isomorphism is an equivalence, so comparing every subset with the first
    // subset of the same profile covers all pairs.
    std::map<std::vector<int>, Graph> first;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> profile(partition.size(), 0);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) ++profile[static_cast<std::size_t>(block[static_cast<std::size_t>(v)])];
        const VertexSet f = bits_to_set(mask, n);
        Graph h = g.induced(f);
        auto it = first.find(profile);
        if (it == first.end()) first.emplace(std::move(profile), std::move(h));
        else if (!oracle::isomorphic(it->second, h)) return false;
    }
    return true;
}

std::vector<int> last_letters(const RegularChain& c, std::size_t n) {
    std::vector<int> rev;
    for (auto it = c.segments.rbegin(); it != c.segments.rend() && rev.size() < n; ++it) {
        const auto& w = it->word;
        if (w.empty()) continue;
        if (it->kind == ChainSegment::Kind::Finite) {
            for (auto jt = w.rbegin(); jt != w.rend() && rev.size() < n; ++jt) rev.push_back(*jt);
            continue;
        }
        while (rev.size() < n)
            for (auto jt = w.rbegin(); jt != w.rend() && rev.size() < n; ++jt) rev.push_back(*jt);
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<int> unrolled(const RegularChain& d, std::size_t copies) {
    std::vector<int> out;
    for (const auto& s : d.segments) {
        const std::size_t reps = s.kind == ChainSegment::Kind::OmegaStar ? copies : 1;
        for (std::size_t r = 0; r < reps; ++r) out.insert(out.end(), s.word.begin(), s.word.end());
    }
    return out;
}

bool truncation_embedding(const RegularChain& c, const RegularChain& d, const QuasiOrder& q, int n) {
    if (n < 0) throw std::invalid_argument("negative truncation length");
    const std::vector<int> p = last_letters(c, static_cast<std::size_t>(n));
    const std::vector<int> t = unrolled(d, std::max<std::size_t>(p.size(), 1));
    // Subsequence test; matching from the right end is optimal.
    std::size_t j = t.size();
    for (std::size_t i = p.size(); i-- > 0;) {
        while (j > 0 && !q.leq(p[i], t[j - 1])) --j;
        if (j == 0) return false;
        --j;
    }
    return true;
}

int refutation_bound(const RegularChain& c, const RegularChain& d) {
    return static_cast<int>(4 * (c.letter_count() + d.letter_count()));
}

nlohmann::json OracleReport::to_json() const {
    return {{"operation", operation},
            {"instance", instance},
            {"oracle", oracle_result},
            {"production", production_result},
            {"agree", agree}};
}

std::vector<OracleReport> cross_check_graph(const Graph& g, const std::string& instance) {
    std::vector<OracleReport> out;
    auto report = [&](std::string op, nlohmann::json oracle_value, nlohmann::json production_value) {
        const bool agree = oracle_value == production_value;
        out.push_back({std::move(op), instance, std::move(oracle_value), std::move(production_value), agree});
    };
    const BinaryStructure m = to_structure(g);

    if (g.size() <= kMaxModuleVertices) {
        std::vector<VertexSet> production;
        const StrongFamily family = strong_family(m);
        for (const auto& node : family.nodes) production.push_back(node.vertices);
        std::sort(production.begin(), production.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        report("strong_modules", sets_json(strong_modules(m)), sets_json(production));

        bool trivial = true;
        for (const auto& node : family.nodes) {
            if (node.vertices.size() < 2) continue;
            const GallaiQuotient q = gallai_quotient(m, node.vertices);
            for (const auto& s : strong_modules(q.quotient))
                if (s.size() > 1 && static_cast<int>(s.size()) < q.quotient.size()) trivial = false;
            if (sets_json(maximal_strong_submodules(m, node.vertices)) != sets_json(q.classes)) trivial = false;
        }
        report("gallai_quotients", trivial, true);
    }

    const auto p4 = find_p4(g);
    report("find_induced_p4", p4 ? nlohmann::json(*p4) : nlohmann::json(nullptr),
           find_induced_p4(g) ? nlohmann::json(*find_induced_p4(g)) : nlohmann::json(nullptr));

    if (!p4 && g.size() > 0) report("cotree_round_trip", true, graph_of(decomposition_tree(g)) == g);

    if (g.size() <= kMaxMonomorphicVertices) {
        const MonomorphicPartition part = canonical_monomorphic_decomposition(g);
        report("canonical_monomorphic_decomposition", definition_monomorphic_check(g, part.blocks), true);
    }
    return out;
}

}  // namespace cograph::oracle
