#include "cograph/modules.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cograph {

GallaiType GallaiType::linear(int a, int b) {
    if (a == b) throw std::invalid_argument("linear type needs two distinct symbols");
    return {Kind::Linear, std::min(a, b), std::max(a, b)};
}

std::vector<int> GallaiType::symbols() const {
    switch (kind) {
        case Kind::Constant: return {alpha};
        case Kind::Linear: return {alpha, beta};
        case Kind::Prime: break;
    }
    return {};
}

std::string GallaiType::to_string() const {
    switch (kind) {
        case Kind::Constant: return "constant(" + std::to_string(alpha) + ")";
        case Kind::Linear: return "linear(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
        case Kind::Prime: break;
    }
    return "prime";
}

namespace {

using Membership = std::vector<char>;

Membership membership(int n, const VertexSet& a) {
    Membership in(static_cast<std::size_t>(n), 0);
    for (int v : a) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

VertexSet members(const Membership& in) {
    VertexSet out;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v]) out.push_back(static_cast<int>(v));
    return out;
}

bool distinguishes(const BinaryStructure& m, int z, int a, int b) {
    return m.label(z, a) != m.label(z, b) || m.label(a, z) != m.label(b, z);
}

// Closure and strong-module queries over one structure, caching the
// closures of vertex pairs.
class ModuleEngine {
public:
    explicit ModuleEngine(const BinaryStructure& m) : m_(m), n_(m.size()) {}

    Membership closure(Membership in) const {
        int rep = -1;
        std::vector<int> work;
        for (int v = 0; v < n_; ++v)
            if (in[static_cast<std::size_t>(v)]) {
                if (rep < 0) rep = v;
                else work.push_back(v);
            }
        if (rep < 0) return in;
        while (!work.empty()) {
            const int b = work.back();
            work.pop_back();
            for (int z = 0; z < n_; ++z) {
                if (in[static_cast<std::size_t>(z)] || !distinguishes(m_, z, b, rep)) continue;
                in[static_cast<std::size_t>(z)] = 1;
                work.push_back(z);
            }
        }
        return in;
    }

    const Membership& pair_closure(int x, int y) {
        const auto key = std::minmax(x, y);
        auto it = pairs_.find(key);
        if (it != pairs_.end()) return it->second;
        Membership seed(static_cast<std::size_t>(n_), 0);
        seed[static_cast<std::size_t>(x)] = 1;
        seed[static_cast<std::size_t>(y)] = 1;
        return pairs_.emplace(key, closure(std::move(seed))).first->second;
    }

    static bool contains_all(const Membership& big, const Membership& small) {
        for (std::size_t v = 0; v < small.size(); ++v)
            if (small[v] && !big[v]) return false;
        return true;
    }

    // A module B is strong iff every pair closure M(x, y) with x in B and
    // y outside contains B; otherwise that closure overlaps B. Returns such
    // an overlapping closure, or nullptr.
    const Membership* overlapping_closure(const Membership& b) {
        for (int x = 0; x < n_; ++x) {
            if (!b[static_cast<std::size_t>(x)]) continue;
            for (int y = 0; y < n_; ++y) {
                if (b[static_cast<std::size_t>(y)]) continue;
                const Membership& c = pair_closure(x, y);
                if (!contains_all(c, b)) return &c;
            }
        }
        return nullptr;
    }

    // Any strong module containing B meets an overlapping closure C, cannot
    // sit inside C (C misses part of B), so contains C as well.
    Membership least_strong(Membership b) {
        b = closure(std::move(b));
        while (const Membership* c = overlapping_closure(b)) {
            for (std::size_t v = 0; v < b.size(); ++v) b[v] = b[v] || (*c)[v];
            b = closure(std::move(b));
        }
        return b;
    }

private:
    const BinaryStructure& m_;
    int n_;
    std::map<std::pair<int, int>, Membership> pairs_;
};

struct Split {
    std::vector<VertexSet> classes;
    GallaiType type;
};

// Components of a strong module A with |A| >= 2, in global vertex ids.
Split split_strong(const BinaryStructure& m, const VertexSet& a) {
    const BinaryStructure sub = m.induced(a);
    const int k = sub.size();
    std::vector<int> group(static_cast<std::size_t>(k), -1);
    int groups = 0;

    // Constant quotient: the pairs not labelled (alpha, alpha) form a
    // disconnected graph whose connected components are the components.
    for (int alpha = 0; alpha < sub.alphabet().size && groups == 0; ++alpha) {
        std::fill(group.begin(), group.end(), -1);
        int count = 0;
        for (int s = 0; s < k; ++s) {
            if (group[static_cast<std::size_t>(s)] >= 0) continue;
            std::vector<int> stack{s};
            group[static_cast<std::size_t>(s)] = count;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int y = 0; y < k; ++y) {
                    if (group[static_cast<std::size_t>(y)] >= 0 || y == x) continue;
                    if (sub.label(x, y) != alpha || sub.label(y, x) != alpha) {
                        group[static_cast<std::size_t>(y)] = count;
                        stack.push_back(y);
                    }
                }
            }
            ++count;
        }
        if (count >= 2) groups = count;
    }

    if (groups == 0) {
        // Linear or prime quotient: x and y share a component iff S(x, y)
        // is a proper subset.
        ModuleEngine engine(sub);
        std::fill(group.begin(), group.end(), -1);
        for (int x = 0; x < k; ++x) {
            if (group[static_cast<std::size_t>(x)] >= 0) continue;
            group[static_cast<std::size_t>(x)] = groups;
            for (int y = x + 1; y < k; ++y) {
                if (group[static_cast<std::size_t>(y)] >= 0) continue;
                Membership seed(static_cast<std::size_t>(k), 0);
                seed[static_cast<std::size_t>(x)] = 1;
                seed[static_cast<std::size_t>(y)] = 1;
                const Membership s = engine.least_strong(std::move(seed));
                if (std::count(s.begin(), s.end(), 1) < k) group[static_cast<std::size_t>(y)] = groups;
            }
            ++groups;
        }
    }

    Split out;
    out.classes.assign(static_cast<std::size_t>(groups), {});
    for (int i = 0; i < k; ++i) out.classes[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])].push_back(a[static_cast<std::size_t>(i)]);
    std::sort(out.classes.begin(), out.classes.end());
    VertexSet reps;
    for (const auto& c : out.classes) reps.push_back(c.front());
    out.type = classify_quotient(m.induced(reps));
    return out;
}

void build_family(const BinaryStructure& m, const VertexSet& a, int parent, StrongFamily& f) {
    const int id = static_cast<int>(f.nodes.size());
    f.nodes.push_back(StrongNode{a, parent, {}, std::nullopt});
    if (parent >= 0) f.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
    if (a.size() < 2) return;
    Split s = split_strong(m, a);
    f.nodes[static_cast<std::size_t>(id)].type = s.type;
    for (const auto& c : s.classes) build_family(m, c, id, f);
}

void require_robust(const BinaryStructure& m, const VertexSet& a) {
    if (a.size() < 2) throw std::invalid_argument("expected a robust module with at least two elements");
    if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end())
        throw std::invalid_argument("vertex set must be sorted without duplicates");
    if (!is_strong_module(m, a)) throw std::invalid_argument("vertex set is not a robust module");
}

}  // namespace

bool is_module(const BinaryStructure& m, const VertexSet& a) {
    if (a.size() < 2) {
        membership(m.size(), a);  // range check
        return true;
    }
    const Membership in = membership(m.size(), a);
    const int rep = a.front();
    for (int z = 0; z < m.size(); ++z) {
        if (in[static_cast<std::size_t>(z)]) continue;
        for (int b : a)
            if (distinguishes(m, z, b, rep)) return false;
    }
    return true;
}

VertexSet module_closure(const BinaryStructure& m, const VertexSet& seed) {
    return members(ModuleEngine(m).closure(membership(m.size(), seed)));
}

bool is_strong_module(const BinaryStructure& m, const VertexSet& a) {
    if (!is_module(m, a)) return false;
    ModuleEngine engine(m);
    return engine.overlapping_closure(membership(m.size(), a)) == nullptr;
}

VertexSet least_strong_module(const BinaryStructure& m, const VertexSet& a) {
    if (a.empty()) throw std::invalid_argument("least strong module of an empty set");
    ModuleEngine engine(m);
    return members(engine.least_strong(membership(m.size(), a)));
}

std::vector<VertexSet> robust_modules(const BinaryStructure& m) {
    ModuleEngine engine(m);
    std::vector<VertexSet> out;
    for (int x = 0; x < m.size(); ++x) out.push_back({x});
    for (int x = 0; x < m.size(); ++x)
        for (int y = x + 1; y < m.size(); ++y) out.push_back(members(engine.least_strong(membership(m.size(), {x, y}))));
    std::sort(out.begin(), out.end(), [](const VertexSet& p, const VertexSet& q) {
        if (p.size() != q.size()) return p.size() > q.size();
        return p < q;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> components_of(const BinaryStructure& m, const VertexSet& a) {
    require_robust(m, a);
    return split_strong(m, a).classes;
}

GallaiQuotient gallai_quotient(const BinaryStructure& m, const VertexSet& a) {
    require_robust(m, a);
    Split s = split_strong(m, a);
    VertexSet reps;
    for (const auto& c : s.classes) reps.push_back(c.front());
    return GallaiQuotient{std::move(s.classes), m.induced(reps), s.type};
}

GallaiType classify_quotient(const BinaryStructure& q) {
    const int k = q.size();
    if (k < 2) throw std::invalid_argument("a quotient has at least two classes");
    const int first = q.label(0, 1);
    bool constant = true;
    for (int x = 0; x < k && constant; ++x)
        for (int y = 0; y < k && constant; ++y)
            if (x != y && q.label(x, y) != first) constant = false;
    if (constant) return GallaiType::constant(first);

    const int alpha = q.label(0, 1), beta = q.label(1, 0);
    if (alpha == beta) return GallaiType::prime();
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            if (x == y) continue;
            const int u = q.label(x, y), v = q.label(y, x);
            if (!((u == alpha && v == beta) || (u == beta && v == alpha))) return GallaiType::prime();
        }
    // The alpha pairs form a tournament; it is a linear order iff transitive.
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) {
                if (x == y || y == z || x == z) continue;
                if (q.label(x, y) == alpha && q.label(y, z) == alpha && q.label(x, z) != alpha)
                    return GallaiType::prime();
            }
    return GallaiType::linear(alpha, beta);
}

StrongFamily strong_family(const BinaryStructure& m) {
    StrongFamily f;
    if (m.size() == 0) return f;
    VertexSet all(static_cast<std::size_t>(m.size()));
    std::iota(all.begin(), all.end(), 0);
    build_family(m, all, -1, f);
    return f;
}

nlohmann::json gallai_type_to_json(const GallaiType& t) {
    switch (t.kind) {
        case GallaiType::Kind::Constant: return {{"kind", "constant"}, {"symbol", t.alpha}};
        case GallaiType::Kind::Linear: return {{"kind", "linear"}, {"symbols", {t.alpha, t.beta}}};
        case GallaiType::Kind::Prime: break;
    }
    return {{"kind", "prime"}};
}

nlohmann::json strong_family_to_json(const StrongFamily& f) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : f.nodes) {
        nlohmann::json j;
        j["vertexSubset"] = node.vertices;
        j["parent"] = node.parent < 0 ? nlohmann::json(nullptr) : nlohmann::json(node.parent);
        j["gallaiType"] = node.type ? gallai_type_to_json(*node.type) : nlohmann::json(nullptr);
        nodes.push_back(std::move(j));
    }
    return {{"nodes", std::move(nodes)}};
}

}  // namespace cograph
