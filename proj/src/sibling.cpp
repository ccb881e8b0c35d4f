#include "cograph/sibling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cograph/errors.hpp"

namespace cograph {

Multiplicity Multiplicity::finite(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("multiplicity must be at least 1");
    return {n, false};
}

std::string Multiplicity::to_string() const { return omega ? "omega" : std::to_string(count); }

Multiplicity operator+(Multiplicity a, Multiplicity b) {
    if (a.omega || b.omega) return Multiplicity::infinite();
    return {a.count + b.count, false};
}

Multiplicity operator*(Multiplicity a, Multiplicity b) {
    if (a.omega || b.omega) return Multiplicity::infinite();
    return {a.count * b.count, false};
}

CographTerm CographTerm::leaf() { return {}; }
CographTerm CographTerm::dsum(std::vector<TermChild> children) { return {Kind::DSum, std::move(children)}; }
CographTerm CographTerm::csum(std::vector<TermChild> children) { return {Kind::CSum, std::move(children)}; }

CographTerm CographTerm::clique(Multiplicity n) {
    if (!n.omega && n.count == 1) return leaf();
    return csum({{leaf(), n}});
}

CographTerm CographTerm::independent(Multiplicity n) {
    if (!n.omega && n.count == 1) return leaf();
    return dsum({{leaf(), n}});
}

bool operator==(const CographTerm& a, const CographTerm& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!(a.children[i].mult == b.children[i].mult) || !(a.children[i].term == b.children[i].term)) return false;
    return true;
}

std::string canonical_key(const CographTerm& t) {
    if (t.is_leaf()) return "L";
    std::string out = t.kind == CographTerm::Kind::DSum ? "D(" : "C(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ',';
        out += canonical_key(t.children[i].term);
        out += '*';
        out += t.children[i].mult.omega ? "w" : std::to_string(t.children[i].mult.count);
    }
    return out + ")";
}

std::string to_string(const CographTerm& t) { return canonical_key(t); }

CographTerm normalize(const CographTerm& t) {
    if (t.is_leaf()) {
        if (!t.children.empty()) throw std::invalid_argument("leaf with children");
        return t;
    }
    if (t.children.empty()) throw std::invalid_argument("sum without children");
    std::map<std::string, TermChild> merged;
    auto add = [&](CographTerm term, Multiplicity m) {
        if (!m.omega && m.count < 1) throw std::invalid_argument("multiplicity must be at least 1");
        std::string key = canonical_key(term);
        auto it = merged.find(key);
        if (it == merged.end()) merged.emplace(std::move(key), TermChild{std::move(term), m});
        else it->second.mult = it->second.mult + m;
    };
    for (const auto& c : t.children) {
        CographTerm child = normalize(c.term);
        if (child.kind == t.kind) {
            for (auto& g : child.children) add(std::move(g.term), g.mult * c.mult);
        } else {
            add(std::move(child), c.mult);
        }
    }
    if (merged.size() == 1 && merged.begin()->second.mult == Multiplicity::finite(1)) return merged.begin()->second.term;
    CographTerm out{t.kind, {}};
    for (auto& [key, child] : merged) out.children.push_back(std::move(child));
    return out;
}

CographTerm dual(const CographTerm& t) {
    CographTerm out{t.kind, {}};
    if (t.kind == CographTerm::Kind::DSum) out.kind = CographTerm::Kind::CSum;
    else if (t.kind == CographTerm::Kind::CSum) out.kind = CographTerm::Kind::DSum;
    for (const auto& c : t.children) out.children.push_back({dual(c.term), c.mult});
    return out;
}

Graph denote(const CographTerm& t, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    if (t.is_leaf()) return Graph(1);
    std::vector<Graph> parts;
    for (const auto& c : t.children) {
        const Graph g = denote(c.term, cap);
        const std::int64_t copies = c.mult.omega ? cap : c.mult.count;
        for (std::int64_t i = 0; i < copies; ++i) parts.push_back(g);
    }
    return t.kind == CographTerm::Kind::DSum ? direct_sum(parts) : complete_sum(parts);
}

bool is_omega_free(const CographTerm& t) {
    return std::all_of(t.children.begin(), t.children.end(),
                       [](const TermChild& c) { return !c.mult.omega && is_omega_free(c.term); });
}

// Leaves of a sum are pairwise twins of one kind and form one class; any
// other child is connected and co-connected in the right way to keep its
// classes to itself, so copies contribute separately.
Multiplicity class_count(const CographTerm& t) {
    if (t.is_leaf()) return Multiplicity::finite(1);
    bool has_leaf = false;
    Multiplicity total{0, false};
    for (const auto& c : t.children) {
        if (c.term.is_leaf()) {
            has_leaf = true;
            continue;
        }
        total = total + class_count(c.term) * c.mult;
    }
    if (has_leaf) total = total + Multiplicity::finite(1);
    return total;
}

std::string to_string(SiblingVerdict::Reason r) {
    switch (r) {
        case SiblingVerdict::Reason::EquimorphicToComponent: return "EquimorphicToComponent";
        case SiblingVerdict::Reason::ComponentWithInfinitelyManySiblings: return "ComponentWithInfinitelyManySiblings";
        case SiblingVerdict::Reason::IncreasingComponentChain: return "IncreasingComponentChain";
        case SiblingVerdict::Reason::InfiniteCanonicalClasses: break;
    }
    return "InfiniteCanonicalClasses";
}

SiblingVerdict classify_siblings(const CographTerm& t) {
    SiblingVerdict v;
    v.classes = class_count(normalize(t));
    v.one = v.classes.is_finite();
    if (!v.one) v.reason = diagnose(t);
    return v;
}

SiblingVerdict::Reason diagnose(const CographTerm& input) {
    const CographTerm t = normalize(input);
    if (class_count(t).is_finite()) throw std::invalid_argument("term has a single sibling");
    const CographTerm s = t.kind == CographTerm::Kind::CSum ? dual(t) : t;
    for (const auto& c : s.children)
        if (term_embeds(s, c.term)) return SiblingVerdict::Reason::EquimorphicToComponent;
    for (const auto& c : s.children)
        if (!c.term.is_leaf() && !class_count(c.term).is_finite())
            return SiblingVerdict::Reason::ComponentWithInfinitelyManySiblings;
    for (const auto& c : s.children)
        if (!c.term.is_leaf() && c.mult.omega) return SiblingVerdict::Reason::IncreasingComponentChain;
    return SiblingVerdict::Reason::InfiniteCanonicalClasses;
}

namespace {

Multiplicity vertex_count(const CographTerm& t) {
    if (t.is_leaf()) return Multiplicity::finite(1);
    Multiplicity total{0, false};
    for (const auto& c : t.children) total = total + vertex_count(c.term) * c.mult;
    return total;
}

bool count_leq(const Multiplicity& a, const Multiplicity& b) {
    if (b.omega) return true;
    return !a.omega && a.count <= b.count;
}

// Embedding between normalized terms. A connected pattern lands inside one
// component of a disconnected target and dually; disconnected into
// disconnected is a distribution of pattern components over target
// components, where omega copies of a target type take every pattern type
// that fits in it on its own.
class TermEmbedder {
public:
    explicit TermEmbedder(std::uint64_t budget) : budget_(budget) {}

    bool embeds(const CographTerm& s, const CographTerm& t) {
        if (s.is_leaf()) return true;
        if (t.is_leaf()) return false;
        if (!count_leq(vertex_count(s), vertex_count(t))) return false;
        const std::string key = canonical_key(s) + "|" + canonical_key(t);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        tick();
        bool result = false;
        using K = CographTerm::Kind;
        if (s.kind == K::CSum && t.kind == K::CSum) {
            result = embeds(dual(s), dual(t));
        } else if (s.kind != t.kind) {
            for (const auto& c : t.children)
                if (embeds(s, c.term)) {
                    result = true;
                    break;
                }
        } else {
            result = distribute(s, t);
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    struct Slot {
        const CographTerm* type;
    };

    void tick() {
        if (++steps_ > budget_) throw BudgetExceeded("term embedding search exceeded its budget");
    }

    bool distribute(const CographTerm& s, const CographTerm& t) {
        std::vector<const CographTerm*> types;
        std::vector<Multiplicity> demand;
        for (const auto& p : s.children) {
            bool absorbed = false;
            for (const auto& u : t.children)
                if (u.mult.omega && embeds(p.term, u.term)) {
                    absorbed = true;
                    break;
                }
            if (!absorbed) {
                types.push_back(&p.term);
                demand.push_back(p.mult);
            }
        }
        if (types.empty()) return true;
        std::vector<Slot> slots;
        for (const auto& u : t.children) {
            if (u.mult.omega) continue;
            bool useful = false;
            for (const auto* p : types)
                if (embeds(*p, u.term)) {
                    useful = true;
                    break;
                }
            if (!useful) continue;
            for (std::int64_t i = 0; i < u.mult.count; ++i) slots.push_back({&u.term});
        }
        std::set<std::string> failed;
        return fill(types, slots, 0, demand, failed);
    }

    static std::string state_key(std::size_t slot, const std::vector<Multiplicity>& rem) {
        std::string key = std::to_string(slot);
        for (const auto& m : rem) key += ":" + (m.omega ? std::string("w") : std::to_string(m.count));
        return key;
    }

    bool fits(const std::vector<const CographTerm*>& types, const std::vector<Multiplicity>& take, const CographTerm& u) {
        CographTerm group{CographTerm::Kind::DSum, {}};
        for (std::size_t i = 0; i < types.size(); ++i)
            if (take[i].omega || take[i].count > 0) group.children.push_back({*types[i], take[i]});
        if (group.children.empty()) return true;
        return embeds(normalize(group), u);
    }

    // Assigns to slots[k..] the remaining demand `rem`; each slot takes a
    // sub-vector of rem (omega demands are taken whole or not at all).
    bool fill(const std::vector<const CographTerm*>& types, const std::vector<Slot>& slots, std::size_t k,
              std::vector<Multiplicity>& rem, std::set<std::string>& failed) {
        const bool done = std::all_of(rem.begin(), rem.end(), [](const Multiplicity& m) { return !m.omega && m.count == 0; });
        if (done) return true;
        if (k == slots.size()) return false;
        const std::string key = state_key(k, rem);
        if (failed.count(key)) return false;
        tick();

        std::vector<Multiplicity> take(rem.size(), Multiplicity{0, false});
        // Enumerate take vectors in mixed radix, largest choices first.
        std::vector<std::int64_t> choices(rem.size());
        for (std::size_t i = 0; i < rem.size(); ++i) choices[i] = rem[i].omega ? 1 : rem[i].count;
        std::vector<std::int64_t> pick = choices;
        while (true) {
            tick();
            for (std::size_t i = 0; i < rem.size(); ++i) take[i] = rem[i].omega ? (pick[i] ? Multiplicity::infinite() : Multiplicity{0, false}) : Multiplicity{pick[i], false};
            if (fits(types, take, *slots[k].type)) {
                std::vector<Multiplicity> next = rem;
                for (std::size_t i = 0; i < rem.size(); ++i)
                    next[i] = rem[i].omega ? (pick[i] ? Multiplicity{0, false} : rem[i]) : Multiplicity{rem[i].count - pick[i], false};
                if (fill(types, slots, k + 1, next, failed)) return true;
            }
            std::size_t i = 0;
            while (i < pick.size() && pick[i] == 0) {
                pick[i] = choices[i];
                ++i;
            }
            if (i == pick.size()) break;
            --pick[i];
        }
        failed.insert(key);
        return false;
    }

    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::map<std::string, bool> memo_;
};

CographTerm random_term_at(std::mt19937_64& rng, const RandomTermOptions& opt, int depth) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (depth == 0 || unit(rng) < 0.3) return CographTerm::leaf();
    CographTerm t{unit(rng) < 0.5 ? CographTerm::Kind::DSum : CographTerm::Kind::CSum, {}};
    const int k = std::uniform_int_distribution<int>(1, opt.max_children)(rng);
    for (int i = 0; i < k; ++i) {
        Multiplicity m = unit(rng) < opt.omega_probability
                             ? Multiplicity::infinite()
                             : Multiplicity::finite(std::uniform_int_distribution<int>(1, opt.max_mult)(rng));
        t.children.push_back({random_term_at(rng, opt, depth - 1), m});
    }
    return t;
}

}  // namespace

bool term_embeds(const CographTerm& s, const CographTerm& t, std::uint64_t budget) {
    TermEmbedder engine(budget);
    return engine.embeds(normalize(s), normalize(t));
}

MonomorphicPartition canonical_monomorphic_decomposition(const Graph& g) {
    const int n = g.size();
    std::vector<int> block(static_cast<std::size_t>(n), -1);
    MonomorphicPartition out;
    auto twins = [&](int x, int y, bool adjacent) {
        if (g.adjacent(x, y) != adjacent) return false;
        for (int z = 0; z < n; ++z)
            if (z != x && z != y && g.adjacent(x, z) != g.adjacent(y, z)) return false;
        return true;
    };
    for (int x = 0; x < n; ++x) {
        if (block[static_cast<std::size_t>(x)] >= 0) continue;
        const int id = static_cast<int>(out.blocks.size());
        block[static_cast<std::size_t>(x)] = id;
        out.blocks.push_back({x});
        // A vertex cannot have both a true twin and a false twin, so the
        // first twin found fixes the kind of the block.
        bool clique = true;
        bool kind_fixed = false;
        for (int y = x + 1; y < n; ++y) {
            if (block[static_cast<std::size_t>(y)] >= 0) continue;
            const bool want = kind_fixed ? clique : g.adjacent(x, y);
            if (!twins(x, y, want)) continue;
            clique = want;
            kind_fixed = true;
            block[static_cast<std::size_t>(y)] = id;
            out.blocks.back().push_back(y);
        }
        out.clique.push_back(clique);
    }
    return out;
}

std::optional<VertexSet> check_mono_embedding_constraint(const Graph& g, const VertexSet& a) {
    if (!embeds(g, g.induced(a))) return std::nullopt;
    const std::set<Vertex> inside(a.begin(), a.end());
    for (const auto& c : canonical_monomorphic_decomposition(g).blocks) {
        const auto hit = std::count_if(c.begin(), c.end(), [&](Vertex v) { return inside.count(v) > 0; });
        if (static_cast<std::size_t>(hit) != c.size()) return c;
    }
    return std::nullopt;
}

nlohmann::json multiplicity_to_json(const Multiplicity& m) {
    if (m.omega) return "omega";
    return m.count;
}

Multiplicity multiplicity_from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "omega") return Multiplicity::infinite();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 1) return Multiplicity::finite(j.get<std::int64_t>());
    throw FormatError("multiplicity must be a positive integer or \"omega\"");
}

nlohmann::json term_to_json(const CographTerm& t) {
    nlohmann::json j;
    switch (t.kind) {
        case CographTerm::Kind::Leaf: j["op"] = "leaf"; break;
        case CographTerm::Kind::DSum: j["op"] = "dsum"; break;
        case CographTerm::Kind::CSum: j["op"] = "csum"; break;
    }
    j["children"] = nlohmann::json::array();
    for (const auto& c : t.children) j["children"].push_back({{"term", term_to_json(c.term)}, {"mult", multiplicity_to_json(c.mult)}});
    return j;
}

CographTerm term_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) throw FormatError("term needs a string \"op\"");
    const std::string op = j["op"].get<std::string>();
    CographTerm t;
    if (op == "leaf") t.kind = CographTerm::Kind::Leaf;
    else if (op == "dsum") t.kind = CographTerm::Kind::DSum;
    else if (op == "csum") t.kind = CographTerm::Kind::CSum;
    else throw FormatError("unknown term op \"" + op + "\"");
    if (j.contains("children")) {
        if (!j["children"].is_array()) throw FormatError("\"children\" must be an array");
        for (const auto& c : j["children"]) {
            if (!c.is_object() || !c.contains("term")) throw FormatError("child needs \"term\"");
            t.children.push_back({term_from_json(c["term"]), c.contains("mult") ? multiplicity_from_json(c["mult"]) : Multiplicity::finite(1)});
        }
    }
    if (t.is_leaf() && !t.children.empty()) throw FormatError("leaf term with children");
    if (!t.is_leaf() && t.children.empty()) throw FormatError("sum term without children");
    return t;
}

CographTerm random_term(std::mt19937_64& rng, const RandomTermOptions& opt) {
    return normalize(random_term_at(rng, opt, opt.max_depth));
}

}  // namespace cograph
