#include "cograph/family.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cograph/errors.hpp"

namespace cograph {

std::vector<int> ReducedChainPrefix::anchors() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (positions[i].anchor) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

// Size of a clique (want_clique) or independent set term, 0 otherwise.
// Infinite sets count as not even and report 0.
std::int64_t flat_size(const CographTerm& raw, bool want_clique) {
    const CographTerm t = normalize(raw);
    if (t.is_leaf()) return 1;
    const auto kind = want_clique ? CographTerm::Kind::CSum : CographTerm::Kind::DSum;
    if (t.kind != kind || t.children.size() != 1 || !t.children[0].term.is_leaf() || t.children[0].mult.omega) return 0;
    return t.children[0].mult.count;
}

bool is_even_flat(const CographTerm& t) {
    const std::int64_t c = flat_size(t, true), i = flat_size(t, false);
    return (c >= 2 && c % 2 == 0) || (i >= 2 && i % 2 == 0);
}

CographTerm with_finite_omega(const CographTerm& t, int cap) {
    CographTerm out{t.kind, {}};
    for (const auto& c : t.children)
        out.children.push_back({with_finite_omega(c.term, cap), c.mult.omega ? Multiplicity::finite(cap) : c.mult});
    return out;
}

}  // namespace

std::optional<std::string> check_reduced(const ReducedChainPrefix& p) {
    const auto& pos = p.positions;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i].bit != 0 && pos[i].bit != 1) return "position " + std::to_string(i) + " has a bit other than 0/1";
        if (pos[i].anchor && pos[i].bit != 1) return "anchor at position " + std::to_string(i) + " has bit 0";
        const CographTerm part = normalize(pos[i].part);
        if (pos[i].bit == 0 && part.kind == CographTerm::Kind::CSum)
            return "bit-0 position " + std::to_string(i) + " holds a complete sum";
        if (pos[i].bit == 1 && part.kind == CographTerm::Kind::DSum)
            return "bit-1 position " + std::to_string(i) + " holds a direct sum";
    }
    for (std::size_t i = 0; i + 2 < pos.size(); ++i) {
        const int s = pos[i].bit + pos[i + 1].bit + pos[i + 2].bit;
        if (s == 0 || s == 3) return "positions " + std::to_string(i) + ".." + std::to_string(i + 2) + " carry a single bit";
    }
    return std::nullopt;
}

ReducedChainPrefix build_Cf(const ReducedChainPrefix& prefix, const FBits& f) {
    const std::vector<int> anchors = prefix.anchors();
    if (f.size() > anchors.size())
        throw std::invalid_argument("f has " + std::to_string(f.size()) + " bits but the prefix only " +
                                    std::to_string(anchors.size()) + " anchors");
    for (int b : f)
        if (b != 0 && b != 1) throw std::invalid_argument("f must be a 0/1 word");

    ReducedChainPrefix out;
    std::size_t next_anchor = 0;
    for (std::size_t i = 0; i < prefix.positions.size(); ++i) {
        PrefixEntry e = prefix.positions[i];
        const std::int64_t c = flat_size(e.part, true), s = flat_size(e.part, false);
        if (c >= 2 && c % 2 == 0) e.part = CographTerm::clique(Multiplicity::finite(c + 1));
        else if (s >= 2 && s % 2 == 0) e.part = CographTerm::independent(Multiplicity::finite(s + 1));
        if (next_anchor < f.size() && static_cast<int>(i) == anchors[next_anchor]) {
            // Positions right of a_n come first in index order: c_n, then b_n.
            const auto size = Multiplicity::finite(2 * f[next_anchor] + 2);
            out.positions.push_back({CographTerm::clique(size), 1, false});
            out.positions.push_back({CographTerm::independent(size), 0, false});
            ++next_anchor;
        }
        out.positions.push_back(std::move(e));
    }
    return out;
}

FBits decode_f(const ReducedChainPrefix& prefix) {
    const auto& pos = prefix.positions;
    FBits f;
    std::size_t anchors_seen = 0;
    std::vector<char> explained(pos.size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (!pos[i].anchor) continue;
        ++anchors_seen;
        if (i < 2) continue;
        const PrefixEntry& b = pos[i - 1];
        const PrefixEntry& c = pos[i - 2];
        const std::int64_t bs = flat_size(b.part, false), cs = flat_size(c.part, true);
        const bool inserted = !b.anchor && !c.anchor && b.bit == 0 && c.bit == 1 && bs >= 2 && bs % 2 == 0 && cs == bs;
        if (!inserted) continue;
        if (f.size() + 1 != anchors_seen)
            throw std::invalid_argument("insertion at anchor " + std::to_string(anchors_seen - 1) + " follows an anchor without one");
        f.push_back(static_cast<int>((bs - 2) / 2));
        explained[i - 1] = explained[i - 2] = 1;
    }
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (!explained[i] && is_even_flat(pos[i].part))
            throw std::invalid_argument("position " + std::to_string(i) + " is an even clique or independent set not explained by an insertion");
    for (int b : f)
        if (b > 1) throw std::invalid_argument("inserted parts larger than 4");
    return f;
}

Graph materialize(const ReducedChainPrefix& prefix, int cap) {
    LabelledChainSpec chain;
    for (auto it = prefix.positions.rbegin(); it != prefix.positions.rend(); ++it) chain.push_back({denote(it->part, cap), it->bit});
    if (chain.empty()) return Graph(0);
    return labelled_sum(chain);
}

CographTerm chain_term(const ReducedChainPrefix& prefix, int cap) {
    if (prefix.positions.empty()) throw std::invalid_argument("chain term of an empty prefix");
    // Fold from the right end: index 0 is the rightmost part.
    CographTerm acc = with_finite_omega(prefix.positions.front().part, cap);
    for (std::size_t i = 1; i < prefix.positions.size(); ++i) {
        const PrefixEntry& e = prefix.positions[i];
        std::vector<TermChild> kids{{with_finite_omega(e.part, cap), Multiplicity::finite(1)}, {std::move(acc), Multiplicity::finite(1)}};
        acc = e.bit == 1 ? CographTerm::csum(std::move(kids)) : CographTerm::dsum(std::move(kids));
    }
    return acc;
}

ReducedChainPrefix extend(const ReducedChainPrefix& prefix, int blocks) {
    if (blocks < 0) throw std::invalid_argument("negative extension");
    const std::vector<int> anchors = prefix.anchors();
    if (anchors.size() < 2) throw std::invalid_argument("extension needs two anchors");
    const int lo = anchors[anchors.size() - 2], hi = anchors.back();
    ReducedChainPrefix out;
    out.positions.assign(prefix.positions.begin(), prefix.positions.begin() + hi + 1);
    for (int b = 0; b < blocks; ++b)
        out.positions.insert(out.positions.end(), prefix.positions.begin() + lo + 1, prefix.positions.begin() + hi + 1);
    out.positions.insert(out.positions.end(), prefix.positions.begin() + hi + 1, prefix.positions.end());
    return out;
}

bool prefix_sibling_check(const ReducedChainPrefix& base, const ReducedChainPrefix& built, int cap, int extension,
                          std::uint64_t budget) {
    if (built.positions.empty()) return true;
    const ReducedChainPrefix target = extend(base, extension);
    return term_embeds(chain_term(built, cap), chain_term(target, cap + 1), budget);
}

ReducedChainPrefix repeated_prefix(const std::vector<PrefixEntry>& block, int copies) {
    if (block.empty()) throw std::invalid_argument("empty block");
    ReducedChainPrefix out;
    for (int c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < block.size(); ++i) {
            PrefixEntry e = block[i];
            e.anchor = i + 1 == block.size();
            out.positions.push_back(std::move(e));
        }
    return out;
}

std::vector<PrefixEntry> default_block() {
    return {
        {CographTerm::independent(Multiplicity::finite(2)), 0, false},
        {CographTerm::leaf(), 1, false},
        {CographTerm::leaf(), 0, false},
        {CographTerm::clique(Multiplicity::finite(2)), 1, true},
    };
}

namespace {

CographTerm random_part(std::mt19937_64& rng, int bit) {
    const int pick = std::uniform_int_distribution<int>(0, 5)(rng);
    const auto flat = [bit](Multiplicity m) { return bit == 1 ? CographTerm::clique(m) : CographTerm::independent(m); };
    switch (pick) {
        case 0:
        case 1: return CographTerm::leaf();
        case 2: return flat(Multiplicity::finite(2));
        case 3: return flat(Multiplicity::finite(3));
        case 4: return flat(Multiplicity::infinite());
        default: break;
    }
    // Two copies of the opposite flat graph: C4 for bit 1, 2K2 for bit 0.
    const CographTerm inner = bit == 1 ? CographTerm::independent(Multiplicity::finite(2)) : CographTerm::clique(Multiplicity::finite(2));
    std::vector<TermChild> kids{{inner, Multiplicity::finite(2)}};
    return bit == 1 ? CographTerm::csum(std::move(kids)) : CographTerm::dsum(std::move(kids));
}

std::vector<int> random_bits(std::mt19937_64& rng, std::size_t n) {
    std::vector<int> bits(n);
    std::bernoulli_distribution coin(0.5);
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
    return bits;
}

}  // namespace

std::vector<PrefixEntry> random_block(std::mt19937_64& rng, int max_len) {
    if (max_len < 3) throw std::invalid_argument("blocks need at least three positions");
    while (true) {
        const int len = std::uniform_int_distribution<int>(3, max_len)(rng);
        std::vector<int> bits = random_bits(rng, static_cast<std::size_t>(len));
        bits.back() = 1;
        std::vector<PrefixEntry> block;
        for (int i = 0; i < len; ++i) block.push_back({random_part(rng, bits[static_cast<std::size_t>(i)]), bits[static_cast<std::size_t>(i)], false});
        block.back().anchor = true;
        if (!check_reduced(repeated_prefix(block, 3))) return block;
    }
}

ReducedChainPrefix random_prefix(std::mt19937_64& rng, int anchors) {
    while (true) {
        ReducedChainPrefix p;
        // A short right end, then groups of 1..3 positions each closed on the
        // left by an anchor.
        const int head = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int i = 0; i < head; ++i) {
            const int bit = std::uniform_int_distribution<int>(0, 1)(rng);
            p.positions.push_back({random_part(rng, bit), bit, false});
        }
        for (int a = 0; a < anchors; ++a) {
            const int gap = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int i = 0; i < gap; ++i) {
                const int bit = std::uniform_int_distribution<int>(0, 1)(rng);
                p.positions.push_back({random_part(rng, bit), bit, false});
            }
            p.positions.push_back({random_part(rng, 1), 1, true});
        }
        if (!check_reduced(p)) return p;
    }
}

nlohmann::json prefix_to_json(const ReducedChainPrefix& p) {
    nlohmann::json positions = nlohmann::json::array();
    for (const auto& e : p.positions) positions.push_back({{"part", term_to_json(e.part)}, {"bit", e.bit}, {"anchor", e.anchor}});
    return {{"positions", std::move(positions)}};
}

ReducedChainPrefix prefix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("positions") || !j["positions"].is_array())
        throw FormatError("prefix JSON needs a \"positions\" array");
    ReducedChainPrefix p;
    for (const auto& e : j["positions"]) {
        if (!e.is_object() || !e.contains("part") || !e.contains("bit") || !e["bit"].is_number_integer())
            throw FormatError("each position needs \"part\" and an integer \"bit\"");
        const int bit = e["bit"].get<int>();
        if (bit != 0 && bit != 1) throw FormatError("bit must be 0 or 1");
        bool anchor = false;
        if (e.contains("anchor")) {
            if (!e["anchor"].is_boolean()) throw FormatError("\"anchor\" must be a boolean");
            anchor = e["anchor"].get<bool>();
        }
        p.positions.push_back({term_from_json(e["part"]), bit, anchor});
    }
    return p;
}

std::string prefix_to_dot(const ReducedChainPrefix& p) {
    std::ostringstream out;
    out << "digraph chain {\n  rankdir=LR;\n";
    // Leftmost position first.
    for (std::size_t k = p.positions.size(); k-- > 0;) {
        const PrefixEntry& e = p.positions[k];
        out << "  p" << k << " [label=\"" << canonical_key(normalize(e.part)) << " | " << e.bit << "\""
            << (e.anchor ? ", shape=box" : "") << "];\n";
    }
    for (std::size_t k = p.positions.size(); k-- > 1;) out << "  p" << k << " -> p" << k - 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<std::int64_t> base_set(int n) {
    if (n < 1) throw std::invalid_argument("base_set needs n >= 1");
    std::vector<std::int64_t> x{0};
    for (int k = 0; k + 1 < n; ++k) x.push_back(x.back() + (k + 1));
    return x;
}

std::int64_t word_code(const std::string& word) {
    if (word.size() > 61) throw std::overflow_error("word too long to encode");
    std::int64_t c = 0;
    for (char ch : word) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("binary words use only 0 and 1");
        c = 2 * c + (ch == '0' ? 1 : 2);
    }
    return c;
}

ADFamilyMember ad_member(const std::string& seed, int n) {
    if (n < 0 || n > 60 || seed.size() + 1 > 60) throw std::invalid_argument("member length out of range");
    for (char ch : seed)
        if (ch != '0' && ch != '1') throw std::invalid_argument("seed must be a binary word");
    std::string branch = seed + "1";
    while (static_cast<int>(branch.size()) < n) branch += '0';
    ADFamilyMember m{seed, {}};
    for (int k = 1; k <= n; ++k) {
        const std::int64_t c = word_code(branch.substr(0, static_cast<std::size_t>(k)));
        if (c > 3'000'000'000LL) throw std::overflow_error("support element too large");
        m.support.push_back(c * (c + 1) / 2);  // x_c
    }
    return m;
}

std::int64_t materialized_limit(const ADFamilyMember& a) { return a.support.empty() ? 0 : a.support.back() + 1; }

bool distinguishes(const ADFamilyMember& a, const ADFamilyMember& b, std::int64_t shift, std::int64_t window) {
    if (shift < 0) throw std::invalid_argument("shift must be non-negative");
    if (window > materialized_limit(a) || window > materialized_limit(b) + shift)
        throw std::invalid_argument("window " + std::to_string(window) + " exceeds the materialized support");
    std::vector<std::int64_t> left, right;
    for (auto x : a.support)
        if (x < window) left.push_back(x);
    for (auto x : b.support)
        if (x + shift < window) right.push_back(x + shift);
    return left != right;
}

}  // namespace cograph
