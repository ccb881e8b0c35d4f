#include "cograph/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cograph/errors.hpp"

namespace cograph {

QuasiOrder::QuasiOrder(int size, const std::vector<std::pair<int, int>>& leq_pairs)
    : n_(size), rel_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
    if (size < 0) throw std::invalid_argument("negative quasi-order size");
    for (int a = 0; a < n_; ++a) rel_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)] = 1;
    for (auto [a, b] : leq_pairs) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::invalid_argument("quasi-order pair out of range");
        rel_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] = 1;
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (leq(a, b) && leq(b, c) && !leq(a, c))
                    throw std::invalid_argument("relation is not transitive at " + std::to_string(a) + " <= " +
                                                std::to_string(b) + " <= " + std::to_string(c));
}

QuasiOrder QuasiOrder::antichain(int size) { return QuasiOrder(size, {}); }

QuasiOrder QuasiOrder::chain(int size) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) pairs.emplace_back(a, b);
    return QuasiOrder(size, pairs);
}

std::vector<std::pair<int, int>> QuasiOrder::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && leq(a, b)) out.emplace_back(a, b);
    return out;
}

ChainSegment ChainSegment::omega_star(std::vector<int> p) {
    if (p.empty()) throw std::invalid_argument("omega* period must be non-empty");
    return {Kind::OmegaStar, std::move(p)};
}

RegularChain RegularChain::finite(std::vector<int> w) { return {{ChainSegment::finite(std::move(w))}}; }
RegularChain RegularChain::omega_star(std::vector<int> p) { return {{ChainSegment::omega_star(std::move(p))}}; }

bool RegularChain::is_finite() const {
    return std::none_of(segments.begin(), segments.end(),
                        [](const ChainSegment& s) { return s.kind == ChainSegment::Kind::OmegaStar; });
}

bool RegularChain::empty() const {
    return std::all_of(segments.begin(), segments.end(), [](const ChainSegment& s) { return s.word.empty(); });
}

std::size_t RegularChain::letter_count() const {
    std::size_t n = 0;
    for (const auto& s : segments) n += s.word.size();
    return n;
}

std::vector<int> RegularChain::letters() const {
    std::set<int> seen;
    for (const auto& s : segments) seen.insert(s.word.begin(), s.word.end());
    return {seen.begin(), seen.end()};
}

RegularChain normalize(const RegularChain& c) {
    RegularChain out;
    for (const auto& s : c.segments) {
        if (s.word.empty()) continue;
        if (s.kind == ChainSegment::Kind::Finite && !out.segments.empty() &&
            out.segments.back().kind == ChainSegment::Kind::Finite) {
            auto& w = out.segments.back().word;
            w.insert(w.end(), s.word.begin(), s.word.end());
        } else {
            out.segments.push_back(s);
        }
    }
    return out;
}

namespace {

// The reverse of a chain: finite words reversed, omega* powers turned into
// omega powers of the reversed period, segment order reversed.
struct Reversed {
    struct Seg {
        bool omega;
        std::vector<int> word;
    };
    std::vector<Seg> segs;
};

Reversed reverse(const RegularChain& c) {
    Reversed r;
    for (auto it = c.segments.rbegin(); it != c.segments.rend(); ++it) {
        if (it->word.empty()) continue;
        r.segs.push_back({it->kind == ChainSegment::Kind::OmegaStar, {it->word.rbegin(), it->word.rend()}});
    }
    return r;
}

void check_labels(const RegularChain& c, const QuasiOrder& q) {
    for (const auto& s : c.segments)
        for (int a : s.word)
            if (a < 0 || a >= q.size()) throw std::invalid_argument("label " + std::to_string(a) + " outside the quasi-order");
}

bool dominated(const std::vector<int>& u, const std::vector<int>& v, const QuasiOrder& q) {
    return std::all_of(u.begin(), u.end(), [&](int a) {
        return std::any_of(v.begin(), v.end(), [&](int b) { return q.leq(a, b); });
    });
}

// Greedy matching on well-ordered words: each finite letter takes the
// earliest admissible position, and an omega power is absorbed by the first
// omega segment (from the current one on) whose period dominates all of its
// letters, after which matching resumes past that segment. Earliest
// placements leave the largest remainder, so greedy failure is a proof of
// non-embedding.
bool greedy_embed(const Reversed& p, const Reversed& t, const QuasiOrder& q) {
    std::size_t j = 0, off = 0;
    auto place = [&](int a) {
        while (j < t.segs.size()) {
            const auto& seg = t.segs[j];
            const std::size_t len = seg.word.size();
            if (!seg.omega) {
                for (; off < len; ++off)
                    if (q.leq(a, seg.word[off])) {
                        ++off;
                        return true;
                    }
            } else {
                for (std::size_t step = 0; step < len; ++step) {
                    const std::size_t idx = (off + step) % len;
                    if (q.leq(a, seg.word[idx])) {
                        off = (idx + 1) % len;
                        return true;
                    }
                }
            }
            ++j;
            off = 0;
        }
        return false;
    };
    for (const auto& seg : p.segs) {
        if (!seg.omega) {
            for (int a : seg.word)
                if (!place(a)) return false;
            continue;
        }
        std::size_t k = j;
        while (k < t.segs.size() && !(t.segs[k].omega && dominated(seg.word, t.segs[k].word, q))) ++k;
        if (k == t.segs.size()) return false;
        j = k + 1;
        off = 0;
    }
    return true;
}

RegularChain slice(const RegularChain& c, std::size_t from, std::size_t to) {
    RegularChain out;
    out.segments.assign(c.segments.begin() + static_cast<std::ptrdiff_t>(from), c.segments.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
}

}  // namespace

bool q_embedding(const RegularChain& c, const RegularChain& d, const QuasiOrder& q) {
    check_labels(c, q);
    check_labels(d, q);
    return greedy_embed(reverse(c), reverse(d), q);
}

RegularChain sum(const RegularChain& c, const RegularChain& d) {
    RegularChain out = c;
    out.segments.insert(out.segments.end(), d.segments.begin(), d.segments.end());
    return out;
}

RegularChain ordinal_product(int n, const RegularChain& c) {
    if (n < 1) throw std::invalid_argument("ordinal product needs n >= 1");
    RegularChain out;
    for (const auto& s : c.segments) {
        ChainSegment t{s.kind, {}};
        for (int a : s.word) t.word.insert(t.word.end(), static_cast<std::size_t>(n), a);
        out.segments.push_back(std::move(t));
    }
    return out;
}

std::vector<ChainCut> cuts(const RegularChain& input) {
    const RegularChain c = normalize(input);
    const std::size_t k = c.segments.size();
    std::vector<ChainCut> out;
    for (std::size_t s = 0; s <= k; ++s) {
        out.push_back({slice(c, 0, s), slice(c, s, k)});
        if (s == k) break;
        const ChainSegment& seg = c.segments[s];
        const auto& w = seg.word;
        const bool omega = seg.kind == ChainSegment::Kind::OmegaStar;
        for (std::size_t r = omega ? 0 : 1; r < w.size(); ++r) {
            ChainCut cut{slice(c, 0, s), slice(c, s + 1, k)};
            if (omega) cut.initial.segments.push_back(seg);
            cut.initial.segments.push_back(ChainSegment::finite({w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r)}));
            cut.final.segments.insert(cut.final.segments.begin(),
                                      ChainSegment::finite({w.begin() + static_cast<std::ptrdiff_t>(r), w.end()}));
            cut.initial = normalize(cut.initial);
            cut.final = normalize(cut.final);
            out.push_back(std::move(cut));
        }
    }
    return out;
}

bool is_indecomposable(const RegularChain& c, const QuasiOrder& q) {
    check_labels(c, q);
    for (const auto& cut : cuts(c))
        if (!q_embedding(c, cut.initial, q) && !q_embedding(c, cut.final, q)) return false;
    return true;
}

bool is_left_indecomposable(const RegularChain& c, const QuasiOrder& q) {
    check_labels(c, q);
    for (const auto& cut : cuts(c))
        if (!cut.initial.empty() && !q_embedding(c, cut.initial, q)) return false;
    return true;
}

std::vector<RegularChain> indecomposable_decomposition(const RegularChain& input, const QuasiOrder& q) {
    check_labels(input, q);
    RegularChain rest = normalize(input);
    std::vector<RegularChain> parts;
    while (!rest.empty()) {
        // Candidate suffixes from the largest down; the last letter or the
        // last omega* segment is always indecomposable, so one is found.
        const std::size_t k = rest.segments.size();
        bool found = false;
        for (std::size_t s = 0; s < k && !found; ++s) {
            const ChainSegment& seg = rest.segments[s];
            const std::size_t offsets = seg.kind == ChainSegment::Kind::Finite ? seg.word.size() : 1;
            for (std::size_t r = 0; r < offsets && !found; ++r) {
                RegularChain suffix = slice(rest, s + 1, k);
                RegularChain prefix = slice(rest, 0, s);
                if (r == 0) {
                    suffix.segments.insert(suffix.segments.begin(), seg);
                } else {
                    suffix.segments.insert(suffix.segments.begin(),
                                           ChainSegment::finite({seg.word.begin() + static_cast<std::ptrdiff_t>(r), seg.word.end()}));
                    prefix.segments.push_back(ChainSegment::finite({seg.word.begin(), seg.word.begin() + static_cast<std::ptrdiff_t>(r)}));
                }
                if (!is_indecomposable(suffix, q)) continue;
                parts.push_back(normalize(suffix));
                rest = normalize(prefix);
                found = true;
            }
        }
        if (!found) throw std::logic_error("no indecomposable suffix found");
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
}

RegularChain left_indec_initial_segment(const RegularChain& input, const QuasiOrder& q) {
    const RegularChain c = normalize(input);
    if (c.segments.empty() || c.segments.front().kind != ChainSegment::Kind::OmegaStar)
        throw std::invalid_argument("chain has a least element");
    for (std::size_t s = 1; s <= c.segments.size(); ++s) {
        RegularChain head = slice(c, 0, s);
        if (is_left_indecomposable(head, q)) return head;
    }
    throw std::logic_error("no left-indecomposable initial segment");
}

std::vector<std::vector<int>> equivalence_classes(const RegularChain& input, const QuasiOrder& q) {
    if (!input.is_finite()) throw std::invalid_argument("equivalence classes are computed for finite chains only");
    check_labels(input, q);
    const RegularChain c = normalize(input);
    const std::vector<int> w = c.segments.empty() ? std::vector<int>{} : c.segments.front().word;
    const int n = static_cast<int>(w.size());
    // Union of positions x < y with c not embedding in the open interval.
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cls[static_cast<std::size_t>(i)] = i;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const RegularChain between = RegularChain::finite({w.begin() + x + 1, w.begin() + y});
            if (q_embedding(c, between, q)) continue;
            const int from = cls[static_cast<std::size_t>(y)], to = cls[static_cast<std::size_t>(x)];
            for (auto& v : cls)
                if (v == from) v = to;
        }
    std::vector<std::vector<int>> out;
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int& slot = index[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])];
        if (slot < 0) {
            slot = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot)].push_back(i);
    }
    return out;
}

nlohmann::json chain_to_json(const RegularChain& c) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : c.segments)
        segs.push_back({{"kind", s.kind == ChainSegment::Kind::Finite ? "finite" : "omegastar"}, {"word", s.word}});
    return {{"segments", std::move(segs)}};
}

RegularChain chain_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array())
        throw FormatError("chain JSON needs a \"segments\" array");
    RegularChain c;
    for (const auto& s : j["segments"]) {
        if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string() || !s.contains("word") || !s["word"].is_array())
            throw FormatError("each segment needs \"kind\" and \"word\"");
        std::vector<int> word;
        for (const auto& a : s["word"]) {
            if (!a.is_number_integer()) throw FormatError("labels must be integers");
            word.push_back(a.get<int>());
        }
        const std::string kind = s["kind"].get<std::string>();
        if (kind == "finite") {
            c.segments.push_back(ChainSegment::finite(std::move(word)));
        } else if (kind == "omegastar") {
            if (word.empty()) throw FormatError("omegastar period must be non-empty");
            c.segments.push_back(ChainSegment::omega_star(std::move(word)));
        } else {
            throw FormatError("unknown segment kind \"" + kind + "\"");
        }
    }
    return c;
}

nlohmann::json quasi_order_to_json(const QuasiOrder& q) {
    nlohmann::json leq = nlohmann::json::array();
    for (auto [a, b] : q.pairs()) leq.push_back({a, b});
    return {{"size", q.size()}, {"leq", std::move(leq)}};
}

QuasiOrder quasi_order_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer())
        throw FormatError("quasi-order JSON needs an integer \"size\"");
    std::vector<std::pair<int, int>> pairs;
    if (j.contains("leq")) {
        if (!j["leq"].is_array()) throw FormatError("\"leq\" must be an array");
        for (const auto& p : j["leq"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
                throw FormatError("each \"leq\" entry must be a pair of integers");
            pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
    }
    try {
        return QuasiOrder(j["size"].get<int>(), pairs);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string to_string(const RegularChain& c) {
    std::ostringstream out;
    bool first = true;
    for (const auto& s : c.segments) {
        if (!first) out << " + ";
        first = false;
        if (s.kind == ChainSegment::Kind::OmegaStar) out << "*(";
        for (std::size_t i = 0; i < s.word.size(); ++i) out << (i ? " " : "") << s.word[i];
        if (s.kind == ChainSegment::Kind::OmegaStar) out << ")";
    }
    return first ? "()" : out.str();
}

}  // namespace cograph
