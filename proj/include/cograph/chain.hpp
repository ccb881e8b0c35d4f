#pragma once

// Chains labelled by a finite quasi-order.
//
// A RegularChain is a finite sequence of segments, each either a finite word
// or the omega* power of a non-empty period word (... p p p, with no least
// element). Such chains are exactly the reverses of words of the form
// w0 u1^omega w1 ..., whose order types are ordinals below omega^2; on these
// a greedy earliest-position matching decides embedding exactly, so no
// operation here is heuristic.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace cograph {

// Elements are 0..size-1; leq is stored densely.
class QuasiOrder {
public:
    QuasiOrder() = default;
    // Reflexivity is added automatically; throws std::invalid_argument if the
    // given pairs are not transitive.
    QuasiOrder(int size, const std::vector<std::pair<int, int>>& leq_pairs);

    static QuasiOrder antichain(int size);
    static QuasiOrder chain(int size);  // 0 < 1 < ... < size-1

    int size() const noexcept { return n_; }
    bool leq(int a, int b) const noexcept {
        return rel_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] != 0;
    }
    std::vector<std::pair<int, int>> pairs() const;  // strict pairs a != b

private:
    int n_ = 0;
    std::vector<char> rel_;
};

struct ChainSegment {
    enum class Kind { Finite, OmegaStar };

    Kind kind = Kind::Finite;
    std::vector<int> word;  // the period for OmegaStar, never empty there

    static ChainSegment finite(std::vector<int> w) { return {Kind::Finite, std::move(w)}; }
    static ChainSegment omega_star(std::vector<int> p);

    friend bool operator==(const ChainSegment&, const ChainSegment&) = default;
};

struct RegularChain {
    std::vector<ChainSegment> segments;

    static RegularChain finite(std::vector<int> w);
    static RegularChain omega_star(std::vector<int> p);

    bool is_finite() const;
    bool empty() const;
    std::size_t letter_count() const;  // letters written in the presentation
    std::vector<int> letters() const;  // distinct labels occurring

    friend bool operator==(const RegularChain&, const RegularChain&) = default;
};

// Drops empty finite segments and merges adjacent finite ones.
RegularChain normalize(const RegularChain& c);

// Label-increasing order embedding of all of c into d. Throws
// std::invalid_argument on labels outside q.
bool q_embedding(const RegularChain& c, const RegularChain& d, const QuasiOrder& q);

RegularChain sum(const RegularChain& c, const RegularChain& d);
RegularChain ordinal_product(int n, const RegularChain& c);

// One split of a chain into an initial and a final segment.
struct ChainCut {
    RegularChain initial;
    RegularChain final;
};
// Every Dedekind cut up to embedding equivalence: segment boundaries,
// positions inside finite words, and for an omega* segment the cuts at each
// offset of the period with no whole blocks on the right (the smallest
// final part for that offset).
std::vector<ChainCut> cuts(const RegularChain& c);

bool is_indecomposable(const RegularChain& c, const QuasiOrder& q);
bool is_left_indecomposable(const RegularChain& c, const QuasiOrder& q);

// Greedy right-to-left: the largest indecomposable suffix starting at a
// segment boundary or inside a finite word, then recurse on the rest.
std::vector<RegularChain> indecomposable_decomposition(const RegularChain& c, const QuasiOrder& q);

// Shortest initial run of segments that is left-indecomposable. Throws
// std::invalid_argument when c has a least element.
RegularChain left_indec_initial_segment(const RegularChain& c, const QuasiOrder& q);

// Classes of positions of a finite chain under x ~ y iff c does not embed
// into the open interval between x and y. Throws on infinite chains.
std::vector<std::vector<int>> equivalence_classes(const RegularChain& c, const QuasiOrder& q);

nlohmann::json chain_to_json(const RegularChain& c);
RegularChain chain_from_json(const nlohmann::json& j);
// {"size": n, "leq": [[a, b], ...]}
nlohmann::json quasi_order_to_json(const QuasiOrder& q);
QuasiOrder quasi_order_from_json(const nlohmann::json& j);

std::string to_string(const RegularChain& c);

}  // namespace cograph
