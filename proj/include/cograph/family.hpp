#pragma once

// Finite prefixes of reduced labelled chains and the family C_f built from
// one of them, together with the almost disjoint family used to make the
// members pairwise non-isomorphic.
//
// A prefix lists positions right to left: index 0 is the rightmost position
// and larger indices go further left, towards the missing least element.
// Anchors are bit-1 positions a_0 < a_1 < ... (as indices). Building C_f
// inserts b_n (bit 0, independent set of size 2f(n)+2) and c_n (bit 1,
// clique of the same size) immediately right of a_n, so the chain reads
// a_n, b_n, c_n from left to right, and turns every other clique or
// independent set of even size into the next odd one.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cograph/graph.hpp"
#include "cograph/sibling.hpp"

namespace cograph {

struct PrefixEntry {
    CographTerm part;
    int bit = 0;
    bool anchor = false;
};

struct ReducedChainPrefix {
    std::vector<PrefixEntry> positions;  // index 0 = rightmost

    std::vector<int> anchors() const;  // increasing indices
};

using FBits = std::vector<int>;

// Reducedness at finite scale: anchors carry bit 1, both bits occur among any
// three consecutive positions, a bit-0 part is not a complete sum and a bit-1
// part is not a direct sum. Returns a description of the first violation.
std::optional<std::string> check_reduced(const ReducedChainPrefix& p);

// Throws std::invalid_argument when f is longer than the anchor list.
ReducedChainPrefix build_Cf(const ReducedChainPrefix& prefix, const FBits& f);

// Inverse of build_Cf. Throws std::invalid_argument on a prefix that is not
// of that form (an even clique or independent set that no insertion
// explains, or insertions that skip an anchor).
FBits decode_f(const ReducedChainPrefix& prefix);

// Labelled sum of the denoted parts, leftmost first.
Graph materialize(const ReducedChainPrefix& prefix, int cap);

// The same graph as a term: the leftmost part joined (bit 1) or added
// (bit 0) to the sum of the rest, with omega replaced by cap.
CographTerm chain_term(const ReducedChainPrefix& prefix, int cap);

// Adds `blocks` copies of the positions (a_{k-2}, a_{k-1}] just left of the
// last anchor. Throws std::invalid_argument with fewer than two anchors.
ReducedChainPrefix extend(const ReducedChainPrefix& prefix, int blocks);

// Whether materialize(built, cap) embeds into materialize(extend(base,
// extension), cap + 1).
bool prefix_sibling_check(const ReducedChainPrefix& base, const ReducedChainPrefix& built, int cap, int extension,
                          std::uint64_t budget = kDefaultTermBudget);

// `copies` repetitions of a block given right to left; the block's last
// (leftmost) entry becomes the anchor of each copy.
ReducedChainPrefix repeated_prefix(const std::vector<PrefixEntry>& block, int copies);
// Block used by the CLI: K2 (bit 1, anchor), K1 (0), K1 (1), two isolated
// vertices (0), read left to right.
std::vector<PrefixEntry> default_block();
// Random block of 3..max_len positions satisfying check_reduced when
// repeated; parts are small cliques, independent sets or leaves, possibly
// with omega.
std::vector<PrefixEntry> random_block(std::mt19937_64& rng, int max_len = 5);
// Random prefix with `anchors` anchors (not necessarily periodic).
ReducedChainPrefix random_prefix(std::mt19937_64& rng, int anchors);

nlohmann::json prefix_to_json(const ReducedChainPrefix& p);
ReducedChainPrefix prefix_from_json(const nlohmann::json& j);
std::string prefix_to_dot(const ReducedChainPrefix& p);

// Almost disjoint family over X = {x_0 < x_1 < ...} with x_0 = 0 and
// x_{k+1} = x_k + (k + 1).
std::vector<std::int64_t> base_set(int n);

// Level-order index of a binary word: empty -> 0, w0 -> 2c+1, w1 -> 2c+2.
// Throws std::overflow_error for words longer than 61 letters.
std::int64_t word_code(const std::string& word);

struct ADFamilyMember {
    std::string seed;
    std::vector<std::int64_t> support;  // increasing
};

// The branch through `seed` continues with 1 and then 0 forever, so distinct
// seeds give distinct infinite branches; support holds x_{code(branch|k)}
// for k = 1..n. Throws std::invalid_argument on a seed with letters other
// than 0 and 1, or n > 60.
ADFamilyMember ad_member(const std::string& seed, int n);

// Largest integer below which the member's characteristic word is known.
std::int64_t materialized_limit(const ADFamilyMember& a);

// Whether the characteristic words of a.support and b.support + shift differ
// somewhere below `window`. Throws std::invalid_argument when the window
// reaches past what either member has materialized.
bool distinguishes(const ADFamilyMember& a, const ADFamilyMember& b, std::int64_t shift, std::int64_t window);

}  // namespace cograph
