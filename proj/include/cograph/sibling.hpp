#pragma once

// Countable cographs presented as terms, their canonical monomorphic
// decompositions, and the one-or-infinitely-many sibling classifier.
//
// A term is a leaf (one vertex) or a direct / complete sum of children, each
// child repeated a finite number of times or omega times. Terms denote
// countable cographs whose decomposition tree has finite height; chains
// without a least element are not representable here.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cograph/graph.hpp"

namespace cograph {

struct Multiplicity {
    std::int64_t count = 1;  // ignored when omega
    bool omega = false;

    static Multiplicity finite(std::int64_t n);
    static Multiplicity infinite() { return {0, true}; }

    bool is_finite() const noexcept { return !omega; }
    std::string to_string() const;

    friend Multiplicity operator+(Multiplicity a, Multiplicity b);
    friend Multiplicity operator*(Multiplicity a, Multiplicity b);
    friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
        return a.omega == b.omega && (a.omega || a.count == b.count);
    }
};

struct TermChild;

struct CographTerm {
    enum class Kind { Leaf, DSum, CSum };

    Kind kind = Kind::Leaf;
    std::vector<TermChild> children;

    static CographTerm leaf();
    static CographTerm dsum(std::vector<TermChild> children);
    static CographTerm csum(std::vector<TermChild> children);

    // K_n or the independent set on n vertices; n may be omega.
    static CographTerm clique(Multiplicity n);
    static CographTerm independent(Multiplicity n);

    bool is_leaf() const noexcept { return kind == Kind::Leaf; }
};

struct TermChild {
    CographTerm term;
    Multiplicity mult;
};

bool operator==(const CographTerm& a, const CographTerm& b);

// Structural key; equal for equal normalized terms.
std::string canonical_key(const CographTerm& t);

// Flattens nested sums of the same kind (multiplying multiplicities), merges
// equal children (adding multiplicities, omega absorbing), orders children by
// key and replaces a sum with a single child of multiplicity 1 by that child.
// Throws std::invalid_argument on a sum without children or a zero
// multiplicity.
CographTerm normalize(const CographTerm& t);

CographTerm dual(const CographTerm& t);

// Materialization with omega replaced by cap.
Graph denote(const CographTerm& t, int cap);

bool is_omega_free(const CographTerm& t);

// Number of canonical monomorphic classes of the denoted cograph.
Multiplicity class_count(const CographTerm& t);

struct SiblingVerdict {
    enum class Reason {
        EquimorphicToComponent,
        ComponentWithInfinitelyManySiblings,
        IncreasingComponentChain,
        InfiniteCanonicalClasses
    };

    bool one = true;
    std::optional<Reason> reason;  // present iff !one
    Multiplicity classes;
};

std::string to_string(SiblingVerdict::Reason r);

SiblingVerdict classify_siblings(const CographTerm& t);
// Throws std::invalid_argument when the term has one sibling.
SiblingVerdict::Reason diagnose(const CographTerm& t);

inline constexpr std::uint64_t kDefaultTermBudget = 1'000'000;

// Induced embeddability of the denoted countable cographs. Throws
// BudgetExceeded when the distribution search exceeds `budget` steps.
bool term_embeds(const CographTerm& s, const CographTerm& t, std::uint64_t budget = kDefaultTermBudget);

struct MonomorphicPartition {
    std::vector<VertexSet> blocks;     // ordered by least vertex
    std::vector<bool> clique;          // per block; singletons report true

    std::size_t size() const noexcept { return blocks.size(); }
};

// Twin classes: maximal sets of pairwise true twins or pairwise false twins.
MonomorphicPartition canonical_monomorphic_decomposition(const Graph& g);

// If g embeds into g restricted to `a`, every canonical class C must satisfy
// |a n C| = |C|. Returns the first violating class, nullopt otherwise.
std::optional<VertexSet> check_mono_embedding_constraint(const Graph& g, const VertexSet& a);

nlohmann::json term_to_json(const CographTerm& t);
CographTerm term_from_json(const nlohmann::json& j);
nlohmann::json multiplicity_to_json(const Multiplicity& m);
Multiplicity multiplicity_from_json(const nlohmann::json& j);
std::string to_string(const CographTerm& t);

struct RandomTermOptions {
    int max_depth = 3;
    int max_children = 3;
    int max_mult = 3;
    double omega_probability = 0.25;
};
// Normalized random term.
CographTerm random_term(std::mt19937_64& rng, const RandomTermOptions& opt = {});

}  // namespace cograph
