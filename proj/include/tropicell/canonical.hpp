/**
 * Canonical forms, isomorphisms and automorphism groups of marked weighted
 * graphs.
 *
 * Canonicalization runs colour refinement (vertex colours start from weight,
 * loop count and the set of markings; refinement uses neighbour colours with
 * edge multiplicities) followed by an individualization-refinement search.
 * The key is the lexicographically smallest leaf encoding, so it depends
 * only on the isomorphism class.
 */
#ifndef TROPICELL_CANONICAL_HPP
#define TROPICELL_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tropicell/graph.hpp"

namespace tropicell {

struct CanonicalKey
{
    std::string bytes;

    std::string hex() const;
    static CanonicalKey from_hex(std::string_view hex);

    auto operator<=>(const CanonicalKey&) const = default;
    bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash
{
    std::size_t operator()(const CanonicalKey& key) const noexcept
    {
        return std::hash<std::string>{}(key.bytes);
    }
};

/**
 * Isomorphism between two graphs.  edge_perm[e] is the image of edge e and
 * sign is the parity of edge_perm.
 */
struct SignedIso
{
    std::vector<int> vertex_map;
    std::vector<int> half_edge_map;
    std::vector<int> edge_perm;
    int sign = 1;
};

/// Checks that iso maps `from` onto `to`, commuting with the involution and
/// incidence and preserving weights and markings, with a consistent sign.
bool is_isomorphism(const MarkedWeightedGraph& from, const MarkedWeightedGraph& to,
                    const SignedIso& iso);

/// second o first
SignedIso compose(const SignedIso& first, const SignedIso& second);
SignedIso inverse(const SignedIso& iso);
SignedIso identity_iso(const MarkedWeightedGraph& graph);

struct CanonicalForm
{
    CanonicalKey key;
    /// Representative of the class; a pure function of the key.
    MarkedWeightedGraph graph;
    /// Isomorphism from the input onto `graph`.
    SignedIso iso;
};

CanonicalForm canonicalize(const MarkedWeightedGraph& graph);

/// Key only; same value as canonicalize(graph).key.
CanonicalKey canonical_key(const MarkedWeightedGraph& graph);

/// Rebuild the representative graph stored in a key.
MarkedWeightedGraph graph_from_key(const CanonicalKey& key);

struct AutomorphismGroup
{
    std::vector<SignedIso> generators;
    std::uint64_t order = 1;
    bool has_odd = false;
};

/**
 * Generators of Aut(G) as half-edge maps: every vertex-level automorphism
 * (lifted), transpositions within bundles of parallel edges and of loops at
 * a vertex, and loop flips.
 */
AutomorphismGroup automorphism_group(const MarkedWeightedGraph& graph);

/// Some automorphism induces an odd permutation of the edges.
bool has_odd_automorphism(const MarkedWeightedGraph& graph);

} // namespace tropicell

#endif
