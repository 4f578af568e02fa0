/**
 * Isomorphism classes of stable n-marked genus-g graphs, bucketed by edge
 * count.
 *
 * Maximal classes (3g-3+n edges: weight 0, every vertex trivalent) are built
 * by adding one marked leg at a time, starting from the marked loop of
 * genus one, the tripod of genus zero, or by gluing the two legs of a
 * genus g-1 graph with two markings when there are no markings.  All other
 * classes are reached by closing the maximal ones under edge contraction.
 */
#ifndef TROPICELL_ENUMERATE_HPP
#define TROPICELL_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropicell/canonical.hpp"
#include "tropicell/graph.hpp"

namespace tropicell {

/// Throws std::invalid_argument unless g >= 0, n >= 0 and 2g - 2 + n > 0.
void check_parameters(int g, int n);

/// 3g - 3 + n
inline int max_edge_count(int g, int n) { return 3 * g - 3 + n; }

struct CatalogEntry
{
    /// Canonical representative; its edge order is the reference labeling.
    MarkedWeightedGraph graph;
    CanonicalKey key;
    std::uint64_t automorphisms = 1;
    bool odd_automorphism = false;
    bool repeated_marking = false;
};

/// Annotate a canonical representative.
CatalogEntry make_entry(MarkedWeightedGraph graph, CanonicalKey key);

class GraphCatalog
{
public:
    struct Location
    {
        int degree;
        std::size_t index;
    };

    GraphCatalog() = default;
    GraphCatalog(int g, int n);

    int genus() const { return genus_; }
    int markings() const { return markings_; }

    /// Number of degree slots, 3g-3+n; degree p holds classes with p+1 edges.
    int num_degrees() const { return static_cast<int>(buckets_.size()); }
    const std::vector<CatalogEntry>& cells(int degree) const { return buckets_.at(degree); }
    std::size_t size(int degree) const { return buckets_.at(degree).size(); }
    std::size_t total_size() const;
    bool empty() const { return total_size() == 0; }

    std::optional<Location> find(const CanonicalKey& key) const;
    const CatalogEntry& at(Location loc) const { return buckets_[loc.degree][loc.index]; }

    /// Replace a bucket; entries are sorted by key.
    void set_cells(int degree, std::vector<CatalogEntry> entries);

    /**
     * Edge count whose contractions are still outstanding, or 0 when the
     * catalog is complete.  Only nonzero for checkpoints of interrupted
     * enumerations.
     */
    int pending_edges() const { return pending_edges_; }
    void set_pending_edges(int edges) { pending_edges_ = edges; }

private:
    int genus_ = 0;
    int markings_ = 0;
    int pending_edges_ = 0;
    std::vector<std::vector<CatalogEntry>> buckets_;
    std::unordered_map<CanonicalKey, Location, CanonicalKeyHash> index_;
};

/**
 * Connected genus-g graphs with n markings, all weights 0 and every vertex of
 * valence exactly three, one canonical representative per class, sorted by
 * key.  For (0,3) this is the single vertex carrying three markings.
 */
std::vector<MarkedWeightedGraph> enumerate_maximal(int g, int n);

struct EnumerationOptions
{
    unsigned jobs = 0;
    /// Stop with ResourceLimitExceeded once more classes than this are known (0: no limit).
    std::size_t max_classes = 0;
    std::function<void(const std::string&)> progress;
};

class ResourceLimitExceeded : public std::runtime_error
{
public:
    ResourceLimitExceeded(const std::string& what, GraphCatalog checkpoint)
        : std::runtime_error(what), checkpoint_(std::move(checkpoint))
    {}
    /// Completed buckets, with pending_edges() marking where to resume.
    const GraphCatalog& checkpoint() const { return checkpoint_; }

private:
    GraphCatalog checkpoint_;
};

/// Every class with at least one edge, bucketed by edge count.
GraphCatalog enumerate_all(int g, int n, const EnumerationOptions& options = {});

/// Continue an interrupted enumeration from its checkpoint.
GraphCatalog resume_enumeration(GraphCatalog checkpoint, const EnumerationOptions& options = {});

/**
 * Independent cross-check: enumerate stable graphs directly by vertex count,
 * first Betti number and weight distribution, then place the markings.
 * Exponential in n; intended for 3g-3+n <= 5.
 */
GraphCatalog enumerate_bottom_up(int g, int n);

} // namespace tropicell

#endif
