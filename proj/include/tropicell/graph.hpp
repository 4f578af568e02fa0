/**
 * Stable marked weighted graphs in the half-edge formalism.
 *
 * A graph stores its half-edges densely: half-edges 2e and 2e+1 form edge e,
 * so the fixed-point-free involution is h -> h ^ 1.  Each half-edge has an
 * incident vertex, each vertex a nonnegative weight, and marking i (0-based)
 * sits at vertex markings()[i].
 */
#ifndef TROPICELL_GRAPH_HPP
#define TROPICELL_GRAPH_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropicell {

class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class MarkedWeightedGraph
{
public:
    MarkedWeightedGraph() = default;

    /**
     * Build a graph from vertex weights, an edge list (loops as {u, u}) and
     * the vertex carrying each marking.  Throws GraphError on bad indices or
     * negative weights.  Connectivity and stability are not required here.
     */
    MarkedWeightedGraph(std::vector<int> weights,
                        const std::vector<std::pair<int, int>>& edges,
                        std::vector<int> markings);

    int num_vertices() const { return static_cast<int>(weights_.size()); }
    int num_edges() const { return static_cast<int>(incidence_.size() / 2); }
    int num_half_edges() const { return static_cast<int>(incidence_.size()); }
    int num_markings() const { return static_cast<int>(markings_.size()); }

    int weight(int v) const { return weights_[v]; }
    int marking(int i) const { return markings_[i]; }
    int vertex_of(int h) const { return incidence_[h]; }

    static constexpr int opposite(int h) { return h ^ 1; }
    static constexpr int edge_of(int h) { return h >> 1; }

    std::pair<int, int> endpoints(int e) const
    {
        return {incidence_[2 * e], incidence_[2 * e + 1]};
    }
    bool is_loop(int e) const { return incidence_[2 * e] == incidence_[2 * e + 1]; }

    /// Incident half-edges plus markings; a loop contributes two.
    int valence(int v) const;

    std::span<const int> weights() const { return weights_; }
    std::span<const int> incidence() const { return incidence_; }
    std::span<const int> markings() const { return markings_; }

    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const MarkedWeightedGraph&) const = default;

private:
    std::vector<int> weights_;
    std::vector<int> incidence_;
    std::vector<int> markings_;
};

bool is_connected(const MarkedWeightedGraph& graph);

/// b_1 + total weight.  Throws GraphError when the graph is disconnected.
int genus(const MarkedWeightedGraph& graph);

/// Every vertex satisfies 2 w(v) - 2 + val(v) > 0.
bool is_stable(const MarkedWeightedGraph& graph);

/// True when two markings share a vertex.
bool has_repeated_marking(const MarkedWeightedGraph& graph);

struct CoreSubgraph
{
    std::vector<int> vertices;
    std::vector<int> edges;

    bool empty() const { return vertices.empty(); }
};

/**
 * Smallest connected subgraph containing every cycle and every vertex of
 * positive weight.  Obtained by repeatedly deleting weight-0 vertices of
 * degree at most one.
 */
CoreSubgraph core(const MarkedWeightedGraph& graph);

/**
 * Collapse edge e.  The remaining edges keep their relative order (edges
 * after e shift down by one); the merged vertex takes the smaller index.
 */
MarkedWeightedGraph contract_edge(const MarkedWeightedGraph& graph, int e);

/// Marking i of the input becomes marking perm[i] of the result.
MarkedWeightedGraph permute_markings(const MarkedWeightedGraph& graph,
                                     std::span<const int> perm);

/**
 * Relabel internal indices: vertex v becomes vertex_perm[v], edge e becomes
 * edge_perm[e], and the two half-edges of e are exchanged when flip[e].
 * The result is isomorphic to the input.
 */
MarkedWeightedGraph reindex(const MarkedWeightedGraph& graph,
                            std::span<const int> vertex_perm,
                            std::span<const int> edge_perm,
                            const std::vector<bool>& flip);

} // namespace tropicell

#endif
