#include "tropicell/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropicell {

MarkedWeightedGraph::MarkedWeightedGraph(std::vector<int> weights,
                                         const std::vector<std::pair<int, int>>& edges,
                                         std::vector<int> markings)
    : weights_(std::move(weights)), markings_(std::move(markings))
{
    const int nv = num_vertices();
    for (int w : weights_)
        if (w < 0)
            throw GraphError("vertex weight must be nonnegative");
    incidence_.reserve(2 * edges.size());
    for (auto [u, v] : edges)
    {
        if (u < 0 || u >= nv || v < 0 || v >= nv)
            throw GraphError("edge endpoint " + std::to_string(u) + "," + std::to_string(v) +
                             " out of range");
        incidence_.push_back(u);
        incidence_.push_back(v);
    }
    for (int v : markings_)
        if (v < 0 || v >= nv)
            throw GraphError("marking vertex " + std::to_string(v) + " out of range");
}

int MarkedWeightedGraph::valence(int v) const
{
    int val = static_cast<int>(std::count(incidence_.begin(), incidence_.end(), v));
    val += static_cast<int>(std::count(markings_.begin(), markings_.end(), v));
    return val;
}

std::vector<std::pair<int, int>> MarkedWeightedGraph::edge_list() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges());
    for (int e = 0; e < num_edges(); ++e)
        out.push_back(endpoints(e));
    return out;
}

bool is_connected(const MarkedWeightedGraph& graph)
{
    const int nv = graph.num_vertices();
    if (nv == 0)
        return false;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = nv;
    for (int e = 0; e < graph.num_edges(); ++e)
    {
        auto [u, v] = graph.endpoints(e);
        int a = find(u), b = find(v);
        if (a != b)
        {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

int genus(const MarkedWeightedGraph& graph)
{
    if (!is_connected(graph))
        throw GraphError("genus requires a connected graph");
    int g = graph.num_edges() - graph.num_vertices() + 1;
    for (int w : graph.weights())
        g += w;
    return g;
}

bool is_stable(const MarkedWeightedGraph& graph)
{
    std::vector<int> val(graph.num_vertices(), 0);
    for (int v : graph.incidence())
        ++val[v];
    for (int v : graph.markings())
        ++val[v];
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (2 * graph.weight(v) - 2 + val[v] <= 0)
            return false;
    return true;
}

bool has_repeated_marking(const MarkedWeightedGraph& graph)
{
    std::vector<char> seen(graph.num_vertices(), 0);
    for (int v : graph.markings())
    {
        if (seen[v])
            return true;
        seen[v] = 1;
    }
    return false;
}

CoreSubgraph core(const MarkedWeightedGraph& graph)
{
    const int nv = graph.num_vertices();
    std::vector<char> vertex_alive(nv, 1), edge_alive(graph.num_edges(), 1);
    std::vector<int> degree(nv, 0);
    for (int v : graph.incidence())
        ++degree[v];

    std::vector<int> stack;
    for (int v = 0; v < nv; ++v)
        if (graph.weight(v) == 0 && degree[v] <= 1)
            stack.push_back(v);

    while (!stack.empty())
    {
        int v = stack.back();
        stack.pop_back();
        if (!vertex_alive[v])
            continue;
        vertex_alive[v] = 0;
        for (int e = 0; e < graph.num_edges(); ++e)
        {
            if (!edge_alive[e])
                continue;
            auto [a, b] = graph.endpoints(e);
            if (a != v && b != v)
                continue;
            edge_alive[e] = 0;
            int other = (a == v) ? b : a;
            --degree[v];
            --degree[other];
            if (vertex_alive[other] && graph.weight(other) == 0 && degree[other] <= 1)
                stack.push_back(other);
        }
    }

    CoreSubgraph out;
    for (int v = 0; v < nv; ++v)
        if (vertex_alive[v])
            out.vertices.push_back(v);
    for (int e = 0; e < graph.num_edges(); ++e)
        if (edge_alive[e])
            out.edges.push_back(e);
    return out;
}

MarkedWeightedGraph contract_edge(const MarkedWeightedGraph& graph, int e)
{
    if (e < 0 || e >= graph.num_edges())
        throw GraphError("edge index " + std::to_string(e) + " out of range");

    auto [x, y] = graph.endpoints(e);
    std::vector<int> weights(graph.weights().begin(), graph.weights().end());

    if (x == y)
    {
        ++weights[x];
        std::vector<std::pair<int, int>> edges;
        edges.reserve(graph.num_edges() - 1);
        for (int f = 0; f < graph.num_edges(); ++f)
            if (f != e)
                edges.push_back(graph.endpoints(f));
        return MarkedWeightedGraph(std::move(weights), edges,
                                   {graph.markings().begin(), graph.markings().end()});
    }

    const int keep = std::min(x, y), drop = std::max(x, y);
    weights[keep] += weights[drop];
    weights.erase(weights.begin() + drop);
    auto remap = [&](int v) {
        if (v == drop)
            return keep;
        return v > drop ? v - 1 : v;
    };

    std::vector<std::pair<int, int>> edges;
    edges.reserve(graph.num_edges() - 1);
    for (int f = 0; f < graph.num_edges(); ++f)
    {
        if (f == e)
            continue;
        auto [a, b] = graph.endpoints(f);
        edges.emplace_back(remap(a), remap(b));
    }
    std::vector<int> markings;
    markings.reserve(graph.num_markings());
    for (int v : graph.markings())
        markings.push_back(remap(v));
    return MarkedWeightedGraph(std::move(weights), edges, std::move(markings));
}

MarkedWeightedGraph permute_markings(const MarkedWeightedGraph& graph,
                                     std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != graph.num_markings())
        throw GraphError("marking permutation has wrong size");
    std::vector<int> markings(graph.num_markings(), -1);
    for (int i = 0; i < graph.num_markings(); ++i)
    {
        if (perm[i] < 0 || perm[i] >= graph.num_markings() || markings[perm[i]] != -1)
            throw GraphError("marking permutation is not a bijection");
        markings[perm[i]] = graph.marking(i);
    }
    return MarkedWeightedGraph({graph.weights().begin(), graph.weights().end()},
                               graph.edge_list(), std::move(markings));
}

MarkedWeightedGraph reindex(const MarkedWeightedGraph& graph,
                            std::span<const int> vertex_perm,
                            std::span<const int> edge_perm,
                            const std::vector<bool>& flip)
{
    const int nv = graph.num_vertices(), ne = graph.num_edges();
    if (static_cast<int>(vertex_perm.size()) != nv || static_cast<int>(edge_perm.size()) != ne ||
        static_cast<int>(flip.size()) != ne)
        throw GraphError("reindex: permutation sizes do not match the graph");

    std::vector<int> weights(nv);
    for (int v = 0; v < nv; ++v)
        weights[vertex_perm[v]] = graph.weight(v);
    std::vector<std::pair<int, int>> edges(ne);
    for (int e = 0; e < ne; ++e)
    {
        auto [a, b] = graph.endpoints(e);
        if (flip[e])
            std::swap(a, b);
        edges[edge_perm[e]] = {vertex_perm[a], vertex_perm[b]};
    }
    std::vector<int> markings;
    markings.reserve(graph.num_markings());
    for (int v : graph.markings())
        markings.push_back(vertex_perm[v]);
    return MarkedWeightedGraph(std::move(weights), edges, std::move(markings));
}

} // namespace tropicell
