#include <set>

#include "tropicell/enumerate.hpp"

namespace tropicell {

namespace {

/// Multisets of `count` vertex pairs (a <= b) on nv vertices, as pair lists.
void edge_multisets(int nv, int count, std::size_t first_pair,
                    const std::vector<std::pair<int, int>>& pairs,
                    std::vector<std::pair<int, int>>& current,
                    std::vector<std::vector<std::pair<int, int>>>& out)
{
    if (count == 0)
    {
        out.push_back(current);
        return;
    }
    for (std::size_t k = first_pair; k < pairs.size(); ++k)
    {
        current.push_back(pairs[k]);
        edge_multisets(nv, count - 1, k, pairs, current, out);
        current.pop_back();
    }
}

void weight_distributions(int nv, int total, std::vector<int>& current,
                          std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == nv - 1)
    {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int w = 0; w <= total; ++w)
    {
        current.push_back(w);
        weight_distributions(nv, total - w, current, out);
        current.pop_back();
    }
}

/// Place markings 0..n-1 so that every vertex becomes stable.
void place_markings(const MarkedWeightedGraph& base, const std::vector<int>& deficit, int next,
                    int remaining_deficit, std::vector<int>& placed, std::vector<int>& have,
                    std::set<CanonicalKey>& out)
{
    const int n = static_cast<int>(placed.size());
    if (n - next < remaining_deficit)
        return;
    if (next == n)
    {
        MarkedWeightedGraph g({base.weights().begin(), base.weights().end()}, base.edge_list(),
                              placed);
        out.insert(canonical_key(g));
        return;
    }
    for (int v = 0; v < base.num_vertices(); ++v)
    {
        placed[next] = v;
        const bool helps = have[v] < deficit[v];
        ++have[v];
        place_markings(base, deficit, next + 1, remaining_deficit - (helps ? 1 : 0), placed, have,
                       out);
        --have[v];
    }
}

} // namespace

GraphCatalog enumerate_bottom_up(int g, int n)
{
    check_parameters(g, n);
    GraphCatalog catalog(g, n);
    const int max_edges = max_edge_count(g, n);
    const int max_vertices = 2 * g - 2 + n;
    std::vector<std::set<CanonicalKey>> found(catalog.num_degrees());

    for (int nv = 1; nv <= max_vertices; ++nv)
    {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nv; ++a)
            for (int b = a; b < nv; ++b)
                pairs.emplace_back(a, b);

        for (int b1 = 0; b1 <= g; ++b1)
        {
            const int ne = nv - 1 + b1;
            if (ne < 1 || ne > max_edges)
                continue;
            std::vector<std::vector<std::pair<int, int>>> edge_sets;
            std::vector<std::pair<int, int>> current;
            edge_multisets(nv, ne, 0, pairs, current, edge_sets);
            std::vector<std::vector<int>> weightings;
            std::vector<int> scratch;
            weight_distributions(nv, g - b1, scratch, weightings);

            // Unmarked weighted shapes up to isomorphism.
            std::set<CanonicalKey> shapes;
            for (const auto& edges : edge_sets)
            {
                for (const auto& weights : weightings)
                {
                    MarkedWeightedGraph shape(weights, edges, {});
                    if (is_connected(shape))
                        shapes.insert(canonical_key(shape));
                }
            }

            for (const auto& key : shapes)
            {
                const MarkedWeightedGraph shape = graph_from_key(key);
                std::vector<int> deficit(nv, 0);
                int total_deficit = 0;
                for (int v = 0; v < nv; ++v)
                {
                    const int slack = 2 * shape.weight(v) - 2 + shape.valence(v);
                    deficit[v] = slack > 0 ? 0 : 1 - slack;
                    total_deficit += deficit[v];
                }
                std::vector<int> placed(n, 0), have(nv, 0);
                place_markings(shape, deficit, 0, total_deficit, placed, have, found[ne - 1]);
            }
        }
    }

    for (int p = 0; p < catalog.num_degrees(); ++p)
    {
        std::vector<CatalogEntry> entries;
        for (const auto& key : found[p])
            entries.push_back(make_entry(graph_from_key(key), key));
        catalog.set_cells(p, std::move(entries));
    }
    return catalog;
}

} // namespace tropicell
