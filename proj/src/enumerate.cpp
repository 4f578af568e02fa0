#include "tropicell/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "tropicell/parallel.hpp"

namespace tropicell {

void check_parameters(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw std::invalid_argument("unstable parameters (g=" + std::to_string(g) +
                                    ", n=" + std::to_string(n) + "): need 2g-2+n > 0");
}

CatalogEntry make_entry(MarkedWeightedGraph graph, CanonicalKey key)
{
    CatalogEntry entry;
    const AutomorphismGroup aut = automorphism_group(graph);
    entry.automorphisms = aut.order;
    entry.odd_automorphism = aut.has_odd;
    entry.repeated_marking = has_repeated_marking(graph);
    entry.graph = std::move(graph);
    entry.key = std::move(key);
    return entry;
}

GraphCatalog::GraphCatalog(int g, int n) : genus_(g), markings_(n)
{
    check_parameters(g, n);
    buckets_.resize(max_edge_count(g, n));
}

std::size_t GraphCatalog::total_size() const
{
    std::size_t total = 0;
    for (const auto& b : buckets_)
        total += b.size();
    return total;
}

std::optional<GraphCatalog::Location> GraphCatalog::find(const CanonicalKey& key) const
{
    auto it = index_.find(key);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

void GraphCatalog::set_cells(int degree, std::vector<CatalogEntry> entries)
{
    for (const auto& e : buckets_.at(degree))
        index_.erase(e.key);
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
    for (std::size_t i = 0; i < entries.size(); ++i)
    {
        if (entries[i].graph.num_edges() != degree + 1)
            throw std::invalid_argument("catalog entry has the wrong edge count for its degree");
        if (!index_.emplace(entries[i].key, Location{degree, i}).second)
            throw std::invalid_argument("duplicate class in catalog");
    }
    buckets_[degree] = std::move(entries);
}

namespace {

MarkedWeightedGraph marked_loop()
{
    return MarkedWeightedGraph({0}, {{0, 0}}, {0});
}

MarkedWeightedGraph tripod()
{
    return MarkedWeightedGraph({0}, {}, {0, 0, 0});
}

/// Add marking number n (the new last marking) on a new trivalent vertex.
std::vector<MarkedWeightedGraph> add_leg(const MarkedWeightedGraph& graph)
{
    std::vector<MarkedWeightedGraph> out;
    const int x = graph.num_vertices();
    std::vector<int> weights(graph.weights().begin(), graph.weights().end());
    weights.push_back(0);
    const auto edges = graph.edge_list();
    std::vector<int> markings(graph.markings().begin(), graph.markings().end());

    for (int e = 0; e < graph.num_edges(); ++e)
    {
        auto subdivided = edges;
        auto [a, b] = edges[e];
        subdivided[e] = {a, x};
        subdivided.emplace_back(x, b);
        auto m = markings;
        m.push_back(x);
        out.emplace_back(weights, subdivided, std::move(m));
    }
    for (int i = 0; i < graph.num_markings(); ++i)
    {
        auto extended = edges;
        extended.emplace_back(graph.marking(i), x);
        auto m = markings;
        m[i] = x;
        m.push_back(x);
        out.emplace_back(weights, extended, std::move(m));
    }
    return out;
}

/// Join the vertices carrying the only two markings by a new edge.
MarkedWeightedGraph glue_legs(const MarkedWeightedGraph& graph)
{
    auto edges = graph.edge_list();
    edges.emplace_back(graph.marking(0), graph.marking(1));
    return MarkedWeightedGraph({graph.weights().begin(), graph.weights().end()}, edges, {});
}

std::vector<MarkedWeightedGraph> canonical_unique(const std::vector<MarkedWeightedGraph>& graphs)
{
    std::map<CanonicalKey, MarkedWeightedGraph> unique;
    for (const auto& g : graphs)
    {
        CanonicalKey key = canonical_key(g);
        if (!unique.contains(key))
            unique.emplace(key, graph_from_key(key));
    }
    std::vector<MarkedWeightedGraph> out;
    out.reserve(unique.size());
    for (auto& [key, graph] : unique)
        out.push_back(std::move(graph));
    return out;
}

} // namespace

std::vector<MarkedWeightedGraph> enumerate_maximal(int g, int n)
{
    check_parameters(g, n);
    if (g == 0 && n == 3)
        return {tripod()};
    if (g == 1 && n == 1)
        return {marked_loop()};

    std::vector<MarkedWeightedGraph> candidates;
    if (n == 0)
    {
        for (const auto& smaller : enumerate_maximal(g - 1, 2))
            candidates.push_back(glue_legs(smaller));
    }
    else
    {
        for (const auto& smaller : enumerate_maximal(g, n - 1))
        {
            auto grown = add_leg(smaller);
            candidates.insert(candidates.end(), grown.begin(), grown.end());
        }
    }
    return canonical_unique(candidates);
}

namespace {

class ProgressClock
{
public:
    explicit ProgressClock(const std::function<void(const std::string&)>& sink) : sink_(sink) {}

    void report(const std::string& message, bool force = false)
    {
        if (!sink_)
            return;
        const auto now = std::chrono::steady_clock::now();
        if (force || now - last_ >= std::chrono::seconds(2))
        {
            sink_(message);
            last_ = now;
        }
    }

private:
    const std::function<void(const std::string&)>& sink_;
    std::chrono::steady_clock::time_point last_{};
};

std::vector<CatalogEntry> annotate(const std::vector<CanonicalKey>& keys, unsigned jobs)
{
    std::vector<CatalogEntry> entries(keys.size());
    parallel_for(keys.size(), jobs, [&](std::size_t i) {
        entries[i] = make_entry(graph_from_key(keys[i]), keys[i]);
    });
    return entries;
}

GraphCatalog close_under_contraction(GraphCatalog catalog, const EnumerationOptions& options)
{
    ProgressClock clock(options.progress);
    const unsigned jobs = resolve_jobs(options.jobs);

    for (int edges = catalog.pending_edges(); edges >= 2; --edges)
    {
        const auto& source = catalog.cells(edges - 1);
        std::vector<std::vector<CanonicalKey>> faces(source.size());
        parallel_for(source.size(), jobs, [&](std::size_t i) {
            const auto& graph = source[i].graph;
            for (int e = 0; e < graph.num_edges(); ++e)
                faces[i].push_back(canonical_key(contract_edge(graph, e)));
        });

        std::set<CanonicalKey> unique;
        for (auto& list : faces)
            for (auto& key : list)
                unique.insert(std::move(key));
        std::vector<CanonicalKey> keys(unique.begin(), unique.end());

        if (options.max_classes > 0 && catalog.total_size() + keys.size() > options.max_classes)
        {
            std::ostringstream os;
            os << "class limit " << options.max_classes << " exceeded while contracting "
               << edges << "-edge graphs (g=" << catalog.genus() << ", n=" << catalog.markings()
               << ")";
            throw ResourceLimitExceeded(os.str(), catalog);
        }

        catalog.set_cells(edges - 2, annotate(keys, jobs));
        catalog.set_pending_edges(edges - 1 >= 2 ? edges - 1 : 0);

        std::ostringstream os;
        os << "g=" << catalog.genus() << " n=" << catalog.markings() << ": " << keys.size()
           << " classes with " << edges - 1 << " edges";
        clock.report(os.str());
    }
    catalog.set_pending_edges(0);
    return catalog;
}

} // namespace

GraphCatalog enumerate_all(int g, int n, const EnumerationOptions& options)
{
    check_parameters(g, n);
    GraphCatalog catalog(g, n);
    const int top = max_edge_count(g, n);
    if (top == 0)
        return catalog;

    std::vector<CanonicalKey> keys;
    for (const auto& graph : enumerate_maximal(g, n))
        keys.push_back(canonical_key(graph));
    if (options.max_classes > 0 && keys.size() > options.max_classes)
        throw ResourceLimitExceeded("class limit exceeded by maximal graphs", GraphCatalog(g, n));
    catalog.set_cells(top - 1, annotate(keys, options.jobs));
    catalog.set_pending_edges(top >= 2 ? top : 0);
    return close_under_contraction(std::move(catalog), options);
}

GraphCatalog resume_enumeration(GraphCatalog checkpoint, const EnumerationOptions& options)
{
    if (checkpoint.pending_edges() == 0)
        return checkpoint;
    return close_under_contraction(std::move(checkpoint), options);
}

} // namespace tropicell
