#include "tropicell/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "tropicell/permutation.hpp"

namespace tropicell {

std::string CanonicalKey::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes)
    {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("hex key has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        throw std::invalid_argument("hex key must be lowercase hexadecimal");
    };
    CanonicalKey key;
    key.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        key.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return key;
}

bool is_isomorphism(const MarkedWeightedGraph& from, const MarkedWeightedGraph& to,
                    const SignedIso& iso)
{
    if (from.num_vertices() != to.num_vertices() || from.num_edges() != to.num_edges() ||
        from.num_markings() != to.num_markings())
        return false;
    if (static_cast<int>(iso.vertex_map.size()) != from.num_vertices() ||
        static_cast<int>(iso.half_edge_map.size()) != from.num_half_edges() ||
        static_cast<int>(iso.edge_perm.size()) != from.num_edges())
        return false;
    if (!is_permutation(iso.vertex_map) || !is_permutation(iso.half_edge_map) ||
        !is_permutation(iso.edge_perm))
        return false;
    for (int h = 0; h < from.num_half_edges(); ++h)
    {
        const int image = iso.half_edge_map[h];
        if (iso.half_edge_map[MarkedWeightedGraph::opposite(h)] != MarkedWeightedGraph::opposite(image))
            return false;
        if (to.vertex_of(image) != iso.vertex_map[from.vertex_of(h)])
            return false;
        if (MarkedWeightedGraph::edge_of(image) != iso.edge_perm[MarkedWeightedGraph::edge_of(h)])
            return false;
    }
    for (int v = 0; v < from.num_vertices(); ++v)
        if (to.weight(iso.vertex_map[v]) != from.weight(v))
            return false;
    for (int i = 0; i < from.num_markings(); ++i)
        if (to.marking(i) != iso.vertex_map[from.marking(i)])
            return false;
    return iso.sign == permutation_sign(iso.edge_perm);
}

SignedIso compose(const SignedIso& first, const SignedIso& second)
{
    SignedIso out;
    out.vertex_map = compose(std::span<const int>(first.vertex_map), second.vertex_map);
    out.half_edge_map = compose(std::span<const int>(first.half_edge_map), second.half_edge_map);
    out.edge_perm = compose(std::span<const int>(first.edge_perm), second.edge_perm);
    out.sign = first.sign * second.sign;
    return out;
}

SignedIso inverse(const SignedIso& iso)
{
    return SignedIso{inverse(std::span<const int>(iso.vertex_map)),
                     inverse(std::span<const int>(iso.half_edge_map)),
                     inverse(std::span<const int>(iso.edge_perm)), iso.sign};
}

SignedIso identity_iso(const MarkedWeightedGraph& graph)
{
    return SignedIso{identity_permutation(graph.num_vertices()),
                     identity_permutation(graph.num_half_edges()),
                     identity_permutation(graph.num_edges()), 1};
}

namespace {

constexpr int kMaxByte = 255;

/// Individualization-refinement search over vertex orderings.
class LeafSearch
{
public:
    LeafSearch(const MarkedWeightedGraph& graph, bool collect_all)
        : graph_(graph), nv_(graph.num_vertices()), collect_all_(collect_all)
    {
        if (nv_ > kMaxByte || graph.num_edges() > kMaxByte || graph.num_markings() > kMaxByte)
            throw GraphError("graph too large for canonical encoding");
        mult_.assign(static_cast<std::size_t>(nv_) * nv_, 0);
        for (int e = 0; e < graph.num_edges(); ++e)
        {
            auto [a, b] = graph.endpoints(e);
            ++mult_[a * nv_ + b];
            if (a != b)
                ++mult_[b * nv_ + a];
        }
        neighbours_.resize(nv_);
        for (int v = 0; v < nv_; ++v)
            for (int u = 0; u < nv_; ++u)
                if (u != v && mult_[v * nv_ + u] > 0)
                    neighbours_[v].push_back(u);
        marks_.resize(nv_);
        for (int i = 0; i < graph.num_markings(); ++i)
            marks_[graph.marking(i)].push_back(i);
    }

    void run()
    {
        if (nv_ == 0)
        {
            best_ = encode({});
            leaves_.push_back({});
            return;
        }
        std::vector<std::vector<int>> signatures(nv_);
        for (int v = 0; v < nv_; ++v)
        {
            auto& s = signatures[v];
            s.push_back(graph_.weight(v));
            s.push_back(mult_[v * nv_ + v]);
            s.push_back(static_cast<int>(marks_[v].size()));
            s.insert(s.end(), marks_[v].begin(), marks_[v].end());
        }
        std::vector<int> colours = rank_signatures(signatures);
        explore(std::move(colours));
    }

    const std::string& best() const { return best_; }
    /// Vertex positions of every leaf whose encoding equals best().
    const std::vector<std::vector<int>>& leaves() const { return leaves_; }

private:
    static std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs)
    {
        const int n = static_cast<int>(sigs.size());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sigs[a] < sigs[b]; });
        std::vector<int> colours(n);
        int colour = 0;
        for (int i = 0; i < n; ++i)
        {
            if (i > 0 && sigs[order[i]] != sigs[order[i - 1]])
                ++colour;
            colours[order[i]] = colour;
        }
        return colours;
    }

    static int count_colours(const std::vector<int>& colours)
    {
        return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
    }

    void refine(std::vector<int>& colours) const
    {
        int count = count_colours(colours);
        std::vector<std::vector<int>> sigs(nv_);
        while (count < nv_)
        {
            for (int v = 0; v < nv_; ++v)
            {
                auto& s = sigs[v];
                s.clear();
                for (int u : neighbours_[v])
                    s.push_back(colours[u] * (kMaxByte + 1) + mult_[v * nv_ + u]);
                std::sort(s.begin(), s.end());
                s.insert(s.begin(), colours[v]);
            }
            std::vector<int> next = rank_signatures(sigs);
            const int next_count = count_colours(next);
            colours = std::move(next);
            if (next_count == count)
                break;
            count = next_count;
        }
    }

    void explore(std::vector<int> colours)
    {
        refine(colours);
        const int count = count_colours(colours);
        if (count == nv_)
        {
            visit_leaf(colours);
            return;
        }
        // First non-singleton cell.
        std::vector<int> size(count, 0);
        for (int c : colours)
            ++size[c];
        int target = 0;
        while (size[target] < 2)
            ++target;
        for (int v = 0; v < nv_; ++v)
        {
            if (colours[v] != target)
                continue;
            std::vector<int> split(nv_);
            for (int u = 0; u < nv_; ++u)
                split[u] = 2 * colours[u] + ((colours[u] == target && u != v) ? 1 : 0);
            std::vector<std::vector<int>> sigs(nv_);
            for (int u = 0; u < nv_; ++u)
                sigs[u] = {split[u]};
            explore(rank_signatures(sigs));
        }
    }

    std::string encode(const std::vector<int>& pos) const
    {
        std::vector<int> order(nv_);
        for (int v = 0; v < nv_; ++v)
            order[pos[v]] = v;
        std::string code;
        code.reserve(3 + nv_ + graph_.num_markings() + nv_ * (nv_ + 1) / 2);
        code.push_back(static_cast<char>(nv_));
        code.push_back(static_cast<char>(graph_.num_edges()));
        code.push_back(static_cast<char>(graph_.num_markings()));
        for (int k = 0; k < nv_; ++k)
        {
            const int w = graph_.weight(order[k]);
            if (w > kMaxByte)
                throw GraphError("vertex weight too large for canonical encoding");
            code.push_back(static_cast<char>(w));
        }
        for (int i = 0; i < graph_.num_markings(); ++i)
            code.push_back(static_cast<char>(pos[graph_.marking(i)]));
        for (int a = 0; a < nv_; ++a)
            for (int b = a; b < nv_; ++b)
                code.push_back(static_cast<char>(mult_[order[a] * nv_ + order[b]]));
        return code;
    }

    void visit_leaf(const std::vector<int>& pos)
    {
        std::string code = encode(pos);
        if (leaves_.empty() || code < best_)
        {
            best_ = std::move(code);
            leaves_.clear();
            leaves_.push_back(pos);
        }
        else if (collect_all_ && code == best_)
        {
            leaves_.push_back(pos);
        }
    }

    const MarkedWeightedGraph& graph_;
    int nv_;
    bool collect_all_;
    std::vector<int> mult_;
    std::vector<std::vector<int>> neighbours_;
    std::vector<std::vector<int>> marks_;
    std::string best_;
    std::vector<std::vector<int>> leaves_;
};

/// Isomorphism from graph onto the representative determined by vertex positions.
SignedIso iso_from_positions(const MarkedWeightedGraph& graph, const std::vector<int>& pos)
{
    const int ne = graph.num_edges();
    std::vector<std::tuple<int, int, int>> keyed(ne);
    for (int e = 0; e < ne; ++e)
    {
        auto [x, y] = graph.endpoints(e);
        keyed[e] = {std::min(pos[x], pos[y]), std::max(pos[x], pos[y]), e};
    }
    std::sort(keyed.begin(), keyed.end());

    SignedIso iso;
    iso.vertex_map = pos;
    iso.edge_perm.assign(ne, 0);
    iso.half_edge_map.assign(2 * ne, 0);
    for (int k = 0; k < ne; ++k)
    {
        const int e = std::get<2>(keyed[k]);
        iso.edge_perm[e] = k;
        auto [x, y] = graph.endpoints(e);
        if (pos[x] <= pos[y])
        {
            iso.half_edge_map[2 * e] = 2 * k;
            iso.half_edge_map[2 * e + 1] = 2 * k + 1;
        }
        else
        {
            iso.half_edge_map[2 * e] = 2 * k + 1;
            iso.half_edge_map[2 * e + 1] = 2 * k;
        }
    }
    iso.sign = permutation_sign(iso.edge_perm);
    return iso;
}

} // namespace

MarkedWeightedGraph graph_from_key(const CanonicalKey& key)
{
    const auto& b = key.bytes;
    auto at = [&](std::size_t i) -> int {
        if (i >= b.size())
            throw std::invalid_argument("truncated canonical key");
        return static_cast<unsigned char>(b[i]);
    };
    const int nv = at(0), ne = at(1), n = at(2);
    std::size_t i = 3;
    std::vector<int> weights(nv);
    for (int k = 0; k < nv; ++k)
        weights[k] = at(i++);
    std::vector<int> markings(n);
    for (int k = 0; k < n; ++k)
        markings[k] = at(i++);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < nv; ++a)
        for (int c = a; c < nv; ++c)
            for (int m = at(i++); m > 0; --m)
                edges.emplace_back(a, c);
    if (i != b.size() || static_cast<int>(edges.size()) != ne)
        throw std::invalid_argument("malformed canonical key");
    return MarkedWeightedGraph(std::move(weights), edges, std::move(markings));
}

CanonicalKey canonical_key(const MarkedWeightedGraph& graph)
{
    LeafSearch search(graph, false);
    search.run();
    return CanonicalKey{search.best()};
}

CanonicalForm canonicalize(const MarkedWeightedGraph& graph)
{
    LeafSearch search(graph, false);
    search.run();
    CanonicalForm out;
    out.key = CanonicalKey{search.best()};
    out.graph = graph_from_key(out.key);
    out.iso = iso_from_positions(graph, search.leaves().front());
    return out;
}

AutomorphismGroup automorphism_group(const MarkedWeightedGraph& graph)
{
    LeafSearch search(graph, true);
    search.run();

    AutomorphismGroup group;
    const auto& leaves = search.leaves();
    const SignedIso first = iso_from_positions(graph, leaves.front());
    const SignedIso first_inv = inverse(first);
    group.order = leaves.size();
    for (std::size_t k = 1; k < leaves.size(); ++k)
    {
        SignedIso aut = compose(iso_from_positions(graph, leaves[k]), first_inv);
        group.has_odd = group.has_odd || aut.sign < 0;
        group.generators.push_back(std::move(aut));
    }

    // Symmetries invisible at the vertex level: permuting parallel edges,
    // permuting loops at a vertex, flipping loops.
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int e = 0; e < graph.num_edges(); ++e)
    {
        auto [a, b] = graph.endpoints(e);
        bundles[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
    for (const auto& [ends, edges] : bundles)
    {
        const bool loops = ends.first == ends.second;
        const int k = static_cast<int>(edges.size());
        group.order *= factorial(k);
        for (int j = 0; j + 1 < k; ++j)
        {
            SignedIso swap = identity_iso(graph);
            const int e = edges[j], f = edges[j + 1];
            std::swap(swap.edge_perm[e], swap.edge_perm[f]);
            swap.half_edge_map[2 * e] = 2 * f;
            swap.half_edge_map[2 * e + 1] = 2 * f + 1;
            swap.half_edge_map[2 * f] = 2 * e;
            swap.half_edge_map[2 * f + 1] = 2 * e + 1;
            // Parallel edges may be stored with opposite orientations.
            if (!loops && graph.vertex_of(2 * e) != graph.vertex_of(2 * f))
            {
                swap.half_edge_map[2 * e] = 2 * f + 1;
                swap.half_edge_map[2 * e + 1] = 2 * f;
                swap.half_edge_map[2 * f] = 2 * e + 1;
                swap.half_edge_map[2 * f + 1] = 2 * e;
            }
            swap.sign = -1;
            group.has_odd = true;
            group.generators.push_back(std::move(swap));
        }
        if (loops)
        {
            for (int e : edges)
            {
                group.order *= 2;
                SignedIso flip = identity_iso(graph);
                std::swap(flip.half_edge_map[2 * e], flip.half_edge_map[2 * e + 1]);
                group.generators.push_back(std::move(flip));
            }
        }
    }
    return group;
}

bool has_odd_automorphism(const MarkedWeightedGraph& graph)
{
    for (int e = 0; e < graph.num_edges(); ++e)
    {
        auto [a, b] = graph.endpoints(e);
        for (int f = e + 1; f < graph.num_edges(); ++f)
        {
            auto [c, d] = graph.endpoints(f);
            if ((a == c && b == d) || (a == d && b == c))
                return true;
        }
    }
    return automorphism_group(graph).has_odd;
}

} // namespace tropicell
