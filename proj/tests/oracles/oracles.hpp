// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropicell/canonical.hpp"
#include "tropicell/graph.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<std::int64_t>>;

/// Rank over Q by textbook Gaussian elimination on exact rationals.
inline std::size_t rational_rank(const Dense& m)
{
    if (m.empty())
        return 0;
    std::vector<std::vector<Rational>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        a[i].assign(m[i].begin(), m[i].end());
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < rows; ++r)
        {
            if (r == rank || a[r][c] == 0)
                continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

struct AutCount
{
    std::uint64_t order = 0;
    bool has_odd = false;
};

/**
 * Count half-edge bijections that commute with the involution, induce a
 * well-defined vertex bijection preserving weights, and fix every marking.
 * Brute force over edge images and orientations.
 */
inline AutCount brute_force_automorphisms(const tropicell::MarkedWeightedGraph& g)
{
    const int ne = g.num_edges(), nv = g.num_vertices();
    AutCount out;
    std::vector<int> image(ne, -1), vmap(nv, -1), vinv(nv, -1);
    std::vector<char> used(ne, 0);
    for (int i = 0; i < g.num_markings(); ++i)
    {
        const int v = g.marking(i);
        vmap[v] = v;
        vinv[v] = v;
    }

    std::function<void(int)> go = [&](int e) {
        if (e == ne)
        {
            // Vertices without half-edges must still map bijectively; only the
            // single-vertex edgeless graph has one, and it is fixed.
            std::vector<int> perm(image);
            int inversions = 0;
            for (int i = 0; i < ne; ++i)
                for (int j = i + 1; j < ne; ++j)
                    inversions += perm[i] > perm[j];
            ++out.order;
            out.has_odd = out.has_odd || (inversions % 2 == 1);
            return;
        }
        const auto [a, b] = g.endpoints(e);
        for (int f = 0; f < ne; ++f)
        {
            if (used[f])
                continue;
            const auto [c, d] = g.endpoints(f);
            for (int orient = 0; orient < 2; ++orient)
            {
                const int x = orient ? d : c, y = orient ? c : d;
                std::vector<int> saved_map = vmap, saved_inv = vinv;
                auto bind = [&](int from, int to) {
                    if (vmap[from] == -1 && vinv[to] == -1)
                    {
                        if (g.weight(from) != g.weight(to))
                            return false;
                        vmap[from] = to;
                        vinv[to] = from;
                        return true;
                    }
                    return vmap[from] == to;
                };
                if (bind(a, x) && bind(b, y))
                {
                    used[f] = 1;
                    image[e] = f;
                    go(e + 1);
                    used[f] = 0;
                }
                vmap = std::move(saved_map);
                vinv = std::move(saved_inv);
            }
        }
    };
    go(0);
    return out;
}

/**
 * Classes of trivalent weight-0 connected graphs of genus g with n markings,
 * by exhaustive placement of markings on vertex slots and perfect matchings
 * of the remaining half-edge slots.
 */
inline std::set<tropicell::CanonicalKey> maximal_by_pairing(int g, int n)
{
    const int nv = 2 * g - 2 + n;
    std::set<tropicell::CanonicalKey> keys;
    if (nv <= 0)
        return keys;
    std::vector<int> marks(n, 0), load(nv, 0);

    std::function<void(int)> place = [&](int i) {
        if (i < n)
        {
            for (int v = 0; v < nv; ++v)
            {
                if (load[v] == 3)
                    continue;
                marks[i] = v;
                ++load[v];
                place(i + 1);
                --load[v];
            }
            return;
        }
        std::vector<int> slots;
        for (int v = 0; v < nv; ++v)
            for (int k = load[v]; k < 3; ++k)
                slots.push_back(v);
        if (slots.size() % 2 != 0)
            return;
        std::vector<char> taken(slots.size(), 0);
        std::vector<std::pair<int, int>> edges;
        std::function<void()> match = [&]() {
            std::size_t first = 0;
            while (first < slots.size() && taken[first])
                ++first;
            if (first == slots.size())
            {
                tropicell::MarkedWeightedGraph graph(std::vector<int>(nv, 0), edges, marks);
                if (tropicell::is_connected(graph) && tropicell::genus(graph) == g)
                    keys.insert(tropicell::canonical_key(graph));
                return;
            }
            taken[first] = 1;
            for (std::size_t k = first + 1; k < slots.size(); ++k)
            {
                if (taken[k])
                    continue;
                taken[k] = 1;
                edges.emplace_back(std::min(slots[first], slots[k]), std::max(slots[first], slots[k]));
                match();
                edges.pop_back();
                taken[k] = 0;
            }
            taken[first] = 0;
        };
        match();
    };
    place(0);
    return keys;
}

} // namespace oracle
