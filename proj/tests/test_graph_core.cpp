#include <catch_amalgamated.hpp>

#include <random>

#include "oracles/oracles.hpp"
#include "tropicell/canonical.hpp"
#include "tropicell/enumerate.hpp"
#include "tropicell/graph.hpp"
#include "tropicell/graph_json.hpp"

using namespace tropicell;

namespace {

MarkedWeightedGraph marked_loop() { return {{0}, {{0, 0}}, {0}}; }
MarkedWeightedGraph parallel_pair() { return {{0, 0}, {{0, 1}, {0, 1}}, {0, 1}}; }

MarkedWeightedGraph marked_cycle(int n)
{
    std::vector<std::pair<int, int>> edges;
    std::vector<int> marks;
    for (int i = 0; i < n; ++i)
    {
        edges.emplace_back(i, (i + 1) % n);
        marks.push_back(i);
    }
    return {std::vector<int>(n, 0), edges, marks};
}

MarkedWeightedGraph random_reindex(const MarkedWeightedGraph& g, std::mt19937_64& rng)
{
    std::vector<int> vp(g.num_vertices()), ep(g.num_edges());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);
    std::vector<bool> flip(g.num_edges());
    for (std::size_t e = 0; e < flip.size(); ++e)
        flip[e] = rng() & 1;
    return reindex(g, vp, ep, flip);
}

} // namespace

TEST_CASE("genus examples")
{
    CHECK(genus(MarkedWeightedGraph({1}, {{0, 0}}, {})) == 2);
    CHECK(genus(MarkedWeightedGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {})) == 2);
    CHECK(genus(MarkedWeightedGraph({0, 0, 0, 0}, {{0, 1}, {1, 2}, {1, 3}}, {})) == 0);
    CHECK_THROWS_AS(genus(MarkedWeightedGraph({0, 0}, {}, {})), GraphError);
}

TEST_CASE("stability examples")
{
    CHECK(is_stable(marked_loop()));
    CHECK_FALSE(is_stable(MarkedWeightedGraph({0, 1}, {{0, 1}}, {0})));
    CHECK_FALSE(is_stable(MarkedWeightedGraph({1}, {}, {})));
    CHECK(is_stable(MarkedWeightedGraph({1}, {}, {0})));
}

TEST_CASE("valence sum counts half-edges and markings")
{
    const MarkedWeightedGraph g({0, 1, 0}, {{0, 1}, {1, 1}, {0, 2}, {0, 2}}, {0, 2, 2});
    int total = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        total += g.valence(v);
    CHECK(total == g.num_half_edges() + g.num_markings());
}

TEST_CASE("constructor rejects bad input")
{
    CHECK_THROWS_AS(MarkedWeightedGraph({-1}, {}, {}), GraphError);
    CHECK_THROWS_AS(MarkedWeightedGraph({0}, {{0, 1}}, {}), GraphError);
    CHECK_THROWS_AS(MarkedWeightedGraph({0}, {}, {3}), GraphError);
}

TEST_CASE("core examples")
{
    // 3-cycle on 0,1,2 with pendant edge to 3.
    const MarkedWeightedGraph tri({0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}, {});
    const CoreSubgraph c = core(tri);
    CHECK(c.vertices == std::vector<int>{0, 1, 2});
    CHECK(c.edges == std::vector<int>{0, 1, 2});

    const MarkedWeightedGraph tree({0, 1, 0}, {{0, 1}, {1, 2}}, {});
    const CoreSubgraph t = core(tree);
    CHECK(t.vertices == std::vector<int>{1});
    CHECK(t.edges.empty());

    const MarkedWeightedGraph flat({0, 0, 0, 0}, {{0, 1}, {1, 2}, {1, 3}}, {});
    CHECK(core(flat).empty());
}

TEST_CASE("contract_edge examples")
{
    const MarkedWeightedGraph loop_contracted = contract_edge(marked_loop(), 0);
    CHECK(loop_contracted.num_vertices() == 1);
    CHECK(loop_contracted.num_edges() == 0);
    CHECK(loop_contracted.weight(0) == 1);
    CHECK(loop_contracted.marking(0) == 0);

    const MarkedWeightedGraph tree_edge = contract_edge(MarkedWeightedGraph({1, 2}, {{0, 1}}, {1}), 0);
    CHECK(tree_edge.num_vertices() == 1);
    CHECK(tree_edge.weight(0) == 3);
    CHECK(tree_edge.marking(0) == 0);

    const MarkedWeightedGraph pp = parallel_pair();
    const MarkedWeightedGraph merged = contract_edge(pp, 0);
    CHECK(merged.num_edges() == 1);
    CHECK(merged.is_loop(0));
    CHECK(genus(merged) == genus(pp));

    CHECK_THROWS(contract_edge(pp, 2));
}

TEST_CASE("contraction preserves genus and stability on a catalog")
{
    const GraphCatalog catalog = enumerate_all(1, 4, {.jobs = 1});
    for (int p = 0; p < catalog.num_degrees(); ++p)
        for (const auto& entry : catalog.cells(p))
            for (int e = 0; e < entry.graph.num_edges(); ++e)
            {
                const MarkedWeightedGraph c = contract_edge(entry.graph, e);
                CHECK(genus(c) == 1);
                CHECK(is_stable(c));
            }
}

TEST_CASE("canonical key is invariant under re-indexing")
{
    std::mt19937_64 rng(7);
    const std::vector<MarkedWeightedGraph> graphs = {
        marked_loop(), parallel_pair(), marked_cycle(5),
        MarkedWeightedGraph({0, 1, 0}, {{0, 1}, {1, 1}, {0, 2}, {0, 2}}, {0, 2, 2}),
        MarkedWeightedGraph({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}, {})};
    for (const auto& g : graphs)
    {
        const CanonicalForm form = canonicalize(g);
        CHECK(is_isomorphism(g, form.graph, form.iso));
        CHECK(form.graph == graph_from_key(form.key));
        for (int t = 0; t < 100; ++t)
        {
            const MarkedWeightedGraph h = random_reindex(g, rng);
            const CanonicalForm hf = canonicalize(h);
            REQUIRE(hf.key == form.key);
            CHECK(is_isomorphism(h, hf.graph, hf.iso));
        }
    }
}

TEST_CASE("non-isomorphic graphs get distinct keys")
{
    CHECK(canonical_key(marked_cycle(4)) != canonical_key(permute_markings(marked_cycle(4), std::vector<int>{0, 2, 1, 3})));
    CHECK(canonical_key(marked_loop()) != canonical_key(MarkedWeightedGraph({1}, {}, {0})));
}

TEST_CASE("canonical key is deterministic and hex round-trips")
{
    const CanonicalKey a = canonical_key(marked_loop());
    CHECK(a == canonical_key(marked_loop()));
    CHECK(CanonicalKey::from_hex(a.hex()) == a);
    const std::string hex = a.hex();
    CHECK(std::all_of(hex.begin(), hex.end(), [](char c) { return std::isdigit(c) || (c >= 'a' && c <= 'f'); }));
}

TEST_CASE("edge swap of a two-edge cell flips the iso sign")
{
    // Path 0-1-2 with two markings on each end: a 2-edge cell with trivial Aut on edges.
    const MarkedWeightedGraph a({0, 0, 0}, {{0, 1}, {1, 2}}, {0, 0, 1, 2, 2});
    const MarkedWeightedGraph b({0, 0, 0}, {{1, 2}, {0, 1}}, {0, 0, 1, 2, 2});
    const CanonicalForm fa = canonicalize(a), fb = canonicalize(b);
    REQUIRE(fa.key == fb.key);
    CHECK(fa.iso.sign * fb.iso.sign == -1);
}

TEST_CASE("automorphism group examples")
{
    const AutomorphismGroup loop = automorphism_group(marked_loop());
    CHECK(loop.order == 2);
    CHECK_FALSE(loop.has_odd);
    for (const auto& gen : loop.generators)
    {
        CHECK(gen.sign == 1);
        CHECK(is_isomorphism(marked_loop(), marked_loop(), gen));
    }
    CHECK_FALSE(has_odd_automorphism(marked_loop()));

    const AutomorphismGroup pair = automorphism_group(parallel_pair());
    CHECK(pair.order == 2);
    CHECK(pair.has_odd);
    CHECK(has_odd_automorphism(parallel_pair()));

    const MarkedWeightedGraph path({0, 0, 0}, {{0, 1}, {1, 2}}, {0, 0, 1, 2, 2});
    CHECK(automorphism_group(path).order == 1);

    for (int n : {3, 4, 5})
    {
        CHECK(automorphism_group(marked_cycle(n)).order == 1);
        CHECK_FALSE(has_odd_automorphism(marked_cycle(n)));
    }
}

TEST_CASE("automorphism orders match brute force on catalogs")
{
    for (auto [g, n] : {std::pair{1, 3}, {2, 1}, {0, 6}, {2, 0}})
    {
        const GraphCatalog catalog = enumerate_all(g, n, {.jobs = 1});
        for (int p = 0; p < catalog.num_degrees(); ++p)
            for (const auto& entry : catalog.cells(p))
            {
                const oracle::AutCount expected = oracle::brute_force_automorphisms(entry.graph);
                const AutomorphismGroup group = automorphism_group(entry.graph);
                INFO("g=" << g << " n=" << n << " key=" << entry.key.hex());
                CHECK(group.order == expected.order);
                CHECK(group.has_odd == expected.has_odd);
                CHECK(has_odd_automorphism(entry.graph) == expected.has_odd);
                for (const auto& gen : group.generators)
                    CHECK(is_isomorphism(entry.graph, entry.graph, gen));
            }
    }
}

TEST_CASE("odd automorphism flag is an isomorphism invariant")
{
    std::mt19937_64 rng(11);
    const GraphCatalog catalog = enumerate_all(1, 3, {.jobs = 1});
    for (int p = 0; p < catalog.num_degrees(); ++p)
        for (const auto& entry : catalog.cells(p))
            for (int t = 0; t < 5; ++t)
                CHECK(has_odd_automorphism(random_reindex(entry.graph, rng)) == entry.odd_automorphism);
}

TEST_CASE("graph JSON round trip and schema")
{
    const MarkedWeightedGraph g({0, 1}, {{0, 1}, {0, 0}, {0, 1}}, {1, 0});
    const nlohmann::json j = graph_to_json(g);
    CHECK(j["vertices"].size() == 2);
    CHECK(j["vertices"][1]["weight"] == 1);
    CHECK(j["edges"][1] == nlohmann::json::array({0, 0}));
    CHECK(j["markings"] == nlohmann::json::array({1, 0}));
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"vertices", 3}}), GraphError);
}
