#include <catch_amalgamated.hpp>

#include <sstream>

#include "tropicell/complex.hpp"
#include "tropicell/homology.hpp"

using namespace tropicell;

namespace {

Eigen::MatrixXd dense(const IntSparse& m) { return Eigen::MatrixXd(m.cast<double>()); }

} // namespace

TEST_CASE("Delta(1,1) is a single point")
{
    const GraphCatalog catalog = enumerate_all(1, 1);
    const ChainComplex complex = build_complex(catalog);
    CHECK(complex.dim(-1) == 1);
    CHECK(complex.dim(0) == 1);
    CHECK(complex.max_degree() == 0);
    const IntSparse& d0 = complex.boundary(0);
    REQUIRE(d0.rows() == 1);
    REQUIRE(d0.cols() == 1);
    CHECK(d0.coeff(0, 0) == 1);
    CHECK(betti(complex).support().empty());
}

TEST_CASE("half-interval: the odd 1-cell dies rationally")
{
    const ChainComplex reduced = assemble(half_interval(), true);
    CHECK(reduced.dim(0) == 1);
    CHECK(reduced.dim(1) == 0);
    CHECK(betti(reduced).support().empty());

    const ChainComplex unreduced = assemble(half_interval(), false);
    CHECK(unreduced.dim(-1) == 0);
    const BettiTable t = betti(unreduced);
    CHECK(t.betti(0) == 1);
    CHECK(t.betti(1) == 0);
}

TEST_CASE("empty complex reports reduced homology in degree -1")
{
    const ChainComplex complex = build_complex(enumerate_all(0, 3));
    CHECK(complex.empty());
    const BettiTable t = betti(complex);
    CHECK(t.empty_complex);
    CHECK(t.betti(-1) == 1);
}

TEST_CASE("boundary squares to zero")
{
    for (auto [g, n] : {std::pair{1, 4}, {0, 6}, {2, 1}, {1, 5}})
    {
        INFO("g=" << g << " n=" << n);
        const ChainComplex complex = build_complex(enumerate_all(g, n));
        CHECK(boundary_squares_to_zero(complex));
        for (int p = complex.min_degree() + 2; p <= complex.max_degree(); ++p)
            CHECK((dense(complex.boundary(p - 1)) * dense(complex.boundary(p))).isZero());
    }
}

TEST_CASE("a flipped sign breaks boundary-squared")
{
    ChainComplex complex = build_complex(enumerate_all(1, 3));
    IntSparse d1 = complex.boundary(1);
    REQUIRE(d1.nonZeros() > 0);
    bool flipped = false;
    for (Eigen::Index j = 0; j < d1.outerSize() && !flipped; ++j)
        for (IntSparse::InnerIterator it(d1, j); it; ++it)
        {
            it.valueRef() = -it.value();
            flipped = true;
            break;
        }
    complex.set_boundary(1, d1);
    CHECK_FALSE(boundary_squares_to_zero(complex));
}

TEST_CASE("cells: stabilizers are groups and flag alternating classes")
{
    const GraphCatalog catalog = enumerate_all(1, 3);
    for (int p = 0; p < catalog.num_degrees(); ++p)
        for (std::size_t k = 0; k < catalog.size(p); ++k)
        {
            const Cell cell = make_cell(catalog, p, k);
            CHECK(cell.dimension == p);
            CHECK(cell.alternating == !catalog.cells(p)[k].odd_automorphism);
            std::set<Permutation> group(cell.stabilizer.begin(), cell.stabilizer.end());
            for (const auto& a : cell.stabilizer)
                for (const auto& b : cell.stabilizer)
                    CHECK(group.count(compose(std::span<const int>(a), b)) == 1);
        }
}

TEST_CASE("torsion census")
{
    SECTION("Delta(1,1)")
    {
        const TorsionCensus c = torsion_census(enumerate_all(1, 1));
        CHECK(c.alpha == std::vector<std::size_t>{1});
        CHECK(c.beta == std::vector<std::size_t>{0});
    }
    SECTION("Delta(1,2): the parallel pair is torsion")
    {
        const GraphCatalog catalog = enumerate_all(1, 2);
        const TorsionCensus c = torsion_census(catalog);
        const MarkedWeightedGraph pair({0, 0}, {{0, 1}, {0, 1}}, {0, 1});
        const auto loc = catalog.find(canonical_key(pair));
        REQUIRE(loc);
        CHECK(loc->degree == 1);
        CHECK(catalog.at(*loc).odd_automorphism);
        CHECK(c.beta[1] >= 1);
    }
    SECTION("Delta(1,3): alpha equals the rational chain rank")
    {
        const GraphCatalog catalog = enumerate_all(1, 3);
        const TorsionCensus c = torsion_census(catalog);
        const ChainComplex complex = build_complex(catalog);
        for (int p = 0; p < catalog.num_degrees(); ++p)
        {
            CHECK(c.alpha[p] == complex.dim(p));
            CHECK(c.alpha[p] + c.beta[p] == catalog.size(p));
        }
    }
}

TEST_CASE("Euler characteristic from the census matches homology")
{
    for (auto [g, n] : {std::pair{1, 3}, {1, 4}, {0, 5}, {2, 2}})
    {
        const GraphCatalog catalog = enumerate_all(g, n);
        CHECK(reduced_euler_from_census(torsion_census(catalog)) ==
              betti(build_complex(catalog)).euler);
    }
}

TEST_CASE("subcomplexes")
{
    const GraphCatalog c13 = enumerate_all(1, 3);

    SECTION("trivially true predicate is the identity")
    {
        const GraphCatalog same = subcomplex(c13, [](const MarkedWeightedGraph&) { return true; });
        REQUIRE(same.total_size() == c13.total_size());
        for (int p = 0; p < c13.num_degrees(); ++p)
            for (std::size_t k = 0; k < c13.size(p); ++k)
                CHECK(same.cells(p)[k].key == c13.cells(p)[k].key);
    }
    SECTION("repeated markings on (1,3) drop exactly the marked triangle")
    {
        const GraphCatalog rep = repeated_marking_subcomplex(c13);
        CHECK(rep.total_size() + 1 == c13.total_size());
        const MarkedWeightedGraph triangle({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2});
        CHECK_FALSE(rep.find(canonical_key(triangle)));
        CHECK(c13.find(canonical_key(triangle)));
    }
    SECTION("one marking gives an empty subcomplex")
    {
        CHECK(repeated_marking_subcomplex(enumerate_all(1, 1)).empty());
        CHECK(repeated_marking_subcomplex(enumerate_all(2, 1)).empty());
    }
    SECTION("non-closed predicate is rejected with a witness")
    {
        auto weightless = [](const MarkedWeightedGraph& g) {
            for (int v = 0; v < g.num_vertices(); ++v)
                if (g.weight(v) > 0)
                    return false;
            return true;
        };
        try
        {
            subcomplex(c13, weightless);
            FAIL("expected ClosureViolation");
        }
        catch (const ClosureViolation& e)
        {
            const ClosureWitness& w = e.witness();
            CHECK(weightless(w.graph));
            CHECK_FALSE(weightless(contract_edge(w.graph, w.edge)));
        }
    }
    SECTION("repeated-marking predicate is closed on several catalogs")
    {
        for (auto [g, n] : {std::pair{1, 4}, {2, 2}, {0, 6}})
            CHECK_NOTHROW(repeated_marking_subcomplex(enumerate_all(g, n)));
    }
}

TEST_CASE("face maps are coherent")
{
    for (auto [g, n] : {std::pair{1, 4}, {2, 1}, {0, 7}})
        CHECK(face_coherence_violations(enumerate_all(g, n), 300, 42).empty());
}

TEST_CASE("Betti numbers do not depend on the reference labelings")
{
    for (auto [g, n] : {std::pair{1, 4}, {0, 6}, {2, 2}})
    {
        const GraphCatalog catalog = enumerate_all(g, n);
        const BettiTable base = betti(build_complex(catalog));
        for (std::uint64_t seed : {1u, 2u, 3u})
        {
            ComplexOptions options;
            options.reference_seed = seed;
            const BettiTable other = betti(build_complex(catalog, options));
            for (int p = -1; p < catalog.num_degrees(); ++p)
                CHECK(other.betti(p) == base.betti(p));
        }
    }
}

TEST_CASE("unfinished checkpoints are refused")
{
    GraphCatalog catalog = enumerate_all(1, 3);
    catalog.set_pending_edges(2);
    CHECK_THROWS_AS(build_complex(catalog), IntegrityError);
}

TEST_CASE("missing face class is an integrity error")
{
    GraphCatalog catalog = enumerate_all(1, 3);
    catalog.set_cells(0, {});
    CHECK(find_closure_violation(catalog).has_value());
    CHECK_THROWS_AS(build_complex(catalog), IntegrityError);
}

TEST_CASE("triplet round trip")
{
    const ChainComplex complex = build_complex(enumerate_all(1, 4));
    for (int p = 0; p <= complex.max_degree(); ++p)
    {
        std::stringstream ss;
        write_triplets(ss, complex.boundary(p));
        const std::string text = ss.str();
        CHECK(text.substr(text.size() - 6) == "0 0 0\n");
        const IntSparse back = read_triplets(ss);
        CHECK(back.rows() == complex.boundary(p).rows());
        CHECK(back.cols() == complex.boundary(p).cols());
        CHECK((dense(back) - dense(complex.boundary(p))).isZero());
    }
    std::istringstream bad("2 2\n3 1 1\n0 0 0\n");
    CHECK_THROWS(read_triplets(bad));
}
