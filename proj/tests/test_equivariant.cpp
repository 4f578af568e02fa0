#include <catch_amalgamated.hpp>

#include <random>

#include "tropicell/characters.hpp"
#include "tropicell/homology.hpp"

using namespace tropicell;

TEST_CASE("permutation utilities")
{
    CHECK(permutation_sign(std::vector<int>{1, 0, 2}) == -1);
    CHECK(permutation_sign(std::vector<int>{1, 2, 0}) == 1);
    CHECK(cycle_type(std::vector<int>{1, 0, 3, 4, 2}) == Partition{3, 2});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    CHECK(partition_string({3, 1, 1}) == "3+1+1");
    CHECK(parse_partition("3+1+1") == Partition{3, 1, 1});
    CHECK(class_size({2, 1, 1}) == 6);
    CHECK(centralizer_order({2, 2}) == 8);
    for (const auto& cls : partitions_of(6))
        CHECK(cycle_type(permutation_of_type(cls)) == cls);
    std::size_t count = 0;
    for_each_permutation(5, [&](const Permutation&) { ++count; });
    CHECK(count == 120);
}

TEST_CASE("irreducible characters are orthonormal")
{
    for (int n = 1; n <= 6; ++n)
    {
        const auto parts = partitions_of(n);
        std::uint64_t dims = 0;
        for (std::size_t a = 0; a < parts.size(); ++a)
        {
            const ClassFunction chi = irreducible_character(parts[a]);
            dims += static_cast<std::uint64_t>(chi.at_identity() * chi.at_identity());
            for (std::size_t b = 0; b < parts.size(); ++b)
                CHECK(inner_product(chi, irreducible_character(parts[b])) ==
                      Rational(a == b ? 1 : 0, 1));
        }
        CHECK(dims == factorial(n));
    }
    const ClassFunction std4 = irreducible_character({3, 1});
    CHECK(std4.at_identity() == 3);
    CHECK(std4({2, 1, 1}) == 1);
    CHECK(std4({4}) == -1);
}

TEST_CASE("action traces")
{
    const GraphCatalog c13 = enumerate_all(1, 3);
    const TorsionCensus census = torsion_census(c13);
    for (int p = 0; p < c13.num_degrees(); ++p)
        CHECK(action_trace(c13, p, identity_permutation(3)) ==
              static_cast<std::int64_t>(census.alpha[p]));

    // The marked triangle is the only top cell; a rotation fixes it evenly.
    REQUIRE(c13.size(2) >= 1);
    CHECK(action_trace(c13, 2, std::vector<int>{1, 2, 0}) == 1);

    CHECK_THROWS_AS(action_trace(c13, 0, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("action trace is a class function")
{
    const GraphCatalog catalog = enumerate_all(1, 5);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial)
    {
        Permutation sigma = identity_permutation(5), x = identity_permutation(5);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(x.begin(), x.end(), rng);
        const Permutation conj = compose(compose(inverse(std::span<const int>(x)), sigma), x);
        REQUIRE(cycle_type(conj) == cycle_type(sigma));
        for (int p = 0; p < catalog.num_degrees(); ++p)
            CHECK(action_trace(catalog, p, sigma) == action_trace(catalog, p, conj));
    }
}

TEST_CASE("equivariant Euler characteristic examples")
{
    const ClassFunction e13 = equivariant_euler(enumerate_all(1, 3));
    CHECK(e13.at_identity() == 1);

    const ClassFunction e12 = equivariant_euler(enumerate_all(1, 2));
    CHECK(std::all_of(e12.values().begin(), e12.values().end(), [](auto v) { return v == 0; }));

    CHECK(equivariant_euler(enumerate_all(0, 4)).at_identity() == 2);
    CHECK_THROWS_AS(equivariant_euler(enumerate_all(2, 0)), std::invalid_argument);
}

TEST_CASE("equivariant Euler at the identity equals the Betti sum")
{
    for (auto [g, n] : {std::pair{1, 4}, {0, 6}, {2, 2}, {2, 1}})
    {
        const GraphCatalog catalog = enumerate_all(g, n);
        CHECK(equivariant_euler(catalog).at_identity() == betti(build_complex(catalog)).euler);
    }
}

TEST_CASE("top homology character examples")
{
    const ClassFunction t3 = top_homology_character(enumerate_all(1, 3));
    CHECK(t3.at_identity() == 1);
    CHECK(t3({2, 1}) == -1);
    CHECK(top_homology_character(enumerate_all(1, 4)).at_identity() == 3);
    CHECK_THROWS_AS(top_homology_character(enumerate_all(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(top_homology_character(enumerate_all(2, 3)), std::invalid_argument);
}

TEST_CASE("dihedral character examples")
{
    const ClassFunction d3 = dihedral_character(3);
    CHECK(d3({1, 1, 1}) == 1);
    CHECK(d3({2, 1}) == -1);
    CHECK(d3({3}) == 1);

    const ClassFunction d4 = dihedral_character(4);
    CHECK(d4.at_identity() == 3);
    for (int n = 3; n <= 7; ++n)
        CHECK(dihedral_character(n).at_identity() == static_cast<std::int64_t>(factorial(n - 1) / 2));
    CHECK_THROWS_AS(dihedral_character(2), std::invalid_argument);
}

TEST_CASE("square reflection across a diagonal is even on edges")
{
    // Vertices 0..3, edge j = {j, j+1}; the diagonal through 0 and 2 swaps 1 and 3.
    const Permutation vertex = {0, 3, 2, 1};
    Permutation edge(4);
    for (int j = 0; j < 4; ++j)
    {
        const int a = vertex[j], b = vertex[(j + 1) % 4];
        edge[j] = (a + 1) % 4 == b ? a : b;
    }
    CHECK(cycle_type(vertex) == Partition{2, 1, 1});
    CHECK(cycle_type(edge) == Partition{2, 2});
    CHECK(permutation_sign(edge) == 1);
}

TEST_CASE("top homology character matches the dihedral formula")
{
    for (int n = 3; n <= 5; ++n)
    {
        const ClassFunction top = top_homology_character(enumerate_all(1, n));
        CHECK(top == dihedral_character(n));
        for (const auto& lambda : partitions_of(n))
        {
            const Rational m = inner_product(top, irreducible_character(lambda));
            CHECK(m.is_integer());
            CHECK(m.num >= 0);
        }
    }
}

TEST_CASE("class function JSON and table text")
{
    const ClassFunction d3 = dihedral_character(3);
    const auto j = d3.to_json();
    CHECK(j["n"] == 3);
    CHECK(j["values"]["2+1"] == -1);
    const std::string text = character_table_text({{"dihedral", d3}});
    CHECK(text.find("1+1+1") != std::string::npos);
    CHECK(text.find("dihedral") != std::string::npos);
    CHECK_THROWS_AS(d3(Partition{2, 2}), std::invalid_argument);
}
