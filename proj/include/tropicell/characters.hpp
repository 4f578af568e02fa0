/**
 * Symmetric-group structure: class functions on S_n, the action of marking
 * permutations on cellular chains, and the dihedral induced character.
 */
#ifndef TROPICELL_CHARACTERS_HPP
#define TROPICELL_CHARACTERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropicell/catalog_io.hpp"
#include "tropicell/enumerate.hpp"
#include "tropicell/permutation.hpp"

namespace tropicell {

struct Rational
{
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    bool is_integer() const { return den == 1; }
    bool operator==(const Rational&) const = default;
};

/// Integer-valued function on conjugacy classes of S_n.
class ClassFunction
{
public:
    ClassFunction() = default;
    explicit ClassFunction(int n);

    int n() const { return n_; }
    /// Classes in partitions_of(n) order.
    const std::vector<Partition>& classes() const { return classes_; }
    const std::vector<std::int64_t>& values() const { return values_; }

    std::int64_t operator()(const Partition& cls) const;
    std::int64_t& operator[](const Partition& cls);
    std::int64_t at_identity() const;

    bool operator==(const ClassFunction& other) const
    {
        return n_ == other.n_ && values_ == other.values_;
    }

    /// {"n": n, "values": {"3+1+1": v, ...}}
    nlohmann::json to_json() const;

private:
    std::size_t slot(const Partition& cls) const;

    int n_ = 0;
    std::vector<Partition> classes_;
    std::vector<std::int64_t> values_;
};

/// (1/n!) sum over classes of |class| a(c) b(c).
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Irreducible character chi^lambda by the Murnaghan-Nakayama rule.
ClassFunction irreducible_character(const Partition& lambda);

/**
 * Trace of the marking permutation sigma on C_p(Delta; Q): the sum, over
 * alternating classes fixed by sigma, of the sign of the induced edge
 * permutation.
 */
std::int64_t action_trace(const GraphCatalog& catalog, int p, const Permutation& sigma);

/**
 * sum_p (-1)^p trace(sigma | C_p) - 1 on each conjugacy class, which equals
 * the alternating sum of characters of reduced homology.
 */
ClassFunction equivariant_euler(const GraphCatalog& catalog, unsigned jobs = 0);

/// Character of the top reduced homology of Delta_{1,n}, n >= 3, from a (1,n) catalog.
ClassFunction top_homology_character(const GraphCatalog& genus_one_catalog, unsigned jobs = 0);

/// Same, building or loading the catalog.
ClassFunction top_homology_character(int n, const CacheOptions& cache = {},
                                     const EnumerationOptions& options = {});

/**
 * Character of Ind_{D_n}^{S_n} of the sign of D_n acting on the edges of an
 * n-gon, D_n embedded in S_n through its action on the vertices.  Brute
 * force over S_n; n >= 3.
 */
ClassFunction dihedral_character(int n);

/// Aligned table: one header row of classes, one row per named function.
std::string character_table_text(const std::vector<std::pair<std::string, ClassFunction>>& rows);

} // namespace tropicell

#endif
