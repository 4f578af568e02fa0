/**
 * Reduced rational homology of a chain complex from exact boundary ranks.
 */
#ifndef TROPICELL_HOMOLOGY_HPP
#define TROPICELL_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropicell/complex.hpp"
#include "tropicell/rank.hpp"

namespace tropicell {

struct BettiRow
{
    int degree = 0;
    std::size_t dim = 0;
    /// Rank of the boundary leaving this degree.
    std::size_t boundary_rank = 0;
    std::int64_t betti = 0;
};

struct BettiTable
{
    std::string label;
    bool reduced = true;
    bool empty_complex = false;
    std::vector<BettiRow> rows;
    std::int64_t euler = 0;

    /// Betti number in degree p (0 outside the table).
    std::int64_t betti(int p) const;
    /// Degrees with nonzero Betti number.
    std::vector<int> support() const;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct HomologyOptions
{
    unsigned jobs = 0;
    RankOptions rank;
};

/// Throws IntegrityError if a Betti number comes out negative.
BettiTable betti(const ChainComplex& complex, const HomologyOptions& options = {});

/// Entry-wise check that every composite of consecutive boundaries vanishes.
bool boundary_squares_to_zero(const ChainComplex& complex);

} // namespace tropicell

#endif
