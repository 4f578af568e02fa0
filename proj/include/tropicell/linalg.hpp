#ifndef TROPICELL_LINALG_HPP
#define TROPICELL_LINALG_HPP

#include <cstdint>
#include <iosfwd>

#include <Eigen/SparseCore>

namespace tropicell {

/// Boundary matrices: column j is the boundary of basis cell j.
using IntSparse = Eigen::SparseMatrix<std::int64_t, Eigen::ColMajor>;

/**
 * Triplet text format: "rows cols", then one "i j value" line per nonzero
 * (1-based, column-major order), then the terminator "0 0 0".
 */
void write_triplets(std::ostream& out, const IntSparse& matrix);

/// Throws std::runtime_error on malformed input.
IntSparse read_triplets(std::istream& in);

} // namespace tropicell

#endif
