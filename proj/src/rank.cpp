#include "tropicell/rank.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

namespace tropicell {

std::size_t rank_mod_p(const IntSparse& matrix, std::uint64_t prime)
{
    if (prime < 2 || prime >= (1ull << 63))
        throw std::invalid_argument("rank_mod_p: prime out of range");
    return SparseEliminator<ModularRing>(matrix, ModularRing{prime}).rank();
}

std::size_t rank(const IntSparse& matrix, const RankOptions& options)
{
    if (matrix.nonZeros() == 0)
        return 0;
    const auto full = static_cast<std::size_t>(std::min(matrix.rows(), matrix.cols()));
    if (options.modular_prefilter && rank_mod_p(matrix, options.prime) == full)
        return full;
    try
    {
        return SparseEliminator<FractionFreeRing<std::int64_t>>(matrix, {}).rank();
    }
    catch (const ArithmeticOverflow&)
    {
        return SparseEliminator<FractionFreeRing<BigInt>>(matrix, {}).rank();
    }
}

std::size_t dense_rank_bareiss(const IntSparse& matrix)
{
    using Dense = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index rows = matrix.rows(), cols = matrix.cols();
    Dense m = Dense::Constant(rows, cols, BigInt(0));
    for (Eigen::Index j = 0; j < matrix.outerSize(); ++j)
        for (IntSparse::InnerIterator it(matrix, j); it; ++it)
            m(it.row(), it.col()) = BigInt(it.value());

    BigInt previous = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index pivot = r;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            m.row(pivot).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i)
        {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / previous;
            m(i, c) = 0;
        }
        previous = m(r, c);
        ++r;
    }
    return static_cast<std::size_t>(r);
}

} // namespace tropicell
