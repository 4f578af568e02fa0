/**
 * Exact rank of sparse integer matrices.
 *
 * SparseEliminator<Ring> runs Gaussian elimination on sparse rows with a
 * Markowitz-style pivot choice (shortest active column, then shortest row,
 * then smallest pivot).  Ring supplies the arithmetic:
 *
 *  - ModularRing: exact in Z/p; rank mod p is a lower bound for the rank over Q.
 *  - FractionFreeRing<Int>: integer row operations a*r - b*s followed by
 *    division by the row content; exact over Q.  With Int = std::int64_t
 *    every operation is overflow-checked and throws ArithmeticOverflow.
 */
#ifndef TROPICELL_RANK_HPP
#define TROPICELL_RANK_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropicell/linalg.hpp"

namespace tropicell {

using BigInt = boost::multiprecision::cpp_int;

class ArithmeticOverflow : public std::overflow_error
{
public:
    ArithmeticOverflow() : std::overflow_error("64-bit overflow during elimination") {}
};

struct ModularRing
{
    using Scalar = std::uint64_t;
    std::uint64_t p;

    Scalar from_int(std::int64_t v) const
    {
        const auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
        return static_cast<Scalar>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
    }
    static bool is_zero(Scalar v) { return v == 0; }
    /// All nonzero residues are equally good pivots.
    static int pivot_cost(Scalar) { return 0; }

    Scalar mul(Scalar a, Scalar b) const
    {
        return static_cast<Scalar>(static_cast<unsigned __int128>(a) * b % p);
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p - b); }
    Scalar inv(Scalar a) const
    {
        Scalar result = 1, base = a, e = p - 2;
        while (e)
        {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    /// Scale the pivot row so its pivot entry is one.
    template <typename Row>
    void prepare_pivot(Row& row, Scalar pivot) const
    {
        const Scalar s = inv(pivot);
        for (auto& [col, v] : row)
            v = mul(v, s);
    }

    /// target <- target - t * pivot, where t is target's entry in the pivot column.
    template <typename Row>
    void reduce(Row& target, const Row& pivot, Scalar, Scalar t, Row& out) const
    {
        out.clear();
        auto a = target.begin(), b = pivot.begin();
        while (a != target.end() || b != pivot.end())
        {
            if (b == pivot.end() || (a != target.end() && a->first < b->first))
                out.push_back(*a++);
            else if (a == target.end() || b->first < a->first)
            {
                out.emplace_back(b->first, sub(0, mul(t, b->second)));
                ++b;
            }
            else
            {
                Scalar v = sub(a->second, mul(t, b->second));
                if (v != 0)
                    out.emplace_back(a->first, v);
                ++a;
                ++b;
            }
        }
    }
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}

inline std::int64_t abs_value(std::int64_t v)
{
    if (v == std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow();
    return v < 0 ? -v : v;
}
inline BigInt abs_value(const BigInt& v) { return boost::multiprecision::abs(v); }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
inline std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

} // namespace detail

template <typename Int>
struct FractionFreeRing
{
    using Scalar = Int;

    Scalar from_int(std::int64_t v) const { return Scalar(v); }
    static bool is_zero(const Scalar& v) { return v == 0; }
    /// Prefer unit pivots: they keep entries small.
    static int pivot_cost(const Scalar& v)
    {
        const Scalar a = detail::abs_value(v);
        return a == 1 ? 0 : (a < 16 ? 1 : 2);
    }

    template <typename Row>
    void prepare_pivot(Row&, const Scalar&) const
    {}

    /// target <- (a/g) target - (t/g) pivot with g = gcd(a, t), then divide out the content.
    template <typename Row>
    void reduce(Row& target, const Row& pivot, const Scalar& a, const Scalar& t, Row& out) const
    {
        using detail::mul;
        using detail::sub;
        const Scalar g = detail::gcd_of(detail::abs_value(a), detail::abs_value(t));
        const Scalar ca = a / g, ct = t / g;
        out.clear();
        auto x = target.begin(), y = pivot.begin();
        while (x != target.end() || y != pivot.end())
        {
            if (y == pivot.end() || (x != target.end() && x->first < y->first))
            {
                out.emplace_back(x->first, mul(ca, x->second));
                ++x;
            }
            else if (x == target.end() || y->first < x->first)
            {
                out.emplace_back(y->first, sub(Scalar(0), mul(ct, y->second)));
                ++y;
            }
            else
            {
                Scalar v = sub(mul(ca, x->second), mul(ct, y->second));
                if (v != 0)
                    out.emplace_back(x->first, std::move(v));
                ++x;
                ++y;
            }
        }
        Scalar content(0);
        for (const auto& [col, v] : out)
        {
            content = detail::gcd_of(content, detail::abs_value(v));
            if (content == 1)
                return;
        }
        if (content > 1)
            for (auto& [col, v] : out)
                v /= content;
    }
};

template <typename Ring>
class SparseEliminator
{
public:
    using Scalar = typename Ring::Scalar;
    using Row = std::vector<std::pair<int, Scalar>>;

    SparseEliminator(const IntSparse& matrix, Ring ring) : ring_(std::move(ring))
    {
        // Rows of the eliminator are the columns of the matrix (rank is transpose-invariant),
        // so each boundary of a cell becomes one sparse row.
        rows_.resize(matrix.cols());
        ncols_ = static_cast<int>(matrix.rows());
        for (Eigen::Index j = 0; j < matrix.outerSize(); ++j)
        {
            for (IntSparse::InnerIterator it(matrix, j); it; ++it)
            {
                Scalar v = ring_.from_int(it.value());
                if (!Ring::is_zero(v))
                    rows_[j].emplace_back(static_cast<int>(it.row()), std::move(v));
            }
            std::sort(rows_[j].begin(), rows_[j].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }

    std::size_t rank()
    {
        const int nrows = static_cast<int>(rows_.size());
        std::vector<char> active(nrows, 1);
        std::vector<std::vector<int>> col_rows(ncols_);
        std::vector<int> count(ncols_, 0);
        std::vector<char> done(ncols_, 0);
        for (int r = 0; r < nrows; ++r)
            for (const auto& [c, v] : rows_[r])
            {
                col_rows[c].push_back(r);
                ++count[c];
            }

        using Item = std::pair<int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (int c = 0; c < ncols_; ++c)
            if (count[c] > 0)
                heap.emplace(count[c], c);

        std::vector<int> stamp(nrows, -1);
        Row scratch;
        std::size_t rank = 0;
        while (!heap.empty())
        {
            auto [cnt, c] = heap.top();
            heap.pop();
            if (done[c] || cnt != count[c] || cnt == 0)
                continue;

            // Live rows holding column c.
            std::vector<int> live;
            for (int r : col_rows[c])
            {
                if (!active[r] || stamp[r] == c)
                    continue;
                stamp[r] = c;
                if (find(rows_[r], c) != nullptr)
                    live.push_back(r);
            }
            col_rows[c].clear();
            if (live.empty())
            {
                count[c] = 0;
                continue;
            }

            int pivot = live.front();
            auto better = [&](int r, int s) {
                const int cr = Ring::pivot_cost(*find(rows_[r], c));
                const int cs = Ring::pivot_cost(*find(rows_[s], c));
                if (cr != cs)
                    return cr < cs;
                if (rows_[r].size() != rows_[s].size())
                    return rows_[r].size() < rows_[s].size();
                return r < s;
            };
            for (int r : live)
                if (better(r, pivot))
                    pivot = r;

            Row& prow = rows_[pivot];
            ring_.prepare_pivot(prow, *find(prow, c));
            const Scalar a = *find(prow, c);
            for (int r : live)
            {
                if (r == pivot)
                    continue;
                const Scalar t = *find(rows_[r], c);
                ring_.reduce(rows_[r], prow, a, t, scratch);
                update_counts(r, rows_[r], scratch, count, col_rows, heap);
                std::swap(rows_[r], scratch);
            }
            active[pivot] = 0;
            for (const auto& [col, v] : prow)
            {
                --count[col];
                if (!done[col] && count[col] > 0)
                    heap.emplace(count[col], col);
            }
            Row().swap(prow);
            done[c] = 1;
            ++rank;
        }
        return rank;
    }

private:
    static const Scalar* find(const Row& row, int c)
    {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }

    template <typename Heap>
    void update_counts(int r, const Row& before, const Row& after, std::vector<int>& count,
                       std::vector<std::vector<int>>& col_rows, Heap& heap)
    {
        auto x = before.begin(), y = after.begin();
        while (x != before.end() || y != after.end())
        {
            if (y == after.end() || (x != before.end() && x->first < y->first))
            {
                --count[x->first];
                heap.emplace(count[x->first], x->first);
                ++x;
            }
            else if (x == before.end() || y->first < x->first)
            {
                ++count[y->first];
                col_rows[y->first].push_back(r);
                heap.emplace(count[y->first], y->first);
                ++y;
            }
            else
            {
                ++x;
                ++y;
            }
        }
    }

    Ring ring_;
    int ncols_ = 0;
    std::vector<Row> rows_;
};

/// A fixed 62-bit prime used by the modular pre-pass.
inline constexpr std::uint64_t kDefaultRankPrime = 4611686018427387847ull;

std::size_t rank_mod_p(const IntSparse& matrix, std::uint64_t prime = kDefaultRankPrime);

struct RankOptions
{
    /// Skip exact elimination when the modular rank already equals min(rows, cols).
    bool modular_prefilter = true;
    std::uint64_t prime = kDefaultRankPrime;
};

/// Exact rank over Q.
std::size_t rank(const IntSparse& matrix, const RankOptions& options = {});

/// Dense fraction-free (Bareiss) elimination in arbitrary precision; for cross-checks.
std::size_t dense_rank_bareiss(const IntSparse& matrix);

} // namespace tropicell

#endif
