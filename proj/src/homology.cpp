#include "tropicell/homology.hpp"

#include <iomanip>
#include <sstream>

#include "tropicell/parallel.hpp"

namespace tropicell {

std::int64_t BettiTable::betti(int p) const
{
    for (const auto& row : rows)
        if (row.degree == p)
            return row.betti;
    return 0;
}

std::vector<int> BettiTable::support() const
{
    std::vector<int> out;
    for (const auto& row : rows)
        if (row.betti != 0)
            out.push_back(row.degree);
    return out;
}

nlohmann::json BettiTable::to_json() const
{
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& row : rows)
        degrees.push_back({{"degree", row.degree},
                           {"dim", row.dim},
                           {"rank", row.boundary_rank},
                           {"betti", row.betti}});
    return {{"complex", label},
            {"reduced", reduced},
            {"empty", empty_complex},
            {"degrees", degrees},
            {"euler", euler}};
}

std::string BettiTable::to_text() const
{
    std::ostringstream os;
    os << label << (reduced ? "  (reduced rational homology)" : "  (rational homology)") << '\n';
    if (empty_complex)
        os << "empty complex\n";
    os << std::setw(8) << "degree" << std::setw(12) << "dim C_p" << std::setw(12) << "rank d_p"
       << std::setw(10) << "betti" << '\n';
    for (const auto& row : rows)
        os << std::setw(8) << row.degree << std::setw(12) << row.dim << std::setw(12)
           << row.boundary_rank << std::setw(10) << row.betti << '\n';
    os << "euler characteristic: " << euler << '\n';
    return os.str();
}

BettiTable betti(const ChainComplex& complex, const HomologyOptions& options)
{
    const int lo = complex.min_degree(), hi = complex.max_degree();
    std::vector<int> degrees;
    for (int p = lo + 1; p <= hi; ++p)
        degrees.push_back(p);

    // ranks[p - lo] = rank of the boundary leaving degree p.
    std::vector<std::size_t> ranks(hi - lo + 2, 0);
    // Largest matrices first so they start early.
    std::sort(degrees.begin(), degrees.end(), [&](int a, int b) {
        return complex.boundary(a).nonZeros() > complex.boundary(b).nonZeros();
    });
    parallel_for(degrees.size(), options.jobs, [&](std::size_t k) {
        const int p = degrees[k];
        ranks[p - lo] = rank(complex.boundary(p), options.rank);
    });

    BettiTable table;
    table.reduced = complex.reduced();
    table.empty_complex = complex.empty();
    for (int p = lo; p <= hi; ++p)
    {
        BettiRow row;
        row.degree = p;
        row.dim = complex.dim(p);
        row.boundary_rank = ranks[p - lo];
        const std::size_t incoming = (p + 1 <= hi) ? ranks[p + 1 - lo] : 0;
        row.betti = static_cast<std::int64_t>(row.dim) - static_cast<std::int64_t>(row.boundary_rank) -
                    static_cast<std::int64_t>(incoming);
        if (row.betti < 0)
            throw IntegrityError("negative Betti number in degree " + std::to_string(p));
        table.euler += (p % 2 == 0 ? 1 : -1) * row.betti;
        table.rows.push_back(row);
    }
    return table;
}

bool boundary_squares_to_zero(const ChainComplex& complex)
{
    for (int p = complex.min_degree() + 2; p <= complex.max_degree(); ++p)
    {
        const IntSparse& outer = complex.boundary(p - 1);
        const IntSparse& inner = complex.boundary(p);
        if (outer.cols() != inner.rows())
            return false;
        IntSparse product = outer * inner;
        for (Eigen::Index j = 0; j < product.outerSize(); ++j)
            for (IntSparse::InnerIterator it(product, j); it; ++it)
                if (it.value() != 0)
                    return false;
    }
    return true;
}

} // namespace tropicell
