#include "tropicell/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "tropicell/parallel.hpp"

namespace tropicell {

// ---------------------------------------------------------------------------
// Triplet files

void write_triplets(std::ostream& out, const IntSparse& matrix)
{
    out << matrix.rows() << ' ' << matrix.cols() << '\n';
    for (Eigen::Index j = 0; j < matrix.outerSize(); ++j)
        for (IntSparse::InnerIterator it(matrix, j); it; ++it)
            if (it.value() != 0)
                out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
    out << "0 0 0\n";
}

IntSparse read_triplets(std::istream& in)
{
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("triplet file: bad header");
    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    while (true)
    {
        long long i = 0, j = 0;
        std::int64_t v = 0;
        if (!(in >> i >> j >> v))
            throw std::runtime_error("triplet file: missing terminator");
        if (i == 0 && j == 0 && v == 0)
            break;
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw std::runtime_error("triplet file: index out of range");
        triplets.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
    }
    IntSparse m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
    return m;
}

// ---------------------------------------------------------------------------
// Cells

Cell make_cell(const GraphCatalog& catalog, int p, std::size_t index)
{
    const CatalogEntry& entry = catalog.cells(p).at(index);
    Cell cell;
    cell.dimension = p;
    cell.class_index = index;
    cell.reference_labeling = identity_permutation(p + 1);

    std::set<Permutation> group{identity_permutation(p + 1)};
    std::vector<Permutation> frontier{identity_permutation(p + 1)};
    std::vector<Permutation> generators;
    for (const auto& aut : automorphism_group(entry.graph).generators)
        generators.push_back(aut.edge_perm);
    while (!frontier.empty())
    {
        Permutation current = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& gen : generators)
        {
            Permutation next = compose(std::span<const int>(current), gen);
            if (group.insert(next).second)
                frontier.push_back(std::move(next));
        }
    }
    cell.stabilizer.assign(group.begin(), group.end());
    cell.alternating = std::all_of(cell.stabilizer.begin(), cell.stabilizer.end(),
                                   [](const Permutation& s) { return permutation_sign(s) > 0; });
    return cell;
}

// ---------------------------------------------------------------------------
// Chain complexes

std::size_t ChainComplex::dim(int p) const
{
    if (p == -1)
        return reduced_ ? 1 : 0;
    if (p < -1 || p > max_degree())
        return 0;
    return basis_[p].size();
}

void ChainComplex::set_boundary(int p, IntSparse matrix)
{
    IntSparse& target = boundary_.at(p);
    if (matrix.rows() != target.rows() || matrix.cols() != target.cols())
        throw std::invalid_argument("replacement boundary has the wrong shape");
    target = std::move(matrix);
}

ChainComplex assemble(const CellularData& data, bool reduced)
{
    ChainComplex complex;
    complex.reduced_ = reduced;
    const int degrees = static_cast<int>(data.cells.size());
    complex.basis_.resize(degrees);
    complex.empty_ = true;

    std::vector<std::vector<std::ptrdiff_t>> row_of(degrees);
    for (int p = 0; p < degrees; ++p)
    {
        row_of[p].assign(data.cells[p].size(), -1);
        for (std::size_t k = 0; k < data.cells[p].size(); ++k)
        {
            complex.empty_ = false;
            if (data.cells[p][k].alternating)
            {
                row_of[p][k] = static_cast<std::ptrdiff_t>(complex.basis_[p].size());
                complex.basis_[p].push_back(k);
            }
        }
    }

    complex.boundary_.resize(degrees);
    for (int p = 0; p < degrees; ++p)
    {
        const auto rows = static_cast<Eigen::Index>(complex.dim(p - 1));
        const auto cols = static_cast<Eigen::Index>(complex.basis_[p].size());
        std::vector<Eigen::Triplet<std::int64_t>> triplets;
        for (Eigen::Index col = 0; col < cols; ++col)
        {
            const AbstractCell& cell = data.cells[p][complex.basis_[p][col]];
            if (static_cast<int>(cell.faces.size()) != p + 1)
                throw IntegrityError("alternating cell is missing face data");
            for (int i = 0; i <= p; ++i)
            {
                const Face& face = cell.faces[i];
                const int coefficient = ((i % 2 == 0) ? 1 : -1) * face.sign;
                if (p == 0)
                {
                    if (face.target != kAugmentation)
                        throw IntegrityError("0-cell face must be the augmentation");
                    if (reduced)
                        triplets.emplace_back(0, static_cast<int>(col), coefficient);
                    continue;
                }
                if (face.target >= row_of[p - 1].size())
                    throw IntegrityError("face refers to a missing cell");
                const std::ptrdiff_t row = row_of[p - 1][face.target];
                if (row >= 0)
                    triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), coefficient);
            }
        }
        IntSparse m(rows, cols);
        m.setFromTriplets(triplets.begin(), triplets.end());
        m.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
        complex.boundary_[p] = std::move(m);
    }
    return complex;
}

namespace {

std::vector<std::vector<Permutation>> reference_labelings(const GraphCatalog& catalog,
                                                          const ComplexOptions& options)
{
    std::vector<std::vector<Permutation>> refs(catalog.num_degrees());
    std::mt19937_64 rng(options.reference_seed.value_or(0));
    for (int p = 0; p < catalog.num_degrees(); ++p)
    {
        refs[p].assign(catalog.size(p), identity_permutation(p + 1));
        if (options.reference_seed)
            for (auto& r : refs[p])
                std::shuffle(r.begin(), r.end(), rng);
    }
    return refs;
}

} // namespace

CellularData cellular_data(const GraphCatalog& catalog, const ComplexOptions& options)
{
    CellularData data;
    data.cells.resize(catalog.num_degrees());
    const auto refs = reference_labelings(catalog, options);

    for (int p = 0; p < catalog.num_degrees(); ++p)
    {
        const auto& entries = catalog.cells(p);
        auto& cells = data.cells[p];
        cells.resize(entries.size());
        parallel_for(entries.size(), options.jobs, [&](std::size_t k) {
            const CatalogEntry& entry = entries[k];
            AbstractCell& cell = cells[k];
            cell.alternating = !entry.odd_automorphism;
            if (!cell.alternating)
                return;
            const Permutation& ref = refs[p][k];
            const Permutation ref_inv = inverse(std::span<const int>(ref));
            cell.faces.resize(p + 1);
            if (p == 0)
                return;
            for (int i = 0; i <= p; ++i)
            {
                const int e = ref_inv[i];
                const MarkedWeightedGraph face = contract_edge(entry.graph, e);
                Permutation face_labels;
                face_labels.reserve(p);
                for (int f = 0; f <= p; ++f)
                    if (f != e)
                        face_labels.push_back(ref[f] > i ? ref[f] - 1 : ref[f]);
                CanonicalForm canon = canonicalize(face);
                auto loc = catalog.find(canon.key);
                if (!loc || loc->degree != p - 1)
                    throw IntegrityError("face of catalog class " + entry.key.hex() +
                                         " is missing from the catalog");
                cell.faces[i].target = loc->index;
                cell.faces[i].sign = permutation_sign(face_labels) * canon.iso.sign *
                                     permutation_sign(refs[p - 1][loc->index]);
            }
        });
    }
    return data;
}

ChainComplex build_complex(const GraphCatalog& catalog, const ComplexOptions& options)
{
    if (catalog.pending_edges() != 0)
        throw IntegrityError("catalog is an unfinished checkpoint");
    return assemble(cellular_data(catalog, options), options.reduced);
}

CellularData half_interval()
{
    CellularData data;
    data.cells.resize(2);
    data.cells[0].push_back(AbstractCell{true, {Face{}}});
    // Both ends of the edge are the same vertex orbit; reversal fixes the edge.
    data.cells[1].push_back(AbstractCell{false, {Face{0, 1}, Face{0, 1}}});
    return data;
}

TorsionCensus torsion_census(const GraphCatalog& catalog)
{
    TorsionCensus census;
    census.alpha.assign(catalog.num_degrees(), 0);
    census.beta.assign(catalog.num_degrees(), 0);
    for (int p = 0; p < catalog.num_degrees(); ++p)
        for (const auto& entry : catalog.cells(p))
            ++(entry.odd_automorphism ? census.beta[p] : census.alpha[p]);
    return census;
}

std::int64_t reduced_euler_from_census(const TorsionCensus& census)
{
    std::int64_t chi = -1;
    for (std::size_t p = 0; p < census.alpha.size(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(census.alpha[p]);
    return chi;
}

std::optional<ClosureWitness> find_closure_violation(const GraphCatalog& catalog,
                                                     const GraphPredicate& keep)
{
    for (int p = 0; p < catalog.num_degrees(); ++p)
    {
        for (const auto& entry : catalog.cells(p))
        {
            if (keep && !keep(entry.graph))
                continue;
            if (p == 0)
                continue;
            for (int e = 0; e <= p; ++e)
            {
                const MarkedWeightedGraph face = contract_edge(entry.graph, e);
                auto loc = catalog.find(canonical_key(face));
                if (!loc || loc->degree != p - 1 || (keep && !keep(catalog.at(*loc).graph)))
                    return ClosureWitness{entry.graph, e};
            }
        }
    }
    return std::nullopt;
}

GraphCatalog subcomplex(const GraphCatalog& catalog, const GraphPredicate& predicate)
{
    if (auto witness = find_closure_violation(catalog, predicate))
        throw ClosureViolation("predicate is not closed under edge contraction (class " +
                                   canonical_key(witness->graph).hex() + ", edge " +
                                   std::to_string(witness->edge) + ")",
                               *witness);
    GraphCatalog out(catalog.genus(), catalog.markings());
    for (int p = 0; p < catalog.num_degrees(); ++p)
    {
        std::vector<CatalogEntry> kept;
        for (const auto& entry : catalog.cells(p))
            if (predicate(entry.graph))
                kept.push_back(entry);
        out.set_cells(p, std::move(kept));
    }
    return out;
}

GraphCatalog repeated_marking_subcomplex(const GraphCatalog& catalog)
{
    return subcomplex(catalog, [](const MarkedWeightedGraph& g) { return has_repeated_marking(g); });
}

std::vector<CoherenceViolation> face_coherence_violations(const GraphCatalog& catalog,
                                                          std::size_t samples,
                                                          std::uint64_t seed)
{
    std::vector<std::pair<int, std::size_t>> pool;
    for (int p = 2; p < catalog.num_degrees(); ++p)
        for (std::size_t k = 0; k < catalog.size(p); ++k)
            pool.emplace_back(p, k);
    std::vector<CoherenceViolation> out;
    if (pool.empty())
        return out;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t s = 0; s < samples; ++s)
    {
        auto [p, k] = pool[pick(rng)];
        const MarkedWeightedGraph& graph = catalog.cells(p)[k].graph;
        std::uniform_int_distribution<int> label(0, p);
        int i = label(rng), j = label(rng);
        while (i == j)
            j = label(rng);
        if (i > j)
            std::swap(i, j);

        const MarkedWeightedGraph a = contract_edge(contract_edge(graph, j), i);
        const MarkedWeightedGraph b = contract_edge(contract_edge(graph, i), j - 1);
        const CanonicalForm ca = canonicalize(a), cb = canonicalize(b);
        bool ok = ca.key == cb.key;
        if (ok && a.num_edges() > 0 && !has_odd_automorphism(ca.graph))
            ok = ca.iso.sign == cb.iso.sign;
        if (!ok)
            out.push_back({p, k, i, j});
    }
    return out;
}

} // namespace tropicell
