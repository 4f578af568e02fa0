/**
 * Generalized Delta-complexes and their sign-twisted rational chains.
 *
 * A p-cell of Delta_{g,n} is a class with p+1 edges together with a labeling
 * of its edges by {0..p}, up to automorphisms.  Its i-th face contracts the
 * edge labelled i and shifts larger labels down.  Over Q only cells whose
 * automorphisms act on edges by even permutations survive; they form the
 * chain basis.
 */
#ifndef TROPICELL_COMPLEX_HPP
#define TROPICELL_COMPLEX_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tropicell/enumerate.hpp"
#include "tropicell/linalg.hpp"
#include "tropicell/permutation.hpp"

namespace tropicell {

class IntegrityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Cell
{
    int dimension = 0;
    std::size_t class_index = 0;
    /// reference_labeling[e] is the label of edge e of the representative.
    Permutation reference_labeling;
    /// Image of Aut(G) in S_{p+1}, acting on labels.
    std::vector<Permutation> stabilizer;
    bool alternating = true;
};

/// Cell for catalog class (p, index) with the identity reference labeling.
Cell make_cell(const GraphCatalog& catalog, int p, std::size_t index);

// ---------------------------------------------------------------------------
// Abstract cellular data, independent of graphs.

inline constexpr std::size_t kAugmentation = std::numeric_limits<std::size_t>::max();

struct Face
{
    /// Index of the face cell in dimension p-1, or kAugmentation for p = 0.
    std::size_t target = kAugmentation;
    /// Sign of the labeled face relative to the target's reference labeling.
    int sign = 1;
};

struct AbstractCell
{
    bool alternating = true;
    /// faces[i] for i = 0..p; may be left empty for non-alternating cells.
    std::vector<Face> faces;
};

/// cells[p] lists the S_{p+1}-orbits of p-simplices.
struct CellularData
{
    std::vector<std::vector<AbstractCell>> cells;
};

class ChainComplex
{
public:
    ChainComplex() = default;

    bool reduced() const { return reduced_; }
    /// No cells at all (reduced homology is then Q in degree -1).
    bool empty() const { return empty_; }
    int min_degree() const { return reduced_ ? -1 : 0; }
    int max_degree() const { return static_cast<int>(basis_.size()) - 1; }

    std::size_t dim(int p) const;
    /// Map C_p -> C_{p-1}; defined for min_degree() < p <= max_degree().
    const IntSparse& boundary(int p) const { return boundary_.at(p); }
    void set_boundary(int p, IntSparse matrix);

    /// Indices of the basis cells of degree p >= 0 in the source numbering.
    const std::vector<std::size_t>& basis(int p) const { return basis_.at(p); }

    friend ChainComplex assemble(const CellularData& data, bool reduced);

private:
    bool reduced_ = true;
    bool empty_ = true;
    std::vector<std::vector<std::size_t>> basis_;
    std::vector<IntSparse> boundary_;
};

/// Sign-twisted cellular chain complex over the alternating cells.
ChainComplex assemble(const CellularData& data, bool reduced);

struct ComplexOptions
{
    bool reduced = true;
    unsigned jobs = 0;
    /// When set, every class gets a random reference labeling drawn from this seed.
    std::optional<std::uint64_t> reference_seed;
};

/// Face data of Delta_{g,n} (or of a subcomplex catalog).
CellularData cellular_data(const GraphCatalog& catalog, const ComplexOptions& options = {});

ChainComplex build_complex(const GraphCatalog& catalog, const ComplexOptions& options = {});

/// The quotient of a 1-simplex by reversal: one free vertex, one edge with odd stabilizer.
CellularData half_interval();

struct TorsionCensus
{
    /// Per degree: classes with stabilizer in the alternating group.
    std::vector<std::size_t> alpha;
    /// Per degree: the remaining classes, each contributing Z/2 to integral chains.
    std::vector<std::size_t> beta;
};

TorsionCensus torsion_census(const GraphCatalog& catalog);

/// Sum over p of (-1)^p alpha_p, minus one for the augmentation.
std::int64_t reduced_euler_from_census(const TorsionCensus& census);

using GraphPredicate = std::function<bool(const MarkedWeightedGraph&)>;

struct ClosureWitness
{
    MarkedWeightedGraph graph;
    int edge = -1;
};

class ClosureViolation : public std::runtime_error
{
public:
    ClosureViolation(const std::string& what, ClosureWitness witness)
        : std::runtime_error(what), witness_(std::move(witness))
    {}
    const ClosureWitness& witness() const { return witness_; }

private:
    ClosureWitness witness_;
};

/**
 * First (graph, edge) whose contraction leaves the set of classes accepted
 * by `keep` (defaults to the whole catalog) or is missing from the catalog.
 */
std::optional<ClosureWitness> find_closure_violation(const GraphCatalog& catalog,
                                                     const GraphPredicate& keep = {});

/// Classes satisfying the predicate; throws ClosureViolation if they are not closed under faces.
GraphCatalog subcomplex(const GraphCatalog& catalog, const GraphPredicate& predicate);

/// Curves whose marking function is not injective.
GraphCatalog repeated_marking_subcomplex(const GraphCatalog& catalog);

struct CoherenceViolation
{
    int degree;
    std::size_t index;
    int i, j;
};

/**
 * Check d_i d_j = d_{j-1} d_i (i < j) on labeled faces for `samples`
 * randomly chosen cells of dimension >= 2.
 */
std::vector<CoherenceViolation> face_coherence_violations(const GraphCatalog& catalog,
                                                          std::size_t samples,
                                                          std::uint64_t seed);

} // namespace tropicell

#endif
