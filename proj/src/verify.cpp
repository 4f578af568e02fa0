#include "tropicell/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "tropicell/characters.hpp"
#include "tropicell/complex.hpp"
#include "tropicell/homology.hpp"

namespace tropicell {

bool VerificationReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks)
        list.push_back({{"name", c.name},
                        {"claim", c.claim},
                        {"expected", c.expected},
                        {"source", c.source},
                        {"computed", c.computed},
                        {"passed", c.passed},
                        {"seconds", std::round(c.seconds * 1000.0) / 1000.0}});
    return {{"suite", suite}, {"passed", passed()}, {"checks", list}};
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    std::size_t failures = 0;
    for (const auto& c : checks)
    {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << std::fixed
           << std::setprecision(2) << c.seconds << "s)\n";
        os << "      claim:    " << c.claim << '\n';
        os << "      expected: " << c.expected << "  [" << c.source << "]\n";
        os << "      computed: " << c.computed << '\n';
        if (!c.passed)
            ++failures;
    }
    os << suite << " suite: " << (checks.size() - failures) << "/" << checks.size() << " passed\n";
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    std::string expected;
    std::string computed;
    bool passed = false;
};

std::string betti_string(const BettiTable& t)
{
    std::ostringstream os;
    bool any = false;
    for (const auto& row : t.rows)
        if (row.betti != 0)
        {
            os << (any ? ", " : "") << "b" << row.degree << "=" << row.betti;
            any = true;
        }
    return any ? os.str() : "all zero";
}

std::string label(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

/// Built complexes and their homology, computed once per run.
struct Computed
{
    int g = 0, n = 0;
    bool rep = false;
    GraphCatalog catalog;
    ChainComplex complex;
    BettiTable table;
};

class Runner
{
public:
    explicit Runner(const VerifyOptions& options) : options_(options)
    {
        report_.suite = options.suite == Suite::Full ? "full" : "quick";
    }

    bool full() const { return options_.suite == Suite::Full; }

    void check(const std::string& name, const std::string& claim, const std::string& source,
               const std::function<Outcome()>& body)
    {
        if (options_.progress)
            options_.progress("check " + name);
        Check c;
        c.name = name;
        c.claim = claim;
        c.source = source;
        const auto start = Clock::now();
        try
        {
            Outcome o = body();
            c.expected = std::move(o.expected);
            c.computed = std::move(o.computed);
            c.passed = o.passed;
        }
        catch (const std::exception& e)
        {
            if (c.expected.empty())
                c.expected = "(not reached)";
            c.computed = std::string("error: ") + e.what();
            c.passed = false;
        }
        c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        report_.checks.push_back(std::move(c));
    }

    const GraphCatalog& catalog(int g, int n)
    {
        auto key = std::make_pair(g, n);
        auto it = catalogs_.find(key);
        if (it == catalogs_.end())
        {
            EnumerationOptions eo;
            eo.jobs = options_.jobs;
            eo.progress = options_.progress;
            it = catalogs_.emplace(key, load_or_build_catalog(g, n, options_.cache, eo)).first;
        }
        return it->second;
    }

    const Computed& delta(int g, int n) { return computed(g, n, false); }
    const Computed& rep(int g, int n) { return computed(g, n, true); }

    const Computed& computed(int g, int n, bool rep)
    {
        auto key = std::make_tuple(g, n, rep);
        auto it = computed_.find(key);
        if (it != computed_.end())
            return *it->second;
        auto c = std::make_unique<Computed>();
        c->g = g;
        c->n = n;
        c->rep = rep;
        c->catalog = rep ? repeated_marking_subcomplex(catalog(g, n)) : catalog(g, n);
        ComplexOptions co;
        co.jobs = options_.jobs;
        c->complex = build_complex(c->catalog, co);
        HomologyOptions ho;
        ho.jobs = options_.jobs;
        c->table = betti(c->complex, ho);
        c->table.label = (rep ? "Delta^rep" : "Delta") + label(g, n);
        order_.push_back(c.get());
        return *computed_.emplace(key, std::move(c)).first->second;
    }

    const std::vector<Computed*>& all_computed() const { return order_; }
    const std::map<std::pair<int, int>, GraphCatalog>& all_catalogs() const { return catalogs_; }
    const VerifyOptions& options() const { return options_; }
    VerificationReport take() { return std::move(report_); }

private:
    VerifyOptions options_;
    VerificationReport report_;
    std::map<std::pair<int, int>, GraphCatalog> catalogs_;
    std::map<std::tuple<int, int, bool>, std::unique_ptr<Computed>> computed_;
    std::vector<Computed*> order_;
};

Outcome single_sphere(const BettiTable& t, int degree, std::int64_t rank)
{
    Outcome o;
    o.expected = "b" + std::to_string(degree) + "=" + std::to_string(rank) + ", rest 0";
    o.computed = betti_string(t);
    o.passed = t.support() == std::vector<int>{degree} && t.betti(degree) == rank;
    return o;
}

void genus_one_checks(Runner& r)
{
    std::vector<int> ns = {3, 4, 5};
    if (r.full())
    {
        ns.push_back(6);
        ns.push_back(7);
    }
    for (int n : ns)
        r.check("delta_1_" + std::to_string(n) + "_betti",
                "Delta" + label(1, n) + " is a wedge of (n-1)!/2 spheres of dimension n-1",
                "closed form", [&r, n] {
                    return single_sphere(r.delta(1, n).table, n - 1,
                                         static_cast<std::int64_t>(factorial(n - 1) / 2));
                });

    r.check("delta_1_1_and_1_2_contractible",
            "Delta(1,1) and Delta(1,2) have vanishing reduced homology; Delta(1,1) is one point",
            "closed form", [&r] {
                const auto& a = r.delta(1, 1);
                const auto& b = r.delta(1, 2);
                Outcome o;
                o.expected = "(1,1): all zero, 1 cell; (1,2): all zero";
                o.computed = "(1,1): " + betti_string(a.table) + ", " +
                             std::to_string(a.catalog.total_size()) + " cell; (1,2): " +
                             betti_string(b.table);
                o.passed = a.table.support().empty() && b.table.support().empty() &&
                           a.catalog.total_size() == 1;
                return o;
            });
}

void genus_zero_checks(Runner& r)
{
    for (int n : {5, 6, 7})
        r.check("delta_0_" + std::to_string(n) + "_single_rank",
                "Delta" + label(0, n) + " has one nonzero reduced Betti number, of rank (n-2)!",
                "closed form", [&r, n] {
                    const BettiTable& t = r.delta(0, n).table;
                    const auto support = t.support();
                    const auto rank = static_cast<std::int64_t>(factorial(n - 2));
                    Outcome o;
                    o.expected = "single nonzero degree of rank " + std::to_string(rank);
                    o.computed = betti_string(t);
                    o.passed = support.size() == 1 && t.betti(support.front()) == rank;
                    return o;
                });
}

void repeated_marking_checks(Runner& r)
{
    std::vector<std::pair<int, int>> cases = {{1, 2}, {1, 3}, {1, 4}, {2, 2}};
    if (r.full())
    {
        cases.emplace_back(1, 5);
        cases.emplace_back(2, 3);
    }
    for (auto [g, n] : cases)
        r.check("rep_" + std::to_string(g) + "_" + std::to_string(n) + "_contractible",
                "the repeated-marking subcomplex of Delta" + label(g, n) +
                    " has vanishing reduced homology",
                "closed form", [&r, g, n] {
                    const Computed& c = r.rep(g, n);
                    Outcome o;
                    o.expected = "all zero";
                    o.computed = betti_string(c.table) + " (" +
                                 std::to_string(c.catalog.total_size()) + " classes)";
                    o.passed = !c.table.empty_complex && c.table.support().empty();
                    return o;
                });
}

void connectivity_checks(Runner& r)
{
    std::vector<int> ones = {4, 5};
    std::vector<int> twos = {2};
    if (r.full())
    {
        ones.push_back(6);
        twos.push_back(3);
    }
    for (int n : ones)
        r.check("delta_1_" + std::to_string(n) + "_connectivity",
                "reduced Betti numbers of Delta" + label(1, n) + " vanish up to degree n-2",
                "closed form", [&r, n] {
                    const BettiTable& t = r.delta(1, n).table;
                    Outcome o;
                    o.expected = "b_i=0 for i<=" + std::to_string(n - 2);
                    o.computed = betti_string(t);
                    o.passed = true;
                    for (int i = -1; i <= n - 2; ++i)
                        o.passed = o.passed && t.betti(i) == 0;
                    return o;
                });
    for (int n : twos)
        r.check("delta_2_" + std::to_string(n) + "_connectivity",
                "reduced Betti numbers of Delta" + label(2, n) + " vanish up to degree n",
                "closed form", [&r, n] {
                    const BettiTable& t = r.delta(2, n).table;
                    Outcome o;
                    o.expected = "b_i=0 for i<=" + std::to_string(n);
                    o.computed = betti_string(t);
                    o.passed = true;
                    for (int i = -1; i <= n; ++i)
                        o.passed = o.passed && t.betti(i) == 0;
                    return o;
                });
}

/// Checks that range over every complex built so far; run after the targeted checks.
void global_homology_checks(Runner& r)
{
    r.check("connectivity_everywhere",
            "for g >= 1, reduced Betti numbers of Delta(g,n) vanish in degrees <= n-3",
            "closed form", [&r] {
                Outcome o;
                o.expected = "no violations";
                std::ostringstream bad;
                std::size_t count = 0;
                for (const Computed* c : r.all_computed())
                {
                    if (c->rep || c->g < 1)
                        continue;
                    ++count;
                    for (int i = -1; i <= c->n - 3; ++i)
                        if (c->table.betti(i) != 0)
                            bad << c->table.label << ": b" << i << "=" << c->table.betti(i) << "; ";
                }
                o.computed = bad.str().empty() ? "no violations in " + std::to_string(count) + " complexes"
                                               : bad.str();
                o.passed = bad.str().empty() && count > 0;
                return o;
            });

    r.check("top_degree_support",
            "for g >= 1, reduced homology of Delta(g,n) lives in the top g - delta_{0,n} degrees",
            "closed form", [&r] {
                Outcome o;
                o.expected = "b_k=0 outside [2g-3+n, 3g-4+n] (n>0) or [2g-2, 3g-4] (n=0)";
                std::ostringstream bad;
                std::size_t count = 0;
                for (const Computed* c : r.all_computed())
                {
                    if (c->rep || c->g < 1)
                        continue;
                    ++count;
                    const int hi = 3 * c->g - 4 + c->n;
                    const int lo = c->n == 0 ? 2 * c->g - 2 : 2 * c->g - 3 + c->n;
                    for (int k : c->table.support())
                        if (k < lo || k > hi)
                            bad << c->table.label << ": b" << k << "; ";
                }
                o.computed = bad.str().empty() ? "no violations in " + std::to_string(count) + " complexes"
                                               : bad.str();
                o.passed = bad.str().empty() && count > 0;
                return o;
            });
}

void character_checks(Runner& r)
{
    std::vector<int> ns = {3, 4, 5};
    if (r.full())
        ns.push_back(6);
    for (int n : ns)
        r.check("character_" + std::to_string(n),
                "the S_" + std::to_string(n) +
                    " character of the top reduced homology of Delta(1,n) equals the induced "
                    "dihedral character",
                "closed form", [&r, n] {
                    const ClassFunction top =
                        top_homology_character(r.catalog(1, n), r.options().jobs);
                    const ClassFunction dihedral = dihedral_character(n);
                    Outcome o;
                    o.expected = dihedral.to_json()["values"].dump();
                    o.computed = top.to_json()["values"].dump();
                    o.passed = top == dihedral;
                    return o;
                });

    r.check("character_multiplicities",
            "inner products of each top homology character with every irreducible are "
            "nonnegative integers",
            "identity", [&r, ns] {
                Outcome o;
                o.expected = "nonnegative integers";
                std::ostringstream os;
                o.passed = true;
                for (int n : ns)
                {
                    const ClassFunction top =
                        top_homology_character(r.catalog(1, n), r.options().jobs);
                    os << "n=" << n << ":";
                    for (const auto& lambda : partitions_of(n))
                    {
                        const Rational m = inner_product(top, irreducible_character(lambda));
                        if (!m.is_integer() || m.num < 0)
                            o.passed = false;
                        if (m.num != 0)
                            os << " " << partition_string(lambda) << "^" << m.num
                               << (m.is_integer() ? "" : "/" + std::to_string(m.den));
                    }
                    os << "; ";
                }
                o.computed = os.str();
                return o;
            });
}

/// Entry (row, col) of some boundary whose sign flip breaks d^2 = 0, if any.
bool inject_sign_flip(ChainComplex& complex)
{
    for (int p = 1; p < complex.max_degree(); ++p)
    {
        const IntSparse& upper = complex.boundary(p + 1);
        std::vector<char> used(upper.rows(), 0);
        for (Eigen::Index j = 0; j < upper.outerSize(); ++j)
            for (IntSparse::InnerIterator it(upper, j); it; ++it)
                used[it.row()] = 1;
        IntSparse lower = complex.boundary(p);
        for (Eigen::Index c = 0; c < lower.outerSize(); ++c)
        {
            if (!used[c])
                continue;
            for (IntSparse::InnerIterator it(lower, c); it; ++it)
            {
                it.valueRef() = -it.value();
                complex.set_boundary(p, std::move(lower));
                return true;
            }
        }
    }
    return false;
}

void property_checks(Runner& r)
{
    r.check("boundary_squares_to_zero", "every composite of consecutive boundaries vanishes",
            "identity", [&r] {
                Outcome o;
                o.expected = "d^2 = 0 in every built complex";
                std::ostringstream bad;
                bool injected = !r.options().inject_sign_flip;
                for (const Computed* c : r.all_computed())
                {
                    if (!injected)
                    {
                        ChainComplex broken = c->complex;
                        if (inject_sign_flip(broken))
                        {
                            injected = true;
                            if (!boundary_squares_to_zero(broken))
                                bad << c->table.label << " (sign-flipped); ";
                            continue;
                        }
                    }
                    if (!boundary_squares_to_zero(c->complex))
                        bad << c->table.label << "; ";
                }
                o.computed = bad.str().empty()
                                 ? "holds in " + std::to_string(r.all_computed().size()) + " complexes"
                                 : "fails in " + bad.str();
                o.passed = bad.str().empty();
                return o;
            });

    r.check("face_coherence", "labeled faces satisfy d_i d_j = d_{j-1} d_i for i < j", "identity",
            [&r] {
                Outcome o;
                o.expected = "no violations";
                std::size_t violations = 0;
                for (const auto& [gn, cat] : r.all_catalogs())
                    violations += face_coherence_violations(cat, 200, 0x5eed + gn.first * 31 + gn.second)
                                      .size();
                o.computed = std::to_string(violations) + " violations over " +
                             std::to_string(r.all_catalogs().size()) + " catalogs";
                o.passed = violations == 0;
                return o;
            });

    r.check("contraction_closure", "every edge contraction of a cataloged graph is cataloged",
            "identity", [&r] {
                Outcome o;
                o.expected = "closed";
                std::ostringstream bad;
                for (const auto& [gn, cat] : r.all_catalogs())
                    if (find_closure_violation(cat))
                        bad << label(gn.first, gn.second) << " ";
                o.computed = bad.str().empty() ? "closed" : "open: " + bad.str();
                o.passed = bad.str().empty();
                return o;
            });

    r.check("key_invariance",
            "canonical keys are unchanged by 100 random re-indexings of sampled catalog entries",
            "identity", [&r] {
                Outcome o;
                o.expected = "all keys equal";
                std::mt19937_64 rng(20240601);
                std::size_t tried = 0, mismatched = 0;
                for (const auto& [gn, cat] : r.all_catalogs())
                {
                    for (int p = 0; p < cat.num_degrees(); ++p)
                    {
                        const auto& cells = cat.cells(p);
                        const std::size_t step = std::max<std::size_t>(1, cells.size() / 10);
                        for (std::size_t k = 0; k < cells.size(); k += step)
                        {
                            const auto& entry = cells[k];
                            const auto& graph = entry.graph;
                            Permutation vp = identity_permutation(graph.num_vertices());
                            Permutation ep = identity_permutation(graph.num_edges());
                            std::vector<bool> flip(graph.num_edges());
                            for (int trial = 0; trial < 100; ++trial)
                            {
                                std::shuffle(vp.begin(), vp.end(), rng);
                                std::shuffle(ep.begin(), ep.end(), rng);
                                for (std::size_t e = 0; e < flip.size(); ++e)
                                    flip[e] = (rng() & 1) != 0;
                                ++tried;
                                if (canonical_key(reindex(graph, vp, ep, flip)) != entry.key)
                                    ++mismatched;
                            }
                        }
                    }
                }
                o.computed = std::to_string(mismatched) + " mismatches in " + std::to_string(tried) +
                             " re-indexings";
                o.passed = mismatched == 0 && tried > 0;
                return o;
            });

    r.check("sparse_rank_matches_dense",
            "sparse exact rank equals dense Bareiss rank on every boundary with rows+cols <= 200",
            "oracle", [&r] {
                Outcome o;
                o.expected = "equal ranks";
                std::size_t compared = 0, differ = 0;
                for (const Computed* c : r.all_computed())
                    for (int p = c->complex.min_degree() + 1; p <= c->complex.max_degree(); ++p)
                    {
                        const IntSparse& m = c->complex.boundary(p);
                        if (m.rows() + m.cols() > 200 || m.rows() == 0 || m.cols() == 0)
                            continue;
                        ++compared;
                        if (rank(m) != dense_rank_bareiss(m))
                            ++differ;
                    }
                o.computed = std::to_string(differ) + " differences over " + std::to_string(compared) +
                             " matrices";
                o.passed = differ == 0 && compared > 0;
                return o;
            });

    r.check("catalog_matches_bottom_up",
            "contraction-closure catalogs equal direct bottom-up enumeration for 3g-3+n <= 5",
            "oracle", [&r] {
                Outcome o;
                o.expected = "identical class lists";
                std::ostringstream os, bad;
                std::size_t pairs = 0;
                for (int g = 0; g <= 2; ++g)
                    for (int n = 0; 3 * g - 3 + n <= 5; ++n)
                    {
                        if (2 * g - 2 + n <= 0)
                            continue;
                        ++pairs;
                        const GraphCatalog& top = r.catalog(g, n);
                        const GraphCatalog bottom = enumerate_bottom_up(g, n);
                        bool same = top.num_degrees() == bottom.num_degrees();
                        for (int p = 0; same && p < top.num_degrees(); ++p)
                        {
                            same = top.size(p) == bottom.size(p);
                            for (std::size_t k = 0; same && k < top.size(p); ++k)
                                same = top.cells(p)[k].key == bottom.cells(p)[k].key;
                        }
                        if (!same)
                            bad << label(g, n) << " ";
                    }
                o.computed = bad.str().empty() ? "agree on " + std::to_string(pairs) + " (g,n)"
                                               : "differ on " + bad.str();
                o.passed = bad.str().empty();
                return o;
            });

    r.check("euler_from_traces",
            "the alternating trace of the identity on chains equals the alternating Betti sum",
            "identity", [&r] {
                Outcome o;
                o.expected = "equal for every marked complex";
                std::ostringstream bad;
                std::size_t count = 0;
                for (const Computed* c : r.all_computed())
                {
                    if (c->n == 0)
                        continue;
                    ++count;
                    const Permutation id = identity_permutation(c->n);
                    std::int64_t chi = -1;
                    for (int p = 0; p < c->catalog.num_degrees(); ++p)
                        chi += (p % 2 == 0 ? 1 : -1) * action_trace(c->catalog, p, id);
                    if (chi != c->table.euler)
                        bad << c->table.label << ": " << chi << " vs " << c->table.euler << "; ";
                }
                o.computed = bad.str().empty() ? "equal in " + std::to_string(count) + " complexes"
                                               : bad.str();
                o.passed = bad.str().empty() && count > 0;
                return o;
            });

    r.check("euler_from_census", "the alternating count of alternating cells equals the Betti sum",
            "identity", [&r] {
                Outcome o;
                o.expected = "equal for every complex";
                std::ostringstream bad;
                for (const Computed* c : r.all_computed())
                {
                    const std::int64_t chi = reduced_euler_from_census(torsion_census(c->catalog));
                    if (chi != c->table.euler)
                        bad << c->table.label << ": " << chi << " vs " << c->table.euler << "; ";
                }
                o.computed = bad.str().empty()
                                 ? "equal in " + std::to_string(r.all_computed().size()) + " complexes"
                                 : bad.str();
                o.passed = bad.str().empty();
                return o;
            });

    r.check("reference_labeling_invariance",
            "Betti numbers do not depend on the chosen reference labelings", "identity", [&r] {
                Outcome o;
                o.expected = "same Betti numbers for random reference labelings";
                std::ostringstream bad;
                std::size_t count = 0;
                for (const Computed* c : r.all_computed())
                {
                    if (c->catalog.total_size() > 2000)
                        continue;
                    ++count;
                    ComplexOptions co;
                    co.jobs = r.options().jobs;
                    co.reference_seed = 977 + count;
                    HomologyOptions ho;
                    ho.jobs = r.options().jobs;
                    const BettiTable t = betti(build_complex(c->catalog, co), ho);
                    for (int p = -1; p <= c->complex.max_degree(); ++p)
                        if (t.betti(p) != c->table.betti(p))
                        {
                            bad << c->table.label << " ";
                            break;
                        }
                }
                o.computed = bad.str().empty() ? "invariant in " + std::to_string(count) + " complexes"
                                               : "changed: " + bad.str();
                o.passed = bad.str().empty() && count > 0;
                return o;
            });
}

} // namespace

VerificationReport run_verification(const VerifyOptions& options)
{
    Runner r(options);
    genus_one_checks(r);
    genus_zero_checks(r);
    repeated_marking_checks(r);
    connectivity_checks(r);
    // Extra small complexes so the global checks cover several genera.
    for (auto [g, n] : {std::pair{2, 0}, {2, 1}, {0, 4}})
    {
        try
        {
            r.delta(g, n);
        }
        catch (const std::exception&)
        {
            // A failure here surfaces in the property checks that need the complex.
        }
    }
    global_homology_checks(r);
    character_checks(r);
    property_checks(r);
    return r.take();
}

} // namespace tropicell
