#include "tropicell/characters.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tropicell/canonical.hpp"
#include "tropicell/parallel.hpp"

namespace tropicell {

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw std::domain_error("zero denominator");
    if (d < 0)
    {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
}

ClassFunction::ClassFunction(int n) : n_(n), classes_(partitions_of(n)), values_(classes_.size(), 0)
{
    if (n < 1)
        throw std::invalid_argument("class functions need n >= 1");
}

std::size_t ClassFunction::slot(const Partition& cls) const
{
    auto it = std::find(classes_.begin(), classes_.end(), cls);
    if (it == classes_.end())
        throw std::invalid_argument("not a partition of " + std::to_string(n_) + ": " +
                                    partition_string(cls));
    return static_cast<std::size_t>(it - classes_.begin());
}

std::int64_t ClassFunction::operator()(const Partition& cls) const { return values_[slot(cls)]; }
std::int64_t& ClassFunction::operator[](const Partition& cls) { return values_[slot(cls)]; }
std::int64_t ClassFunction::at_identity() const { return values_.back(); }

nlohmann::json ClassFunction::to_json() const
{
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t k = 0; k < classes_.size(); ++k)
        values[partition_string(classes_[k])] = values_[k];
    return {{"n", n_}, {"values", values}};
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("inner product of class functions on different S_n");
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < a.classes().size(); ++k)
        sum += static_cast<std::int64_t>(class_size(a.classes()[k])) * a.values()[k] * b.values()[k];
    return Rational(sum, static_cast<std::int64_t>(factorial(a.n())));
}

namespace {

std::vector<int> beta_set(const Partition& lambda)
{
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i)
        beta[i] = lambda[i] + (len - 1 - i);
    return beta;
}

Partition from_beta_set(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    Partition lambda;
    for (int i = 0; i < len; ++i)
        if (int part = beta[i] - (len - 1 - i); part > 0)
            lambda.push_back(part);
    return lambda;
}

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu, std::size_t next,
                                std::map<std::pair<Partition, std::size_t>, std::int64_t>& memo)
{
    if (next == mu.size())
        return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, next);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int k = mu[next];
    const std::vector<int> beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx)
    {
        const int b = beta[idx];
        const int moved = b - k;
        if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end())
            continue;
        int between = 0;
        for (int c : beta)
            if (c > moved && c < b)
                ++between;
        std::vector<int> next_beta = beta;
        next_beta[idx] = moved;
        const std::int64_t sign = (between % 2 == 0) ? 1 : -1;
        total += sign * murnaghan_nakayama(from_beta_set(next_beta), mu, next + 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

ClassFunction irreducible_character(const Partition& lambda)
{
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()) ||
        std::any_of(lambda.begin(), lambda.end(), [](int x) { return x <= 0; }))
        throw std::invalid_argument("irreducible_character: not a partition");
    ClassFunction chi(n);
    for (const auto& mu : chi.classes())
    {
        // Memo entries depend on the remaining parts of mu.
        std::map<std::pair<Partition, std::size_t>, std::int64_t> memo;
        chi[mu] = murnaghan_nakayama(lambda, mu, 0, memo);
    }
    return chi;
}

std::int64_t action_trace(const GraphCatalog& catalog, int p, const Permutation& sigma)
{
    if (static_cast<int>(sigma.size()) != catalog.markings() || !is_permutation(sigma))
        throw std::invalid_argument("action_trace: sigma is not a permutation of the markings");
    std::int64_t trace = 0;
    for (const auto& entry : catalog.cells(p))
    {
        if (entry.odd_automorphism)
            continue;
        const MarkedWeightedGraph moved = permute_markings(entry.graph, sigma);
        if (canonical_key(moved) != entry.key)
            continue;
        trace += canonicalize(moved).iso.sign;
    }
    return trace;
}

ClassFunction equivariant_euler(const GraphCatalog& catalog, unsigned jobs)
{
    if (catalog.markings() == 0)
        throw std::invalid_argument("equivariant_euler needs at least one marking");
    ClassFunction chi(catalog.markings());
    const auto& classes = chi.classes();
    const int degrees = catalog.num_degrees();
    std::vector<std::int64_t> traces(classes.size() * degrees, 0);
    parallel_for(traces.size(), jobs, [&](std::size_t k) {
        const std::size_t c = k / degrees;
        const int p = static_cast<int>(k % degrees);
        traces[k] = action_trace(catalog, p, permutation_of_type(classes[c]));
    });
    for (std::size_t c = 0; c < classes.size(); ++c)
    {
        std::int64_t value = -1;
        for (int p = 0; p < degrees; ++p)
            value += (p % 2 == 0 ? 1 : -1) * traces[c * degrees + p];
        chi[classes[c]] = value;
    }
    return chi;
}

ClassFunction top_homology_character(const GraphCatalog& genus_one_catalog, unsigned jobs)
{
    const int n = genus_one_catalog.markings();
    if (genus_one_catalog.genus() != 1)
        throw std::invalid_argument("top_homology_character needs a genus-one catalog");
    if (n < 3)
        throw std::invalid_argument("top_homology_character needs n >= 3");
    ClassFunction chi = equivariant_euler(genus_one_catalog, jobs);
    if ((n - 1) % 2 != 0)
        for (const auto& cls : std::vector<Partition>(chi.classes()))
            chi[cls] = -chi(cls);
    return chi;
}

ClassFunction top_homology_character(int n, const CacheOptions& cache,
                                     const EnumerationOptions& options)
{
    if (n < 3)
        throw std::invalid_argument("top_homology_character needs n >= 3");
    return top_homology_character(load_or_build_catalog(1, n, cache, options), options.jobs);
}

ClassFunction dihedral_character(int n)
{
    if (n < 3)
        throw std::invalid_argument("dihedral_character needs n >= 3");

    // Vertices 0..n-1 around the polygon, edge j = {j, j+1 mod n}.
    auto edge_index = [n](int a, int b) { return ((a + 1) % n == b) ? a : b; };
    std::map<Permutation, int> edge_sign;
    for (int k = 0; k < n; ++k)
    {
        for (int reflect = 0; reflect < 2; ++reflect)
        {
            Permutation vertex(n);
            for (int i = 0; i < n; ++i)
            {
                const int reflected = reflect ? (n - 1 - i) : i;
                vertex[i] = (reflected + k) % n;
            }
            Permutation edge(n);
            for (int j = 0; j < n; ++j)
                edge[j] = edge_index(vertex[j], vertex[(j + 1) % n]);
            edge_sign.emplace(vertex, permutation_sign(edge));
        }
    }
    if (edge_sign.size() != static_cast<std::size_t>(2 * n))
        throw std::logic_error("dihedral group has the wrong order");

    ClassFunction chi(n);
    for (const auto& cls : chi.classes())
    {
        const Permutation sigma = permutation_of_type(cls);
        std::int64_t sum = 0;
        for_each_permutation(n, [&](const Permutation& x) {
            const Permutation x_inv = inverse(std::span<const int>(x));
            Permutation conj(n);
            for (int i = 0; i < n; ++i)
                conj[i] = x_inv[sigma[x[i]]];
            if (auto it = edge_sign.find(conj); it != edge_sign.end())
                sum += it->second;
        });
        if (sum % (2 * n) != 0)
            throw std::logic_error("induced character is not integral");
        chi[cls] = sum / (2 * n);
    }
    return chi;
}

std::string character_table_text(const std::vector<std::pair<std::string, ClassFunction>>& rows)
{
    if (rows.empty())
        return {};
    const auto& classes = rows.front().second.classes();
    std::size_t label_width = 5;
    for (const auto& [name, f] : rows)
        label_width = std::max(label_width, name.size());
    std::vector<std::size_t> width(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k)
    {
        width[k] = partition_string(classes[k]).size();
        for (const auto& [name, f] : rows)
            width[k] = std::max(width[k], std::to_string(f.values()[k]).size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(label_width)) << "class" << std::right;
    for (std::size_t k = 0; k < classes.size(); ++k)
        os << "  " << std::setw(static_cast<int>(width[k])) << partition_string(classes[k]);
    os << '\n';
    for (const auto& [name, f] : rows)
    {
        os << std::left << std::setw(static_cast<int>(label_width)) << name << std::right;
        for (std::size_t k = 0; k < classes.size(); ++k)
            os << "  " << std::setw(static_cast<int>(width[k])) << f.values()[k];
        os << '\n';
    }
    return os.str();
}

} // namespace tropicell
