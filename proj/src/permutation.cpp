#include "tropicell/permutation.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropicell {

Permutation identity_permutation(int n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(std::span<const int> perm)
{
    std::vector<char> seen(perm.size(), 0);
    for (int x : perm)
    {
        if (x < 0 || x >= static_cast<int>(perm.size()) || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

int permutation_sign(std::span<const int> perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    int transpositions = 0;
    for (int i = 0; i < n; ++i)
    {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j])
        {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

Permutation compose(std::span<const int> first, std::span<const int> second)
{
    Permutation out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = second[first[i]];
    return out;
}

Permutation inverse(std::span<const int> perm)
{
    Permutation out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        out[perm[i]] = static_cast<int>(i);
    return out;
}

Partition cycle_type(std::span<const int> perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    Partition type;
    for (int i = 0; i < n; ++i)
    {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j])
        {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

Permutation permutation_of_type(const Partition& type)
{
    const int n = std::accumulate(type.begin(), type.end(), 0);
    Permutation p(n);
    int start = 0;
    for (int len : type)
    {
        for (int k = 0; k < len; ++k)
            p[start + k] = start + (k + 1) % len;
        start += len;
    }
    return p;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current,
                    std::vector<Partition>& out)
{
    if (remaining == 0)
    {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part)
    {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition current;
    if (n == 0)
        return {Partition{}};
    partitions_rec(n, n, current, out);
    return out;
}

std::string partition_string(const Partition& p)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "+" : "") << p[i];
    return os.str();
}

Partition parse_partition(const std::string& s)
{
    Partition p;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, '+'))
    {
        std::size_t used = 0;
        int value = std::stoi(part, &used);
        if (used != part.size() || value <= 0)
            throw std::invalid_argument("bad partition string: " + s);
        p.push_back(value);
    }
    if (!std::is_sorted(p.begin(), p.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be nonincreasing: " + s);
    return p;
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t centralizer_order(const Partition& p)
{
    std::uint64_t z = 1;
    for (std::size_t i = 0; i < p.size();)
    {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        const int multiplicity = static_cast<int>(j - i);
        for (int k = 0; k < multiplicity; ++k)
            z *= static_cast<std::uint64_t>(p[i]);
        z *= factorial(multiplicity);
        i = j;
    }
    return z;
}

std::uint64_t class_size(const Partition& p)
{
    const int n = std::accumulate(p.begin(), p.end(), 0);
    return factorial(n) / centralizer_order(p);
}

} // namespace tropicell
