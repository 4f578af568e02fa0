/**
 * Permutations of {0, ..., n-1} stored as image vectors, and integer
 * partitions indexing conjugacy classes of the symmetric group.
 */
#ifndef TROPICELL_PERMUTATION_HPP
#define TROPICELL_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tropicell {

using Permutation = std::vector<int>;

/// Partition in weakly decreasing order.
using Partition = std::vector<int>;

Permutation identity_permutation(int n);

bool is_permutation(std::span<const int> perm);

/// +1 for even, -1 for odd.
int permutation_sign(std::span<const int> perm);

/// (second o first)(i) = second[first[i]].
Permutation compose(std::span<const int> first, std::span<const int> second);

Permutation inverse(std::span<const int> perm);

Partition cycle_type(std::span<const int> perm);

/// Permutation with the given cycle type, cycles on consecutive points.
Permutation permutation_of_type(const Partition& type);

/// All partitions of n, in reverse lexicographic order (n first, 1^n last).
std::vector<Partition> partitions_of(int n);

/// "3+1+1"
std::string partition_string(const Partition& p);
Partition parse_partition(const std::string& s);

std::uint64_t factorial(int n);

/// Order of the centralizer of an element of cycle type p.
std::uint64_t centralizer_order(const Partition& p);

/// Size of the conjugacy class of cycle type p in S_n.
std::uint64_t class_size(const Partition& p);

/// Calls visit(perm) for every permutation of {0..n-1} in lexicographic order.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit);

} // namespace tropicell

#include <algorithm>

namespace tropicell {

template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit)
{
    Permutation perm = identity_permutation(n);
    do
    {
        visit(static_cast<const Permutation&>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace tropicell

#endif
