#pragma once
// Perfect difference sets: k distinct residues mod N = k^2 - k + 1 whose
// k(k-1) pairwise differences cover each of 1..N-1 exactly once. They are
// exactly what makes the theorem-side test for plane-type star graph
// components tick.

#include <span>
#include <vector>

namespace starpoly {

// Entries are reduced mod k^2 - k + 1 first. Throws std::invalid_argument
// unless |D| == k and k >= 2.
bool is_perfect_difference_set(std::span<const int> D, int k);

// All perfect difference sets of order k as sorted residue vectors, in
// lexicographic order. Desk-scale bound 2 <= k <= 6 (N <= 31); throws
// std::invalid_argument outside it.
std::vector<std::vector<int>> enumerate_perfect_difference_sets(int k);

}  // namespace starpoly
