#pragma once

// Deterministic exhaustive streams for the three object families, an
// independent brute-force tableau enumerator, reference integer sequences
// (Eulerian, large Schröder), and statistic censuses.
//
// Linked partitions of [n] are enumerated through predecessor vectors
// (p_2, ..., p_n) with p_v in {0, ..., v-1}: p_v = 0 means vertex v has no
// incoming arc, p_v = u means the arc (u, v).  The unique-right-endpoint
// invariant makes this a bijection, so the stream has exactly n! elements
// and ranks are mixed-radix numbers.  Streams are index-addressable: any
// rank range can be replayed independently, which is what the sharded
// verification suites rely on.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptab/core.hpp"

namespace ptab {

using bigint = boost::multiprecision::cpp_int;

std::uint64_t factorial(int n);  // n <= 20

// --- linked partitions -----------------------------------------------------

std::uint64_t linked_partition_count(int n);  // n!
LinkedPartition linked_partition_unrank(int n, std::uint64_t rank);
std::uint64_t linked_partition_rank(const LinkedPartition& lp);

// Visits ranks [lo, hi) in order; the visitor returns false to stop early.
void for_each_linked_partition(int n, std::uint64_t lo, std::uint64_t hi,
                               const std::function<bool(const LinkedPartition&)>& visit);
void for_each_linked_partition(int n,
                               const std::function<bool(const LinkedPartition&)>& visit);

// --- permutations ------------------------------------------------------------

std::uint64_t permutation_count(int n);  // n!
Permutation permutation_unrank(int n, std::uint64_t rank);  // lexicographic
std::uint64_t permutation_rank(const Permutation& p);

void for_each_permutation(int n, std::uint64_t lo, std::uint64_t hi,
                          const std::function<bool(const Permutation&)>& visit);
void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit);

// --- permutation tableaux ----------------------------------------------------

// Production stream: the images of the linked-partition stream under the
// shape-preserving bijection, in stream order.
void for_each_tableau(int n, const std::function<bool(const PermutationTableau&)>& visit);

// Independent oracle: enumerates every shape of length n (column subsets of
// {2..n} in increasing bitmask order, bit v-2 for label v) and every 0/1
// filling of its cells (cells in row-major reading order, fillings in
// lexicographic bit order), keeping the fillings that satisfy the tableau
// rules.  Deliberately does not touch the bijection code.  Guarded to
// n <= 7; larger n fails with cost_guard.
void for_each_tableau_bruteforce(
    int n, const std::function<bool(const PermutationTableau&)>& visit);

// --- statistics --------------------------------------------------------------

enum class Statistic {
  blocks,
  arcs,
  crossings,
  nestings,
  descents,
  weak_excedances,
  rows,
  columns,
  dots,
  transients,
  singletons,
};

std::optional<Statistic> parse_statistic(std::string_view name);
const char* statistic_name(Statistic s);

// Value of a statistic on one object; fails with unknown_statistic when the
// statistic does not apply to the object family.
long long statistic_of(const LinkedPartition& lp, Statistic s);
long long statistic_of(const Permutation& p, Statistic s);
long long statistic_of(const PermutationTableau& t, Statistic s);

Histogram lp_distribution(int n, Statistic s);
Histogram perm_distribution(int n, Statistic s);
Histogram tableau_distribution(int n, Statistic s);  // over the bijection stream

// --- reference sequences ------------------------------------------------------

// Number of permutations of [n] with exactly j descents, 0 <= j <= n-1.
bigint eulerian(int n, int j);
std::vector<bigint> eulerian_row(int n);

// Large Schröder numbers 1, 2, 6, 22, 90, 394, 1806, ...; table through
// m = 10, three-term recurrence beyond.
bigint schroeder(int m);

}  // namespace ptab
