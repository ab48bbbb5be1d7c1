#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zslab/group.hpp"

namespace zslab {

struct SearchBudget {
    long long max_nodes = 10000000;  // DFS extension attempts
    double max_seconds = 60.0;       // wall clock
    int parallel_width = 1;          // worker threads; never affects results
};

enum class SearchStatus {
    EXACT,             // search space exhausted, value is exact
    LOWER_BOUND_ONLY,  // budget ran out, value is a certified lower bound
    UNKNOWN,           // budget ran out with nothing certified
    VACUOUS,           // quantity defined by convention (no admissible witness)
};

std::string to_string(SearchStatus s);

struct ExactResult {
    std::optional<long long> value;
    SearchStatus status = SearchStatus::UNKNOWN;
    std::optional<ZSequence> witness;
    long long nodes_explored = 0;
};

/**
 * Length of a longest sequence over A with no zero-sum subsequence of length
 * exactly k, where k must equal exp(A) (translations are used as symmetries,
 * which requires k·t = 0 for all t).  Multiplicities are capped at k-1, which
 * is harmless: k copies of one element always contain a length-k zero-sum
 * subsequence when k = exp(A).
 *
 * EXACT: value = the maximum, witness attains it.
 * LOWER_BOUND_ONLY: budget exhausted; value = best length found.
 */
ExactResult max_zero_sum_free_length(const AbelianGroup& A, long long k,
                                     const SearchBudget& budget = {});

/**
 * s(A): least length such that every sequence of that length over A has a
 * zero-sum subsequence of length exp(A).  Computed as the search above plus
 * one.  LOWER_BOUND_ONLY reports value = best_length + 1 (s(A) is at least
 * that, witnessed by a sequence of length value - 1).
 */
ExactResult exact_s(const AbelianGroup& A, const SearchBudget& budget = {});

/**
 * g(A): the squarefree analogue, sequences restricted to sets.  When even
 * the full group (as a set) has no zero-sum subsequence of length exp(A),
 * no admissible witness of any length exists for the defining property and
 * the result is VACUOUS with value |A| + 1 (every squarefree sequence,
 * including the largest, is zero-sum free).
 */
ExactResult exact_g(const AbelianGroup& A, const SearchBudget& budget = {});

/**
 * All zero-sum-free sequences of the given length, up to translation and
 * stored automorphisms, as canonical orbit representatives.  raw_count is
 * the total number of distinct sequences (orbit-stabilizer), exact when the
 * symmetry group is exact (not weakened).
 */
struct ExtremalEnumeration {
    std::vector<ZSequence> orbit_reps;
    long long orbit_count = 0;
    mpz_class raw_count = 0;
    long long nodes_explored = 0;
    bool complete = false;
    bool symmetry_weakened = false;
};

ExtremalEnumeration enumerate_extremal(const AbelianGroup& A, long long k,
                                       long long length,
                                       const SearchBudget& budget = {});

} // namespace zslab
