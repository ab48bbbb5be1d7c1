#pragma once

#include <optional>
#include <string>

#include "zslab/search.hpp"

namespace zslab {

enum class PropertyDStatus { HOLDS, FAILS, UNKNOWN };

std::string to_string(PropertyDStatus s);

/**
 * For A = (Z_k)^n the multiplicity-divisibility property of extremal
 * sequences: every zero-sum-free sequence of length s(A) - 1 has the shape
 * T^{k-1} for some squarefree T, i.e. every multiplicity is divisible by
 * k - 1.  Verified by computing s(A) exactly and enumerating all extremal
 * sequences up to symmetry (the property is symmetry-invariant, so checking
 * orbit representatives suffices).
 */
struct PropertyDReport {
    AbelianGroup group;
    PropertyDStatus status = PropertyDStatus::UNKNOWN;
    std::optional<long long> s_value;
    long long extremal_orbits_checked = 0;
    mpz_class extremal_raw_count = 0;
    std::optional<ZSequence> counterexample;
    long long nodes_explored = 0;
};

/** True iff k >= 2 and every multiplicity of S is divisible by k - 1. */
bool is_kth_power_form(const ZSequence& S, long long k);

/** Requires A homocyclic ((Z_k)^n with k >= 2); throws DomainError otherwise.
 *  UNKNOWN when the budget runs out before s(A) or the enumeration finishes. */
PropertyDReport check_property_d(const AbelianGroup& A,
                                 const SearchBudget& budget = {});

} // namespace zslab
