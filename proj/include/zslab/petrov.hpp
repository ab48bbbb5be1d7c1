#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zslab/bounds.hpp"
#include "zslab/group.hpp"
#include "zslab/search.hpp"

namespace zslab {

/**
 * A coefficient pattern (a_1, ..., a_m) over (Z_p)^n with p prime, m >= 2 and
 * sum a_i = 0 (mod p).  A subset F of the group "has the property" when the
 * only solutions of a_1 b_1 + ... + a_m b_m = 0 with all b_i in F are the
 * constant tuples b_1 = ... = b_m (which are automatically solutions since
 * the coefficients sum to zero).
 */
struct PetrovInstance {
    long long p;
    long long n;
    std::vector<long long> coeffs; // reduced mod p at construction

    PetrovInstance(long long p_, long long n_, std::vector<long long> coeffs_);

    long long m() const { return static_cast<long long>(coeffs.size()); }
    AbelianGroup group() const;
    bool all_coeffs_zero() const;
    bool all_coeffs_one() const;
};

struct PetrovVerifyResult {
    bool property_holds = false;
    /** When violated: a nonconstant tuple (b_1..b_m) of elements of F with
     *  sum_i a_i b_i = 0, as element indices. */
    std::optional<std::vector<uint16_t>> violating_tuple;
};

/** Decide the property for a given set F (distinct element indices), by
 *  meet-in-the-middle counting of all zero tuples; exact. */
PetrovVerifyResult petrov_verify(const PetrovInstance& inst,
                                 const std::vector<uint16_t>& F);

/**
 * Largest |F| with the property, by canonical-orbit DFS.  Symmetries used:
 * translations always (valid because the coefficients sum to zero), the full
 * linear group when all coefficients are 1, scalar multiplications otherwise.
 */
ExactResult petrov_max_search(const PetrovInstance& inst,
                              const SearchBudget& budget = {});

enum class PetrovBoundRoute {
    EXACT_DIM,   // m * dim(n, p, floor(n (p-1) / m)), exact dimension
    CLOSED_FORM, // m * p^(c n), c = 1 - (m-2)^2 / (2 m^2 ln p)
};

/** Cardinality upper bound for sets with the property; requires some
 *  coefficient nonzero mod p. */
BoundResult petrov_cardinality_bound(const PetrovInstance& inst,
                                     PetrovBoundRoute route);

} // namespace zslab
