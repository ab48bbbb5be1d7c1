#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "zslab/group.hpp"

namespace zslab {

/**
 * The invariance group used for canonical forms and search pruning: all
 * translations x -> x + t composed with a stored set of automorphisms.
 * Translations preserve "has a zero-sum subsequence of length exp(A)"
 * because exp(A)·t = 0; automorphisms always do.
 *
 * The automorphism part is exact (full Aut(G)) when feasible:
 *   - elementary p-groups use the general linear group over Z_p,
 *   - other groups of order <= 64 enumerate Aut directly,
 * both capped at `aut_cap` stored maps.  Beyond that a correct but weaker
 * subgroup is used (coordinate-wise unit multiplications, or scalar unit
 * multiplications), flagged via `weakened`.  A subgroup only weakens
 * pruning and coarsens orbit counts, never correctness of search results.
 */
struct SymmetryGroup {
    std::shared_ptr<const GroupOps> ops;
    std::vector<std::vector<uint16_t>> auts;     // permutations of element indices
    std::vector<std::vector<uint16_t>> aut_inv;  // their inverses
    bool weakened = false;

    /** Order of the translation-automorphism group. */
    mpz_class size() const { return mpz_class(static_cast<unsigned long>(auts.size())) * ops->group.order(); }
};

constexpr size_t kDefaultAutCap = 400000;

SymmetryGroup build_symmetry_group(std::shared_ptr<const GroupOps> ops,
                                   size_t aut_cap = kDefaultAutCap);

/** Only scalar unit multiplications as the automorphism part (plus all
 *  translations).  Used where only scalings are known to preserve the
 *  property being searched. */
SymmetryGroup build_scalar_symmetry(std::shared_ptr<const GroupOps> ops);

/**
 * Canonicity test for a multiset given by its multiplicity array M (indexed
 * by element) and sorted support.  The multiset word (elements listed
 * nondecreasing) is canonical iff no symmetry produces a lexicographically
 * smaller word.  When canonical and stab_out is non-null, the number of
 * symmetries fixing the multiset is stored there (for orbit-stabilizer raw
 * counts).
 */
bool is_canonical_word(const SymmetryGroup& sym,
                       const std::vector<uint16_t>& M,
                       const std::vector<uint16_t>& supp,
                       long long* stab_out = nullptr);

/** The lexicographically least sequence in the orbit of S; idempotent and
 *  constant on orbits. */
ZSequence canonical_form(const SymmetryGroup& sym, const ZSequence& S);

/** Convenience overload building the symmetry group internally. */
ZSequence canonical_form(const ZSequence& S);

/** Apply the symmetry x -> aut(x) + t to a sequence (forward image). */
ZSequence apply_symmetry(const SymmetryGroup& sym, const ZSequence& S,
                         size_t aut_index, uint16_t t);

} // namespace zslab
