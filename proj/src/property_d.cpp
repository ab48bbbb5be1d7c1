#include "zslab/property_d.hpp"

#include "zslab/error.hpp"

namespace zslab {

std::string to_string(PropertyDStatus s) {
    switch (s) {
        case PropertyDStatus::HOLDS: return "HOLDS";
        case PropertyDStatus::FAILS: return "FAILS";
        case PropertyDStatus::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

bool is_kth_power_form(const ZSequence& S, long long k) {
    if (k < 2) throw DomainError("multiplicity-divisibility requires k >= 2");
    for (const auto& [elem, mult] : S.multiplicities()) {
        (void)elem;
        if (mult % (k - 1) != 0) return false;
    }
    return true;
}

PropertyDReport check_property_d(const AbelianGroup& A, const SearchBudget& budget) {
    if (A.trivial() || !A.is_homocyclic())
        throw DomainError("property check requires a homocyclic group (Z_k)^n, k >= 2");
    long long k = A.exponent();

    PropertyDReport rep;
    rep.group = A;

    ExactResult s = exact_s(A, budget);
    rep.nodes_explored = s.nodes_explored;
    if (s.status != SearchStatus::EXACT) {
        rep.status = PropertyDStatus::UNKNOWN;
        return rep;
    }
    rep.s_value = *s.value;

    ExtremalEnumeration ext = enumerate_extremal(A, k, *s.value - 1, budget);
    rep.nodes_explored += ext.nodes_explored;
    rep.extremal_orbits_checked = ext.orbit_count;
    rep.extremal_raw_count = ext.raw_count;

    // The divisibility shape is invariant under translations and
    // automorphisms (they permute elements, preserving the multiset of
    // multiplicities), so orbit representatives decide the property.
    for (const auto& S : ext.orbit_reps) {
        if (!is_kth_power_form(S, k)) {
            rep.status = PropertyDStatus::FAILS;
            rep.counterexample = S;
            return rep;
        }
    }
    if (!ext.complete) {
        rep.status = PropertyDStatus::UNKNOWN;
        return rep;
    }
    rep.status = PropertyDStatus::HOLDS;
    return rep;
}

} // namespace zslab
