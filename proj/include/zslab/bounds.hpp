#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zslab/group.hpp"
#include "zslab/real.hpp"

namespace zslab {

enum class BoundKind { LOWER, UPPER, EXACT };

std::string to_string(BoundKind k);

/** An undischarged hypothesis: the extremal multiplicity-divisibility
 *  property for (Z_p)^n.  Rendered as "PROPERTY_D(p,n)". */
struct Assumption {
    long long p = 0;
    long long n = 0;
    std::string render() const;
    bool operator==(const Assumption& o) const { return p == o.p && n == o.n; }
    bool operator<(const Assumption& o) const {
        return p != o.p ? p < o.p : n < o.n;
    }
};

/** One applied rule in a bound derivation: a stable rule id, the formula it
 *  evaluates, the instantiated inputs, and the resulting value. */
struct ProvenanceStep {
    std::string id;
    std::string statement;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string value;
};

/**
 * A certified interval endpoint.  value_real carries the full-precision
 * formula value; value_int is the integer certificate (floor for uppers,
 * ceil for lowers, the value itself for exacts - legitimate because the
 * bounded quantity is an integer).
 */
struct BoundResult {
    BoundKind kind = BoundKind::UPPER;
    HpReal value_real;
    mpz_class value_int;
    std::vector<Assumption> conditional_on;
    std::vector<ProvenanceStep> provenance;
};

/**
 * Tracks for which (k, n) the extremal multiplicity-divisibility property
 * of (Z_k)^n is available: established facts (k = 2 any n, k = 3 any n,
 * n = 1 any k), runtime-verified instances, or a blanket assumption flag.
 */
class PropDRegistry {
public:
    static bool theorem_holds(long long k, long long n) {
        return k == 2 || k == 3 || n == 1;
    }
    void add_verified(long long k, long long n) { verified_.insert({k, n}); }
    void set_assume_all(bool v) { assume_all_ = v; }
    bool assuming() const { return assume_all_; }
    bool holds(long long k, long long n) const {
        return assume_all_ || theorem_holds(k, n) || verified_.count({k, n}) > 0;
    }

private:
    std::set<std::pair<long long, long long>> verified_;
    bool assume_all_ = false;
};

/** s(Z_{n1} x Z_{n2}) = 2 n1 + 2 n2 - 3, exact; requires n1 | n2 (n1 = 1
 *  gives the cyclic case 2 n2 - 1). */
BoundResult rank2_exact(long long n1, long long n2);

/** The homocyclic sandwich (k-1) 2^n + 1 <= s((Z_k)^n) <= (k-1) k^n + 1. */
std::pair<BoundResult, BoundResult> harborth_bounds(long long k, long long n);

/** s((Z_{2^a})^n) = (2^a - 1) 2^n + 1, exact (a >= 0). */
BoundResult har2_exact(long long a, long long n);

/** s((Z_p)^n) <= (p-1) p^((1-eps)n + 1) + 1 with
 *  eps = (p-2)^2 / (2 p^2 ln p), for odd primes p.  Conditional on
 *  PROPERTY_D(p, n) unless the registry discharges it. */
BoundResult upper_egz_prime(long long p, long long n,
                            const PropDRegistry& reg = {});

/** Quotient step s(G) <= exp(G/H) (s(H) - 1) + s(G/H); inputs must be
 *  upper or exact bounds (KindError on lower). */
BoundResult exp_upper_step(long long exp_quotient, const BoundResult& s_subgroup,
                           const BoundResult& s_quotient);

/** Iterated quotient steps for (Z_{p^r})^n, p odd: base (Z_p)^n bound
 *  (exact 2p - 1 when n = 1, analytic prime bound otherwise), then
 *  U(p^{j+1}) = p (U(p^j) - 1) + U(p).  Reports the effective density
 *  (U (p-1) / (p^r - 1))^(1/n) as a provenance step. */
BoundResult ppower_bound(long long p, int r, long long n,
                         const PropDRegistry& reg = {});

/**
 * Combination over the invariant factors n_1 | ... | n_r:
 *   c_i = max over primes p | n_r of ceil((UB(p, i) - 1) / (p - 1)), c_0 = 0,
 *   s(G) <= sum_i (c_{r+1-i} - c_{r-i}) n_i - c_r + 1,
 * where UB(p, i) is an upper or exact bound on s((Z_p)^i) supplied in the
 * map (MissingBound when absent, KindError on lower kind).
 */
BoundResult egzupper_combine(
    const std::vector<long long>& invariant_factors,
    const std::map<std::pair<long long, int>, BoundResult>& prime_upper);

/** How the per-prime inputs of combined bounds are produced. */
enum class BasePolicy {
    BEST_KNOWN,   // exact values where available (ranks 1-2, 2-power groups)
    FORMULA_ONLY, // closed formulas throughout
};

/** The default prime-power input UB(p, i) under a policy. */
BoundResult default_prime_base(long long p, int i, BasePolicy policy,
                               const PropDRegistry& reg = {});

/** egzupper_combine fed by default_prime_base over all needed (p, i). */
BoundResult egzupper_default(const AbelianGroup& A, BasePolicy policy,
                             const PropDRegistry& reg = {});

/**
 * s((Z_{m k})^n) <= k (s((Z_m)^n) - 1) + s((Z_k)^n) for m a power of two
 * (m = 1 allowed) and odd k >= 3, with s((Z_m)^n) exact and the quotient
 * bound from egzupper under the policy.
 */
BoundResult composite_bound(long long m, long long k, long long n,
                            BasePolicy policy = BasePolicy::BEST_KNOWN,
                            const PropDRegistry& reg = {});

/** s((Z_3)^n) <= 2 * 2.765^n, unconditional. */
BoundResult maincor2_bound(long long n);

/** Everything the formula engine can say about s(A). */
struct BestBounds {
    BoundResult lower;
    BoundResult upper;                          // best unconditional upper
    std::optional<BoundResult> conditional_upper; // only when strictly better
    std::optional<BoundResult> exact;
};

BestBounds best_bounds(const AbelianGroup& A, const PropDRegistry& reg = {});

/** The individual candidates feeding best_bounds, for auditing. */
std::vector<BoundResult> all_upper_candidates(const AbelianGroup& A,
                                              const PropDRegistry& reg = {});
std::vector<BoundResult> all_lower_candidates(const AbelianGroup& A);

} // namespace zslab
