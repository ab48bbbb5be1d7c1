#pragma once

#include <vector>

#include <gmpxx.h>

#include "zslab/real.hpp"

namespace zslab {

/**
 * dim(n, D, k): the number of monomials in n variables with every exponent
 * in [0, D) and total degree at most k.  Computed two independent ways and
 * cross-checked on every call:
 *   - a column DP with the width-D window recurrence
 *     f_i(s) = F_{i-1}(s) - F_{i-1}(s - D), F = running prefix sums,
 *   - inclusion-exclusion over the exponent cap,
 *     sum_j (-1)^j C(n, j) C(k - jD + n, n).
 */
mpz_class dim_exact(long long n, long long D, long long k);
mpz_class dim_exact_dp(long long n, long long D, long long k);
mpz_class dim_exact_ie(long long n, long long D, long long k);

/** The exponent factor c = 1 - (m-2)^2 / (2 m^2 ln D) of the analytic
 *  dimension bound; requires D >= 2, m >= 2. */
HpReal dim_bound_exponent(long long D, long long m);

/**
 * Analytic upper bound D^(c n) on dim(n, D, floor(n (D-1) / m)).  For m = 2
 * the exponent factor degenerates to 1 and the exact integer D^n is returned.
 */
HpReal dim_upper_bound(long long n, long long D, long long m);

/**
 * Row-by-row sweep over n for a fixed D: holds the degree distribution
 * f_n(s) = #monomials of total degree exactly s, advancing n by one per step.
 * dims_at reports dim(n, D, k) for each threshold in one pass over the row.
 */
class DimSweep {
public:
    explicit DimSweep(long long D);

    long long n() const { return n_; }
    long long D() const { return D_; }
    void advance();

    /** dim(n, D, k) for each k (any order, values clamped to [0, n(D-1)]). */
    std::vector<mpz_class> dims_at(const std::vector<long long>& ks) const;

    const std::vector<mpz_class>& row() const { return row_; }

private:
    long long D_;
    long long n_ = 0;
    std::vector<mpz_class> row_; // index s = total degree
};

} // namespace zslab
