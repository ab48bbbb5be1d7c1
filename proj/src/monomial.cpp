#include "zslab/monomial.hpp"

#include <algorithm>

#include "zslab/error.hpp"

namespace zslab {
namespace {

void check_dims(long long n, long long D) {
    if (n < 0) throw DomainError("variable count must be >= 0");
    if (D < 1) throw DomainError("exponent cap must be >= 1");
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

mpz_class dim_exact_dp(long long n, long long D, long long k) {
    check_dims(n, D);
    if (k < 0) return 0;
    long long smax = std::min(k, n * (D - 1));
    std::vector<mpz_class> f(static_cast<size_t>(smax) + 1);
    f[0] = 1;
    long long filled = 0; // degrees above `filled` are zero so far
    for (long long i = 1; i <= n; ++i) {
        long long new_filled = std::min(smax, filled + (D - 1));
        // Prefix sums in place, then window differences from the top down.
        std::vector<mpz_class> pref(static_cast<size_t>(new_filled) + 2);
        pref[0] = 0;
        for (long long s = 0; s <= new_filled; ++s)
            pref[static_cast<size_t>(s) + 1] =
                pref[static_cast<size_t>(s)] + (s <= filled ? f[static_cast<size_t>(s)] : mpz_class(0));
        for (long long s = 0; s <= new_filled; ++s) {
            long long lo = std::max(0LL, s - (D - 1));
            f[static_cast<size_t>(s)] =
                pref[static_cast<size_t>(s) + 1] - pref[static_cast<size_t>(lo)];
        }
        filled = new_filled;
    }
    mpz_class total = 0;
    for (long long s = 0; s <= smax; ++s) total += f[static_cast<size_t>(s)];
    return total;
}

mpz_class dim_exact_ie(long long n, long long D, long long k) {
    check_dims(n, D);
    if (k < 0) return 0;
    long long kk = std::min(k, n * (D - 1));
    mpz_class total = 0;
    for (long long j = 0; j <= n && j * D <= kk; ++j) {
        mpz_class term = binom(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                         binom(static_cast<unsigned long>(kk - j * D + n), static_cast<unsigned long>(n));
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

mpz_class dim_exact(long long n, long long D, long long k) {
    mpz_class a = dim_exact_dp(n, D, k);
    mpz_class b = dim_exact_ie(n, D, k);
    if (a != b) throw std::logic_error("dimension cross-check failed");
    return a;
}

HpReal dim_bound_exponent(long long D, long long m) {
    if (D < 2) throw DomainError("exponent cap must be >= 2");
    if (m < 2) throw DomainError("threshold divisor must be >= 2");
    HpReal num = HpReal::of((m - 2) * (m - 2));
    HpReal den = HpReal::of(2 * m * m) * HpReal::of(D).ln();
    return HpReal::of(1) - num / den;
}

HpReal dim_upper_bound(long long n, long long D, long long m) {
    if (n < 1) throw DomainError("variable count must be >= 1");
    if (m == 2) {
        mpz_class full;
        mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(D),
                      static_cast<unsigned long>(n));
        return HpReal::of(full);
    }
    HpReal c = dim_bound_exponent(D, m);
    return (c * HpReal::of(n) * HpReal::of(D).ln()).exp();
}

DimSweep::DimSweep(long long D) : D_(D) {
    if (D < 2) throw DomainError("exponent cap must be >= 2");
    row_ = {mpz_class(1)};
}

void DimSweep::advance() {
    ++n_;
    long long old_max = static_cast<long long>(row_.size()) - 1;
    long long new_max = old_max + (D_ - 1);
    std::vector<mpz_class> pref(static_cast<size_t>(old_max) + 2);
    pref[0] = 0;
    for (long long s = 0; s <= old_max; ++s)
        pref[static_cast<size_t>(s) + 1] = pref[static_cast<size_t>(s)] + row_[static_cast<size_t>(s)];
    std::vector<mpz_class> next(static_cast<size_t>(new_max) + 1);
    for (long long s = 0; s <= new_max; ++s) {
        long long hi = std::min(s, old_max);
        long long lo = std::max(0LL, s - (D_ - 1));
        next[static_cast<size_t>(s)] =
            pref[static_cast<size_t>(hi) + 1] - pref[static_cast<size_t>(lo)];
    }
    row_ = std::move(next);
}

std::vector<mpz_class> DimSweep::dims_at(const std::vector<long long>& ks) const {
    long long smax = static_cast<long long>(row_.size()) - 1;
    std::vector<size_t> order(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return ks[a] < ks[b]; });
    std::vector<mpz_class> out(ks.size());
    mpz_class acc = 0;
    long long s = 0;
    for (size_t oi : order) {
        if (ks[oi] < 0) {
            out[oi] = 0;
            continue;
        }
        long long k = std::min(ks[oi], smax);
        while (s <= k) {
            acc += row_[static_cast<size_t>(s)];
            ++s;
        }
        out[oi] = acc;
    }
    return out;
}

} // namespace zslab
