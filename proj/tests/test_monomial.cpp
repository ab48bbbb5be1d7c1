#include "doctest.h"

#include <vector>

#include "zslab/error.hpp"
#include "zslab/monomial.hpp"

using namespace zslab;

namespace {

// Direct product-expansion reference: multiply out (1 + x + ... + x^{D-1})^n
// and sum the coefficients of degrees 0..k.
mpz_class brute_dim(long long n, long long D, long long k) {
    std::vector<mpz_class> poly{1};
    for (long long i = 0; i < n; ++i) {
        std::vector<mpz_class> next(poly.size() + D - 1, 0);
        for (size_t s = 0; s < poly.size(); ++s)
            for (long long d = 0; d < D; ++d) next[s + d] += poly[s];
        poly = std::move(next);
    }
    mpz_class total = 0;
    for (size_t s = 0; s < poly.size(); ++s)
        if (static_cast<long long>(s) <= k) total += poly[s];
    return total;
}

HpReal rel_diff(const HpReal& a, const HpReal& b) {
    HpReal d = a - b;
    if (d < HpReal::of(0)) d = HpReal::of(0) - d;
    HpReal mag = b;
    if (mag < HpReal::of(0)) mag = HpReal::of(0) - mag;
    return d / mag;
}

} // namespace

TEST_CASE("exact dimensions at pinned points") {
    CHECK(dim_exact(2, 3, 2) == 6);
    CHECK(dim_exact(2, 3, 1) == 3);
    CHECK(dim_exact(1, 3, 0) == 1);
    CHECK(dim_exact(2, 3, 4) == 9);
    CHECK(dim_exact(3, 3, 3) == 17);
    CHECK(dim_exact(1, 2, 0) == 1);
    CHECK(dim_exact(4, 2, 2) == 11);
    CHECK(dim_exact(2, 5, 4) == 15);
    CHECK(dim_exact(3, 4, 5) == 44);
}

TEST_CASE("degenerate and boundary parameters") {
    CHECK(dim_exact(0, 3, 0) == 1);
    CHECK(dim_exact(0, 3, 5) == 1);
    CHECK(dim_exact(3, 3, -1) == 0);
    CHECK(dim_exact(3, 1, 0) == 1);   // D = 1 leaves only the constant monomial
    CHECK(dim_exact(3, 1, 2) == 1);
    CHECK(dim_exact(2, 3, 100) == 9); // cap at the full box
    CHECK(dim_exact(5, 2, 5) == 32);
    CHECK_THROWS_AS(dim_exact(-1, 3, 0), DomainError);
    CHECK_THROWS_AS(dim_exact(2, 0, 0), DomainError);
}

TEST_CASE("full-box and half-box identities") {
    // complement symmetry: degrees <= k and degrees >= n(D-1)-k partition the box
    for (long long n = 1; n <= 6; ++n)
        for (long long D = 2; D <= 4; ++D) {
            mpz_class box = 1;
            for (long long i = 0; i < n; ++i) box *= static_cast<long>(D);
            long long top = n * (D - 1);
            for (long long k = 0; k <= top; ++k)
                CHECK(dim_exact(n, D, k) + dim_exact(n, D, top - k - 1) == box);
            CHECK(dim_exact(n, D, top) == box);
        }
}

TEST_CASE("the two exact routes agree with brute force") {
    for (long long n = 0; n <= 8; ++n)
        for (long long D = 2; D <= 4; ++D)
            for (long long k = -1; k <= n * (D - 1) + 2; ++k) {
                mpz_class want = brute_dim(n, D, k);
                CHECK(dim_exact_dp(n, D, k) == want);
                CHECK(dim_exact_ie(n, D, k) == want);
            }
}

TEST_CASE("route agreement at larger sizes") {
    for (long long n : {50, 137, 200})
        for (long long D : {2, 3, 7}) {
            long long k = n * (D - 1) / 3;
            CHECK(dim_exact_dp(n, D, k) == dim_exact_ie(n, D, k));
        }
}

TEST_CASE("analytic exponent factor at pinned points") {
    // c = 1 - (m-2)^2 / (2 m^2 ln D), frozen to 36 digits
    struct Row { long long D, m; const char* c; };
    const Row rows[] = {
        {3, 3, "0.949431154076286811465875546347994056"},
        {2, 4, "0.819663119888879574080009414874763483"},
    };
    for (const Row& r : rows) {
        HpReal got = dim_bound_exponent(r.D, r.m);
        CHECK(rel_diff(got, HpReal::parse(r.c)) < HpReal::parse("1e-30"));
    }
    // m = 2 degenerates to exponent 1
    CHECK(rel_diff(dim_bound_exponent(5, 2), HpReal::of(1)) < HpReal::parse("1e-70"));
    CHECK_THROWS_AS(dim_bound_exponent(1, 3), DomainError);
    CHECK_THROWS_AS(dim_bound_exponent(3, 1), DomainError);
}

TEST_CASE("analytic bound values frozen") {
    struct Row { long long n, D, m; const char* v; };
    const Row rows[] = {
        {2, 3, 3, "8.05355385132932797123295588943367875"},
        {1, 2, 4, "1.76499380516919080572978428645810147"},
        {3, 2, 3, "6.77185379912491259235933919839003662"},
        {5, 5, 4, "1672.69196412184450611444533756889502"},
    };
    for (const Row& r : rows) {
        HpReal got = dim_upper_bound(r.n, r.D, r.m);
        CHECK(rel_diff(got, HpReal::parse(r.v)) < HpReal::parse("1e-30"));
    }
}

TEST_CASE("analytic bound dominates the exact dimension") {
    for (long long D : {2, 3, 5})
        for (long long m = 2; m <= 6; ++m)
            for (long long n = 1; n <= 40; ++n) {
                long long k = n * (D - 1) / m;
                HpReal exact = HpReal::of(dim_exact(n, D, k));
                CHECK(exact <= dim_upper_bound(n, D, m));
            }
}

TEST_CASE("row sweep matches pointwise evaluation") {
    for (long long D : {2, 3, 5}) {
        DimSweep sweep(D);
        CHECK(sweep.n() == 0);
        for (long long n = 1; n <= 60; ++n) {
            sweep.advance();
            REQUIRE(sweep.n() == n);
            std::vector<long long> ks{-1, 0, n * (D - 1) / 4, n * (D - 1) / 2,
                                      n * (D - 1), n * (D - 1) + 7};
            std::vector<mpz_class> got = sweep.dims_at(ks);
            for (size_t i = 0; i < ks.size(); ++i)
                CHECK(got[i] == dim_exact(n, D, ks[i]));
        }
    }
}
