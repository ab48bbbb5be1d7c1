#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace zslab {

/**
 * Fixed 256-bit-precision real number (MPFR, round-to-nearest).  Enough head
 * room that formula evaluation error stays far below the 1e-9 relative slack
 * used when bounds are compared, while floor/ceil to integers stay exact for
 * every magnitude arising here.
 */
class HpReal {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    HpReal() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
    HpReal(const HpReal& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
    HpReal(HpReal&& o) noexcept { mpfr_init2(v_, kPrecision); mpfr_swap(v_, o.v_); }
    HpReal& operator=(const HpReal& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HpReal& operator=(HpReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HpReal() { mpfr_clear(v_); }

    static HpReal of(long long x);
    static HpReal of(const mpz_class& x);
    /** Parse a decimal literal such as "2.765" exactly into 256-bit precision. */
    static HpReal parse(const std::string& s);

    HpReal operator+(const HpReal& o) const;
    HpReal operator-(const HpReal& o) const;
    HpReal operator*(const HpReal& o) const;
    HpReal operator/(const HpReal& o) const;

    HpReal ln() const;
    HpReal exp() const;
    static HpReal pow(const HpReal& base, const HpReal& exponent);

    mpz_class floor_z() const;
    mpz_class ceil_z() const;

    int cmp(const HpReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const HpReal& o) const { return cmp(o) < 0; }
    bool operator<=(const HpReal& o) const { return cmp(o) <= 0; }
    bool operator>(const HpReal& o) const { return cmp(o) > 0; }
    bool operator>=(const HpReal& o) const { return cmp(o) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /** Scientific decimal form with the given significant digit count. */
    std::string str(int digits = 36) const;

private:
    mpfr_t v_;
};

} // namespace zslab
