#include "zslab/real.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "zslab/error.hpp"

namespace zslab {

HpReal HpReal::of(long long x) {
    HpReal r;
    mpfr_set_sj(r.v_, x, MPFR_RNDN);
    return r;
}

HpReal HpReal::of(const mpz_class& x) {
    HpReal r;
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

HpReal HpReal::parse(const std::string& s) {
    HpReal r;
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.v_))
        throw ParseError("bad real literal: " + s);
    return r;
}

HpReal HpReal::operator+(const HpReal& o) const {
    HpReal r;
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator-(const HpReal& o) const {
    HpReal r;
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator*(const HpReal& o) const {
    HpReal r;
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::operator/(const HpReal& o) const {
    HpReal r;
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::ln() const {
    HpReal r;
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::exp() const {
    HpReal r;
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::pow(const HpReal& base, const HpReal& exponent) {
    HpReal r;
    mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
    return r;
}

mpz_class HpReal::floor_z() const {
    mpfr_t f;
    mpfr_init2(f, kPrecision);
    mpfr_floor(f, v_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDN);
    mpfr_clear(f);
    return z;
}

mpz_class HpReal::ceil_z() const {
    mpfr_t f;
    mpfr_init2(f, kPrecision);
    mpfr_ceil(f, v_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDN);
    mpfr_clear(f);
    return z;
}

std::string HpReal::str(int digits) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v_) < 0)
        return "nan";
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace zslab
