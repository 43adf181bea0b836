#include "fqsum/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace fqsum {

Enclosure::Enclosure(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(Enclosure& a, Enclosure& b) noexcept {
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
}

Enclosure Enclosure::from_long(long v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_ui(unsigned long v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_ui(r.lo_, v, MPFR_RNDD);
    mpfr_set_ui(r.hi_, v, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_mpq_pair(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec) {
    if (a > b) throw std::invalid_argument("from_mpq_pair: a > b");
    Enclosure r(prec);
    mpfr_set_q(r.lo_, a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, b.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_truncated_decimal(const std::string& literal, mpfr_prec_t prec) {
    auto dot = literal.find('.');
    size_t frac_digits = (dot == std::string::npos) ? 0 : literal.size() - dot - 1;
    mpq_class lo = [&] {
        std::string digits = literal;
        if (dot != std::string::npos) digits.erase(dot, 1);
        mpz_class num(digits, 10);
        mpz_class den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
        mpq_class v(num, den);
        v.canonicalize();
        return v;
    }();
    mpq_class ulp(1);
    {
        mpz_class den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
        ulp = mpq_class(1, den);
        ulp.canonicalize();
    }
    return from_mpq_pair(lo, lo + ulp, prec);
}

bool Enclosure::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enclosure::is_strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::is_strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Enclosure::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& other) const {
    return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(hi_, other.hi_) >= 0;
}

bool Enclosure::intersects(const Enclosure& other) const {
    return !(mpfr_cmp(hi_, other.lo_) < 0 || mpfr_cmp(other.hi_, lo_) < 0);
}

double Enclosure::width_upper() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string Enclosure::str(size_t digits) const {
    char* slo = nullptr;
    char* shi = nullptr;
    mpfr_asprintf(&slo, "%.*Rg", static_cast<int>(digits), lo_);
    mpfr_asprintf(&shi, "%.*Rg", static_cast<int>(digits), hi_);
    std::string out = std::string("[") + slo + ", " + shi + "]";
    mpfr_free_str(slo);
    mpfr_free_str(shi);
    return out;
}

namespace {

mpfr_prec_t result_prec(const Enclosure& a, const Enclosure& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

Enclosure add(const Enclosure& a, const Enclosure& b) {
    Enclosure r(result_prec(a, b));
    mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Enclosure sub(const Enclosure& a, const Enclosure& b) {
    Enclosure r(result_prec(a, b));
    mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

Enclosure neg(const Enclosure& a) {
    Enclosure r(a.precision());
    mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
    mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
    return r;
}

Enclosure mul(const Enclosure& a, const Enclosure& b) {
    Enclosure r(result_prec(a, b));
    if (mpfr_sgn(a.lo()) >= 0 && mpfr_sgn(b.lo()) >= 0) {
        mpfr_mul(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
        mpfr_mul(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
        return r;
    }
    // General case: extremes over the four endpoint products.
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.precision());
    mpfr_init2(best_lo, r.precision());
    mpfr_init2(best_hi, r.precision());
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(r.lo_mut(), best_lo, MPFR_RNDD);
    mpfr_set(r.hi_mut(), best_hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

Enclosure div(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero()) throw std::domain_error("enclosure division by interval containing zero");
    Enclosure r(result_prec(a, b));
    if (mpfr_sgn(b.lo()) > 0 && mpfr_sgn(a.lo()) >= 0) {
        mpfr_div(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
        mpfr_div(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
        return r;
    }
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.precision());
    mpfr_init2(best_lo, r.precision());
    mpfr_init2(best_hi, r.precision());
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(r.lo_mut(), best_lo, MPFR_RNDD);
    mpfr_set(r.hi_mut(), best_hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return r;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return add(a, b); }
Enclosure operator-(const Enclosure& a, const Enclosure& b) { return sub(a, b); }
Enclosure operator*(const Enclosure& a, const Enclosure& b) { return mul(a, b); }
Enclosure operator/(const Enclosure& a, const Enclosure& b) { return div(a, b); }

void add_inplace(Enclosure& acc, const Enclosure& x) {
    mpfr_add(acc.lo_mut(), acc.lo(), x.lo(), MPFR_RNDD);
    mpfr_add(acc.hi_mut(), acc.hi(), x.hi(), MPFR_RNDU);
}

void sub_inplace(Enclosure& acc, const Enclosure& x) {
    mpfr_sub(acc.lo_mut(), acc.lo(), x.hi(), MPFR_RNDD);
    mpfr_sub(acc.hi_mut(), acc.hi(), x.lo(), MPFR_RNDU);
}

Enclosure mul_ui(const Enclosure& a, unsigned long v) {
    Enclosure r(a.precision());
    mpfr_mul_ui(r.lo_mut(), a.lo(), v, MPFR_RNDD);
    mpfr_mul_ui(r.hi_mut(), a.hi(), v, MPFR_RNDU);
    return r;
}

Enclosure div_ui(const Enclosure& a, unsigned long v) {
    if (v == 0) throw std::domain_error("enclosure division by zero");
    Enclosure r(a.precision());
    mpfr_div_ui(r.lo_mut(), a.lo(), v, MPFR_RNDD);
    mpfr_div_ui(r.hi_mut(), a.hi(), v, MPFR_RNDU);
    return r;
}

Enclosure mul_mpz(const Enclosure& a, const mpz_class& v) {
    Enclosure r(a.precision());
    if (sgn(v) >= 0) {
        mpfr_mul_z(r.lo_mut(), a.lo(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_mut(), a.hi(), v.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_mut(), a.hi(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_mut(), a.lo(), v.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

Enclosure div_mpz(const Enclosure& a, const mpz_class& v) {
    if (v == 0) throw std::domain_error("enclosure division by zero");
    Enclosure r(a.precision());
    if (sgn(v) > 0) {
        mpfr_div_z(r.lo_mut(), a.lo(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_mut(), a.hi(), v.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_div_z(r.lo_mut(), a.hi(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_mut(), a.lo(), v.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

Enclosure add_mpq(const Enclosure& a, const mpq_class& v) {
    Enclosure r(a.precision());
    mpfr_add_q(r.lo_mut(), a.lo(), v.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(r.hi_mut(), a.hi(), v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enclosure exp_enc(const Enclosure& a) {
    Enclosure r(a.precision());
    mpfr_exp(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_exp(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Enclosure log_enc(const Enclosure& a) {
    if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("enclosure log of non-positive interval");
    Enclosure r(a.precision());
    mpfr_log(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_log(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Enclosure sqrt_enc(const Enclosure& a) {
    if (mpfr_sgn(a.lo()) < 0) throw std::domain_error("enclosure sqrt of negative interval");
    Enclosure r(a.precision());
    mpfr_sqrt(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

Enclosure pow_int(const Enclosure& a, long e) {
    if (e < 0) {
        Enclosure one = Enclosure::from_long(1, a.precision());
        return div(one, pow_int(a, -e));
    }
    Enclosure acc = Enclosure::from_long(1, a.precision());
    Enclosure base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return acc;
}

bool certified_less(const Enclosure& a, const Enclosure& b) { return mpfr_cmp(a.hi(), b.lo()) < 0; }
bool certified_less(const Enclosure& a, const mpq_class& b) { return mpfr_cmp_q(a.hi(), b.get_mpq_t()) < 0; }
bool certified_less(const mpq_class& a, const Enclosure& b) { return mpfr_cmp_q(b.lo(), a.get_mpq_t()) > 0; }
bool certified_leq(const Enclosure& a, const Enclosure& b) { return mpfr_cmp(a.hi(), b.lo()) <= 0; }
bool certified_leq(const Enclosure& a, const mpq_class& b) { return mpfr_cmp_q(a.hi(), b.get_mpq_t()) <= 0; }
bool certified_leq(const mpq_class& a, const Enclosure& b) { return mpfr_cmp_q(b.lo(), a.get_mpq_t()) >= 0; }

}  // namespace fqsum
