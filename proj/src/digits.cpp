#include "fqsum/digits.hpp"

#include <gmpxx.h>

namespace fqsum {

namespace {

// floor(endpoint * 10^d) computed with rounding that can only lose
// agreement, never fabricate it: the lo endpoint rounds down, hi rounds up.
mpz_class floor_scaled(mpfr_srcptr v, const mpz_class& pow10, mpfr_prec_t prec, mpfr_rnd_t dir) {
    mpfr_t t;
    mpfr_init2(t, prec + 64);
    mpfr_mul_z(t, v, pow10.get_mpz_t(), dir);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDD);
    mpfr_clear(t);
    return z;
}

std::string render(const mpz_class& scaled, unsigned fractional_digits) {
    std::string s = scaled.get_str();
    if (fractional_digits == 0) return s;
    if (s.size() <= fractional_digits) s.insert(0, fractional_digits + 1 - s.size(), '0');
    s.insert(s.size() - fractional_digits, ".");
    return s;
}

}  // namespace

std::optional<std::string> certified_truncation(const Enclosure& e, unsigned fractional_digits) {
    if (mpfr_sgn(e.lo()) < 0) return std::nullopt;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, fractional_digits);
    mpz_class zlo = floor_scaled(e.lo(), pow10, e.precision(), MPFR_RNDD);
    mpz_class zhi = floor_scaled(e.hi(), pow10, e.precision(), MPFR_RNDU);
    if (zlo != zhi) return std::nullopt;
    return render(zlo, fractional_digits);
}

unsigned max_certified_fractional_digits(const Enclosure& e, unsigned cap) {
    if (mpfr_sgn(e.lo()) < 0) return 0;
    // Width ~ 10^-w certifies about w digits; search downward from there.
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, e.hi(), e.lo(), MPFR_RNDU);
    unsigned start = cap;
    if (!mpfr_zero_p(w)) {
        long exp2 = mpfr_get_exp(w);
        // -log10(width) <= -exp2 * log10(2) + 1
        double est = -static_cast<double>(exp2) * 0.30103 + 2.0;
        if (est < 0) est = 0;
        if (est < static_cast<double>(cap)) start = static_cast<unsigned>(est);
    }
    mpfr_clear(w);
    for (unsigned d = start;; --d) {
        if (certified_truncation(e, d)) return d;
        if (d == 0) break;
    }
    return 0;
}

namespace {

std::string directed_decimal(mpfr_srcptr v, unsigned digits, mpfr_rnd_t dir) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*e", static_cast<int>(digits ? digits - 1 : 0), dir, v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

std::string decimal_lower(const Enclosure& e, unsigned significant_digits) {
    return directed_decimal(e.lo(), significant_digits, MPFR_RNDD);
}

std::string decimal_upper(const Enclosure& e, unsigned significant_digits) {
    return directed_decimal(e.hi(), significant_digits, MPFR_RNDU);
}

}  // namespace fqsum
