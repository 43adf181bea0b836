#include "fqsum/constants.hpp"

#include <stdexcept>

namespace fqsum {

namespace {

// 120 decimal digits, truncated. The true constant lies in
// [literal, literal + 10^-120].
const char* kGammaDigits =
    "0."
    "577215664901532860606512090082402431042159335939923598805767"
    "234884867726777664670936947063291746749514631447249807082480";

Enclosure round_into(const Enclosure& x, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set(r.lo_mut(), x.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), x.hi(), MPFR_RNDU);
    return r;
}

}  // namespace

Enclosure euler_gamma(const PrecisionConfig& cfg) {
    Enclosure wide = Enclosure::from_truncated_decimal(kGammaDigits, cfg.working_bits());
    return round_into(wide, cfg.precision_bits);
}

Enclosure exp_gamma(const PrecisionConfig& cfg) {
    PrecisionConfig inner{cfg.working_bits(), 0.0};
    return round_into(exp_enc(euler_gamma(inner)), cfg.precision_bits);
}

Enclosure zeta_int(unsigned s, const PrecisionConfig& cfg) {
    if (s < 2) throw std::invalid_argument("zeta_int: s must be at least 2");
    Enclosure r(cfg.working_bits());
    mpfr_zeta_ui(r.lo_mut(), s, MPFR_RNDD);
    mpfr_zeta_ui(r.hi_mut(), s, MPFR_RNDU);
    return round_into(r, cfg.precision_bits);
}

Enclosure const_pi_enc(const PrecisionConfig& cfg) {
    Enclosure r(cfg.working_bits());
    mpfr_const_pi(r.lo_mut(), MPFR_RNDD);
    mpfr_const_pi(r.hi_mut(), MPFR_RNDU);
    return round_into(r, cfg.precision_bits);
}

Enclosure dilog(const Enclosure& x, const PrecisionConfig& cfg) {
    if (mpfr_sgn(x.lo()) < 0) throw std::domain_error("dilog: argument below 0");
    if (mpfr_cmp_ui(x.hi(), 1) >= 0) throw std::domain_error("dilog: argument must be below 1");
    mpfr_prec_t wp = cfg.working_bits();
    if (mpfr_zero_p(x.hi())) return Enclosure(cfg.precision_bits);

    // Stop once x_hi^(T+1)/((T+1)^2 (1-x_hi)) drops below the tolerance.
    Enclosure tol(wp);
    if (cfg.series_tail_tolerance > 0) {
        mpfr_set_d(tol.hi_mut(), cfg.series_tail_tolerance, MPFR_RNDD);
    } else {
        mpfr_set_ui_2exp(tol.hi_mut(), 1, -(cfg.precision_bits + 16), MPFR_RNDD);
    }

    Enclosure xw = round_into(x, wp);
    Enclosure sum(wp);
    Enclosure xpow = Enclosure::from_long(1, wp);
    Enclosure one_minus_x = sub(Enclosure::from_long(1, wp), xw);

    const unsigned long max_terms = 40'000'000;
    unsigned long k = 1;
    for (; k <= max_terms; ++k) {
        xpow = mul(xpow, xw);
        Enclosure term = div_ui(xpow, k * k);
        add_inplace(sum, term);
        // Geometric tail from the next power on: x^(k+1)/((k+1)^2 (1-x)).
        mpfr_t probe;
        mpfr_init2(probe, 64);
        mpfr_mul(probe, xpow.hi(), x.hi(), MPFR_RNDU);
        mpfr_div(probe, probe, one_minus_x.lo(), MPFR_RNDU);
        mpfr_div_ui(probe, probe, (k + 1) * (k + 1), MPFR_RNDU);
        bool done = mpfr_cmp(probe, tol.hi()) <= 0;
        mpfr_clear(probe);
        if (done) break;
    }
    if (k > max_terms) throw std::runtime_error("dilog: series did not reach the tail tolerance");

    Enclosure tail(wp);
    mpfr_mul(tail.hi_mut(), xpow.hi(), xw.hi(), MPFR_RNDU);
    mpfr_div(tail.hi_mut(), tail.hi(), one_minus_x.lo(), MPFR_RNDU);
    mpfr_div_ui(tail.hi_mut(), tail.hi(), (k + 1) * (k + 1), MPFR_RNDU);
    add_inplace(sum, tail);
    return round_into(sum, cfg.precision_bits);
}

}  // namespace fqsum
