// Test-only independent oracles. These deliberately avoid the code paths
// they are used to check: zeta via raw partial sums with integral tail
// bounds, the dilogarithm via its closed form at 1/2, and Mordell values
// via the inclusion-exclusion recurrence instead of the shift recurrence.
#pragma once

#include <gmpxx.h>

#include "fqsum/constants.hpp"
#include "fqsum/enclosure.hpp"
#include "fqsum/exact.hpp"

namespace fqsum::testing {

/// zeta(s) from T explicit terms plus the integral-test bracket
/// [(T+1)^(1-s)/(s-1), T^(1-s)/(s-1)] for the tail.
inline Enclosure zeta_series_oracle(unsigned s, unsigned long terms, mpfr_prec_t prec) {
    Enclosure sum(prec);
    for (unsigned long n = 1; n <= terms; ++n) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), n, s);
        mpq_class term(1, den);
        term.canonicalize();
        add_inplace(sum, Enclosure::from_mpq(term, prec));
    }
    mpq_class tail_hi(1, mpz_class(s - 1) * pow_mpz(terms, s - 1));
    tail_hi.canonicalize();
    mpq_class tail_lo(1, mpz_class(s - 1) * pow_mpz(terms + 1, s - 1));
    tail_lo.canonicalize();
    return add(sum, Enclosure::from_mpq_pair(tail_lo, tail_hi, prec));
}

/// Li2(1/2) = pi^2/12 - ln(2)^2 / 2.
inline Enclosure dilog_half_oracle(mpfr_prec_t prec) {
    PrecisionConfig cfg{prec, 0.0};
    Enclosure pi = const_pi_enc(cfg);
    Enclosure ln2 = log_enc(Enclosure::from_long(2, prec + 32));
    return sub(div_ui(mul(pi, pi), 12), div_ui(mul(ln2, ln2), 2));
}

/// One inclusion-exclusion step of the Mordell recurrence over exact
/// rationals: M(k, N, a) = sum_i (-1)^i C(k,i) M(k-i, N-1, a + i(N-1)) / (N-1)^i.
/// The binomial factor is required; dropping it breaks the identity already
/// at (k, N, a) = (2, 2, 1).
inline mpq_class mordell_recurrence_rhs_exact(unsigned k, unsigned min_term, unsigned long a,
                                              mpq_class (*eval)(unsigned, unsigned,
                                                                unsigned long)) {
    mpq_class rhs(0);
    mpz_class denom(1);
    unsigned long step = min_term - 1;
    for (unsigned i = 0; i <= k; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), k, i);
        mpq_class term = eval(k - i, min_term - 1, a + i * step) * binom;
        term /= denom;
        term.canonicalize();
        if (i % 2 == 0) rhs += term; else rhs -= term;
        denom *= step;
    }
    return rhs;
}

}  // namespace fqsum::testing
