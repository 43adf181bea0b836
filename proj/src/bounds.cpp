#include "fqsum/bounds.hpp"

#include <stdexcept>

#include "fqsum/constants.hpp"

namespace fqsum {

Verdict certify_strictly_less(const Enclosure& a, const Enclosure& b) {
    if (certified_less(a, b)) return Verdict::holds;
    if (certified_leq(b, a)) return Verdict::fails;
    return Verdict::undecided;
}

std::pair<Enclosure, Enclosure> irreducible_sum_bounds(const FieldOrder& q,
                                                       const PrecisionConfig& cfg) {
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    Enclosure upper = zeta_int(2, cfg);
    Enclosure inv_sqrt_q = div(Enclosure::from_long(1, wcfg.precision_bits),
                               sqrt_enc(Enclosure::from_ui(q.q, wcfg.precision_bits)));
    mpq_class ratio(q.q, q.q - 1);
    ratio.canonicalize();
    Enclosure lower = sub(zeta_int(2, wcfg),
                          mul(Enclosure::from_mpq(ratio, wcfg.precision_bits),
                              dilog(inv_sqrt_q, wcfg)));
    Enclosure lo(cfg.precision_bits);
    mpfr_set(lo.lo_mut(), lower.lo(), MPFR_RNDD);
    mpfr_set(lo.hi_mut(), lower.hi(), MPFR_RNDU);
    return {lo, upper};
}

Enclosure fkq_upper_bound(const FieldOrder& q, unsigned k, const PrecisionConfig& cfg) {
    if (k < 2) {
        throw std::invalid_argument(
            "fkq_upper_bound: k must be at least 2 (k = 1 has its own bounds)");
    }
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    Enclosure r(cfg.precision_bits);
    if (k == 2) {
        mpq_class inv_q(1, q.q);
        inv_q.canonicalize();
        Enclosure val = add(zeta_int(3, wcfg),
                            div_ui(dilog(Enclosure::from_mpq(inv_q, wcfg.precision_bits), wcfg), 2));
        mpfr_set(r.lo_mut(), val.lo(), MPFR_RNDD);
        mpfr_set(r.hi_mut(), val.hi(), MPFR_RNDU);
        return r;
    }
    mpq_class ratio(q.q, q.q - 1);
    ratio.canonicalize();
    Enclosure val = add(zeta_int(k + 1, wcfg),
                        mul(log_enc(Enclosure::from_mpq(ratio, wcfg.precision_bits)),
                            zeta_int(k - 1, wcfg)));
    mpfr_set(r.lo_mut(), val.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), val.hi(), MPFR_RNDU);
    return r;
}

Enclosure fkq_lower_bound(const FieldOrder& q, unsigned k, const PrecisionConfig& cfg) {
    if (k < 1) throw std::invalid_argument("fkq_lower_bound: k must be positive");
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    Enclosure ratio = div(sqrt_enc(Enclosure::from_ui(q.q, wcfg.precision_bits)),
                          Enclosure::from_ui(q.q - 1, wcfg.precision_bits));
    Enclosure base = sub(Enclosure::from_long(1, wcfg.precision_bits), ratio);
    Enclosure val = mul(pow_int(base, k), zeta_int(k + 1, wcfg));
    Enclosure r(cfg.precision_bits);
    mpfr_set(r.lo_mut(), val.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), val.hi(), MPFR_RNDU);
    return r;
}

namespace {

// a and b of the threshold proof at a given k >= 3.
std::pair<Enclosure, Enclosure> qk_ab(unsigned k, const PrecisionConfig& wcfg) {
    mpz_class two_pow = pow_mpz(2, k + 1);
    Enclosure a = add_mpq(mul_mpz(zeta_int(k - 1, wcfg), two_pow), mpq_class(1));
    Enclosure b = mul_mpz(zeta_int(k, wcfg), two_pow * (k - 1));
    return {a, b};
}

}  // namespace

Enclosure qk_threshold(unsigned k, const PrecisionConfig& cfg) {
    if (k < 3) throw std::invalid_argument("qk_threshold: needs k >= 3");
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    auto [a, b] = qk_ab(k, wcfg);
    Enclosure b2 = mul(b, b);
    Enclosure inner = add(mul(mul_ui(a, 4), b2), mul(b2, b2));
    Enclosure val = div_ui(add(add(sqrt_enc(inner), mul_ui(a, 2)), b2), 2);
    Enclosure r(cfg.precision_bits);
    mpfr_set(r.lo_mut(), val.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), val.hi(), MPFR_RNDU);
    return r;
}

QkBoundResult qk_bound(unsigned k, const PrecisionConfig& cfg) {
    if (k < 2) throw std::invalid_argument("qk_bound: needs k >= 2");
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    QkBoundResult res;
    res.k = k;
    if (k >= 3) {
        auto [a, b] = qk_ab(k, wcfg);
        res.a = a;
        res.b = b;
    }
    if (k >= 4) {
        auto [a4, b4] = qk_ab(4, wcfg);
        res.eta = div(a4, mul(b4, b4));
    }
    if (k == 2) {
        res.bound = Enclosure::from_long(11, cfg.precision_bits);
        return res;
    }
    if (k == 3) {
        res.bound = Enclosure::from_long(413, cfg.precision_bits);
        return res;
    }
    mpq_class coeff(403, 100);
    mpq_class factor = coeff * mpq_class(k - 1) * (k - 1) * mpq_class(pow_mpz(4, k));
    factor.canonicalize();
    Enclosure z = zeta_int(k, wcfg);
    Enclosure val = mul(Enclosure::from_mpq(factor, wcfg.precision_bits), mul(z, z));
    res.bound = Enclosure(cfg.precision_bits);
    mpfr_set(res.bound.lo_mut(), val.lo(), MPFR_RNDD);
    mpfr_set(res.bound.hi_mut(), val.hi(), MPFR_RNDU);
    return res;
}

UniversalBoundResult universal_bound_check(const FieldOrder& q, unsigned tail_cutoff,
                                           const PrecisionConfig& cfg) {
    if (q.q < 3) {
        throw std::invalid_argument(
            "universal_bound_check: q = 2 is covered by the 1 + e^gamma/2 constant");
    }
    if (tail_cutoff < 2) throw std::invalid_argument("universal_bound_check: cutoff too small");
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    mpfr_prec_t wp = wcfg.precision_bits;

    // (1 - 1/q)^q is exact.
    mpq_class decay(pow_mpz(q.q - 1, q.q), pow_mpz(q.q, q.q));
    decay.canonicalize();
    Enclosure value = add(Enclosure::from_long(1, wp),
                          mul(exp_gamma(wcfg), Enclosure::from_mpq(decay, wp)));

    auto irr = IrreducibleCountTable::build(q, tail_cutoff);
    mpq_class series(0);
    mpz_class qn(q.q);
    for (unsigned n = 2; n <= tail_cutoff; ++n) {
        qn *= q.q;
        mpq_class term(irr.at(n), mpz_class(n) * (n + 1) * qn);
        term.canonicalize();
        series += term;
    }
    value = add_mpq(value, series);
    // Remaining terms are below sum_{n>N} 1/(n^2(n+1)) <= 1/(N(N+1)).
    mpq_class tail(1, static_cast<unsigned long>(tail_cutoff) * (tail_cutoff + 1));
    tail.canonicalize();
    Enclosure padded(cfg.precision_bits);
    mpfr_set(padded.lo_mut(), value.lo(), MPFR_RNDD);
    mpfr_add_q(padded.hi_mut(), value.hi(), tail.get_mpq_t(), MPFR_RNDU);

    UniversalBoundResult res{padded, Verdict::undecided};
    res.verdict = certify_strictly_less(padded, exp_gamma(cfg));
    return res;
}

Enclosure universal_limit_constant(const PrecisionConfig& cfg) {
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    Enclosure gm1 = add_mpq(euler_gamma(wcfg), mpq_class(-1));
    Enclosure val = add_mpq(add(exp_enc(gm1), zeta_int(2, wcfg)), mpq_class(-1, 2));
    Enclosure r(cfg.precision_bits);
    mpfr_set(r.lo_mut(), val.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), val.hi(), MPFR_RNDU);
    return r;
}

Enclosure q2_bound_constant(const PrecisionConfig& cfg) {
    PrecisionConfig wcfg{cfg.working_bits(), cfg.series_tail_tolerance};
    Enclosure val = add_mpq(div_ui(exp_gamma(wcfg), 2), mpq_class(1));
    Enclosure r(cfg.precision_bits);
    mpfr_set(r.lo_mut(), val.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), val.hi(), MPFR_RNDU);
    return r;
}

BanksMartinReport banks_martin_scan(const FieldOrder& q, unsigned k_max, unsigned cutoff,
                                    SumEngine& engine) {
    if (k_max < 2) throw std::invalid_argument("banks_martin_scan: k_max must be at least 2");
    BanksMartinReport report;
    report.q = q;
    report.k_max = k_max;
    report.cutoff = cutoff;
    engine.prepare(q, k_max, cutoff);
    for (unsigned k = 1; k <= k_max; ++k) {
        report.cells.push_back(engine.fkq_cell(q, k, cutoff));
    }
    report.fully_decided = true;
    mpq_class one(1);
    for (unsigned k = 1; k <= k_max; ++k) {
        const Enclosure& cur = report.cells[k - 1].value;
        if (k < k_max) {
            const Enclosure& next = report.cells[k].value;
            Relation rel = Relation::undecided;
            if (certified_less(next, cur)) rel = Relation::greater;
            else if (certified_less(cur, next)) rel = Relation::less;
            else report.fully_decided = false;
            report.step.push_back(rel);
        }
        Relation vs1 = Relation::undecided;
        if (certified_less(one, cur)) vs1 = Relation::greater;
        else if (certified_less(cur, one)) vs1 = Relation::less;
        else report.fully_decided = false;
        report.versus_one.push_back(vs1);
    }
    for (unsigned k = 2; k + 1 <= k_max; ++k) {
        if (report.step[k - 2] == Relation::greater && report.step[k - 1] == Relation::less) {
            report.local_minima.push_back(k);
        }
    }
    return report;
}

}  // namespace fqsum
