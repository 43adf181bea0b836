#include "fqsum/sums.hpp"

#include <stdexcept>

#include "fqsum/cache_io.hpp"
#include "fqsum/constants.hpp"

namespace fqsum {

namespace {

mpq_class inv_ui(unsigned long d) {
    mpq_class v(1, d);
    v.canonicalize();
    return v;
}

// q^(1-N/2)/(q-1) as an enclosure; exact rational when N is even.
Enclosure half_power_factor(const FieldOrder& q, unsigned cutoff, mpfr_prec_t prec) {
    if (cutoff % 2 == 0) {
        mpq_class f(q.q, (q.q - 1) * pow_mpz(q.q, cutoff / 2));
        f.canonicalize();
        return Enclosure::from_mpq(f, prec);
    }
    mpq_class f(1, (q.q - 1) * pow_mpz(q.q, (cutoff - 1) / 2));
    f.canonicalize();
    return mul(sqrt_enc(Enclosure::from_ui(q.q, prec)), Enclosure::from_mpq(f, prec));
}

}  // namespace

Enclosure erdos_sum_irreducibles(const FieldOrder& q, unsigned cutoff, const PrecisionConfig& cfg,
                                 const IrreducibleCountTable* irr) {
    if (cutoff == 0) throw std::invalid_argument("erdos_sum_irreducibles: cutoff must be positive");
    std::optional<IrreducibleCountTable> own;
    if (!irr) {
        own.emplace(IrreducibleCountTable::build(q, cutoff));
        irr = &*own;
    }
    mpfr_prec_t wp = cfg.working_bits();
    // S_{N,q} - sum_{n<=N} 1/n^2, one exact rational.
    mpq_class exact_part(0);
    mpz_class qn(1);
    for (unsigned n = 1; n <= cutoff; ++n) {
        qn *= q.q;
        mpq_class term(irr->at(n), mpz_class(n) * qn);
        term.canonicalize();
        exact_part += term;
        exact_part -= inv_ui(static_cast<unsigned long>(n) * n);
    }
    Enclosure sum = add_mpq(zeta_int(2, PrecisionConfig{wp, 0.0}), exact_part);
    // Tail of the defect series lies in [-5 q^(-N/2)/N^2, 0].
    Enclosure tail_mag = half_power_factor(q, cutoff, wp);  // q^(1-N/2)/(q-1)
    {
        // Rescale by (q-1)/q * 5/N^2 to get exactly 5 q^(-N/2) / N^2.
        mpq_class scale(mpz_class(5) * (q.q - 1), mpz_class(q.q) * cutoff * cutoff);
        scale.canonicalize();
        tail_mag = mul(tail_mag, Enclosure::from_mpq(scale, wp));
    }
    Enclosure r(cfg.precision_bits);
    mpfr_sub(r.lo_mut(), sum.lo(), tail_mag.hi(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), sum.hi(), MPFR_RNDU);
    return r;
}

Enclosure mertens_log_sum(const FieldOrder& q, unsigned n, const PrecisionConfig& cfg,
                          const IrreducibleCountTable* irr) {
    if (n == 0) throw std::invalid_argument("mertens_log_sum: cutoff must be positive");
    std::optional<IrreducibleCountTable> own;
    if (!irr) {
        own.emplace(IrreducibleCountTable::build(q, n));
        irr = &*own;
    }
    mpfr_prec_t wp = cfg.working_bits();
    Enclosure acc(wp);
    mpz_class qi(1);
    for (unsigned i = 1; i <= n; ++i) {
        qi *= q.q;
        mpq_class one_minus(qi - 1, qi);
        one_minus.canonicalize();
        Enclosure lg = log_enc(Enclosure::from_mpq(one_minus, wp));
        add_inplace(acc, mul_mpz(lg, irr->at(i)));
    }
    return acc;
}

Enclosure mertens_product(const FieldOrder& q, unsigned n, const PrecisionConfig& cfg,
                          const IrreducibleCountTable* irr) {
    if (n == 0) throw std::invalid_argument("mertens_product: cutoff must be positive");
    std::optional<IrreducibleCountTable> own;
    if (!irr) {
        own.emplace(IrreducibleCountTable::build(q, n));
        irr = &*own;
    }
    // Exact route while the expanded numerator stays small.
    mpz_class total_exp(0);
    for (unsigned i = 1; i <= n; ++i) total_exp += mpz_class(i) * irr->at(i);
    if (total_exp < 8192 / (mpz_sizeinbase(mpz_class(q.q).get_mpz_t(), 2))) {
        mpz_class num(1), qi(1);
        for (unsigned i = 1; i <= n; ++i) {
            qi *= q.q;
            mpz_class factor;
            mpz_pow_ui(factor.get_mpz_t(), mpz_class(qi - 1).get_mpz_t(),
                       irr->at(i).get_ui());
            num *= factor;
        }
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), mpz_class(q.q).get_mpz_t(), total_exp.get_ui());
        mpq_class v(num, den);
        v.canonicalize();
        return Enclosure::from_mpq(v, cfg.precision_bits);
    }
    Enclosure ls = mertens_log_sum(q, n, cfg, irr);
    Enclosure e = exp_enc(ls);
    Enclosure r(cfg.precision_bits);
    mpfr_set(r.lo_mut(), e.lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), e.hi(), MPFR_RNDU);
    return r;
}

mpq_class mertens_coefficient(unsigned n, unsigned long j) {
    if (n == 0) throw std::invalid_argument("mertens_coefficient: cutoff must be positive");
    mpq_class c(0);
    for (unsigned long d = 1; d <= n; ++d) {
        if ((j + d) % d != 0) continue;  // r | (j+d)/d requires d | j
        unsigned long m = (j + d) / d;
        long inner = 0;
        for (unsigned long r : divisors(m)) {
            if (r * d <= n) inner += moebius(r);
        }
        if (inner == 0) continue;
        mpq_class term(inner, j + d);
        term.canonicalize();
        c += term;
    }
    return c;
}

mpq_class head_sum_exact(const SmoothCountTable& smooth, unsigned k) {
    if (k == 0) return 0;
    const FieldOrder& q = smooth.field();
    mpq_class sum(0);
    mpz_class qn = pow_mpz(q.q, k);
    unsigned long top = std::min<unsigned long>(
        smooth.n_max(), static_cast<unsigned long>(k) * smooth.smoothness());
    for (unsigned long n = k; n <= top; ++n) {
        const mpz_class& psi = smooth.psi(k, static_cast<unsigned>(n));
        if (psi != 0) {
            mpq_class term(psi, qn * n);
            term.canonicalize();
            sum += term;
        }
        qn *= q.q;
    }
    return sum;
}

Enclosure head_sum(const SmoothCountTable& smooth, unsigned k, const PrecisionConfig& cfg) {
    return Enclosure::from_mpq(head_sum_exact(smooth, k), cfg.precision_bits);
}

TailParts tail_estimate(const FieldOrder& q, unsigned k, unsigned cutoff,
                        const PrecisionConfig& cfg, const SmoothCountTable& smooth,
                        const MordellTable& mordell) {
    if (k == 0) throw std::invalid_argument("tail_estimate: k must be positive");
    if (mordell.level() != cutoff + 1 || mordell.k_max() < k) {
        throw std::invalid_argument("tail_estimate: Mordell table does not match (k, N)");
    }
    if (smooth.smoothness() != cutoff || smooth.k_max() < k - 1 ||
        smooth.n_max() < static_cast<unsigned long>(k - 1) * cutoff) {
        throw std::invalid_argument("tail_estimate: smooth table does not match (k, N)");
    }
    mpfr_prec_t wp = cfg.working_bits();
    Enclosure r_sum(wp), ld_sum(wp);
    mpz_class fact(1);
    for (unsigned i = 1; i <= k; ++i) {
        fact *= i;  // i!
        Enclosure acc(wp);
        mpz_class qn(1);
        unsigned long top = static_cast<unsigned long>(k - i) * cutoff;
        for (unsigned long n = 0; n <= top; ++n) {
            const mpz_class& psi = smooth.psi(k - i, static_cast<unsigned>(n));
            if (psi != 0) {
                Enclosure term = mul_mpz(mordell.value(i, n), psi);
                add_inplace(acc, div_mpz(term, fact * qn));
            }
            qn *= q.q;
        }
        add_inplace(r_sum, acc);
        add_inplace(ld_sum, mul_ui(acc, i));  // 1/(i-1)! = i/i!
    }
    TailParts parts{Enclosure(cfg.precision_bits), Enclosure(cfg.precision_bits),
                    Enclosure(cfg.precision_bits)};
    mpfr_set(parts.tail.lo_mut(), r_sum.lo(), MPFR_RNDD);
    mpfr_set(parts.tail.hi_mut(), r_sum.hi(), MPFR_RNDU);

    Enclosure ld = mul(half_power_factor(q, cutoff, wp), ld_sum);
    mpfr_set(parts.lower_defect.lo_mut(), ld.lo(), MPFR_RNDD);
    mpfr_set(parts.lower_defect.hi_mut(), ld.hi(), MPFR_RNDU);

    mpq_class ud(2, mpz_class(cutoff) * pow_mpz(q.q, cutoff));
    ud.canonicalize();
    parts.upper_defect = Enclosure::from_mpq(ud, cfg.precision_bits);
    return parts;
}

SumResult fkq(const FieldOrder& q, unsigned k, unsigned cutoff, const PrecisionConfig& cfg,
              const SmoothCountTable& smooth, const MordellTable& mordell) {
    if (k == 0) throw std::invalid_argument("fkq: k must be positive (the set {1} is excluded)");
    if (smooth.k_max() < k || smooth.n_max() < static_cast<unsigned long>(k) * cutoff) {
        throw std::invalid_argument("fkq: smooth table does not cover (k, kN)");
    }
    SumResult res;
    res.q = q;
    res.k = k;
    res.degree_bound = cutoff;
    res.head = head_sum(smooth, k, cfg);
    TailParts parts = tail_estimate(q, k, cutoff, cfg, smooth, mordell);
    res.tail = parts.tail;
    res.lower_defect = parts.lower_defect;
    res.upper_defect = parts.upper_defect;
    Enclosure value(cfg.precision_bits);
    mpfr_add(value.lo_mut(), res.head.lo(), res.tail.lo(), MPFR_RNDD);
    mpfr_sub(value.lo_mut(), value.lo(), res.lower_defect.hi(), MPFR_RNDD);
    mpfr_add(value.hi_mut(), res.head.hi(), res.tail.hi(), MPFR_RNDU);
    mpfr_add(value.hi_mut(), value.hi(), res.upper_defect.hi(), MPFR_RNDU);
    res.value = std::move(value);
    return res;
}

unsigned default_cutoff(unsigned long q) {
    if (q == 2) return 200;
    if (q == 3 || q == 4) return 150;
    return 110;
}

void SumEngine::prepare(const FieldOrder& q, unsigned k_max, unsigned cutoff) {
    smooth_table(q, k_max, cutoff);
    mordell_table(k_max, cutoff + 1);
}

const IrreducibleCountTable& SumEngine::irreducible_table(const FieldOrder& q,
                                                          unsigned max_degree) {
    auto key = std::make_pair(q.q, max_degree);
    auto it = irr_.find(key);
    if (it != irr_.end()) return *it->second;
    std::shared_ptr<IrreducibleCountTable> built;
    if (cache_dir_) {
        built = std::make_shared<IrreducibleCountTable>(
            load_or_build_irreducible(*cache_dir_, q, max_degree));
    } else {
        built = std::make_shared<IrreducibleCountTable>(
            IrreducibleCountTable::build(q, max_degree));
    }
    return *irr_.emplace(key, std::move(built)).first->second;
}

const SmoothCountTable& SumEngine::smooth_table(const FieldOrder& q, unsigned k_max,
                                                unsigned cutoff) {
    // A larger prepared table serves smaller k_max at the same cutoff.
    for (auto& [key, tab] : smooth_) {
        if (std::get<0>(key) == q.q && std::get<2>(key) == cutoff && std::get<1>(key) >= k_max) {
            return *tab;
        }
    }
    const IrreducibleCountTable& irr = irreducible_table(q, cutoff);
    unsigned long n_max = static_cast<unsigned long>(k_max) * cutoff;
    std::shared_ptr<SmoothCountTable> built;
    if (cache_dir_) {
        built = std::make_shared<SmoothCountTable>(
            load_or_build_smooth(*cache_dir_, q, k_max, cutoff, static_cast<unsigned>(n_max), irr));
    } else {
        built = std::make_shared<SmoothCountTable>(
            SmoothCountTable::build(q, k_max, cutoff, static_cast<unsigned>(n_max), irr));
    }
    auto key = std::make_tuple(q.q, k_max, cutoff);
    return *smooth_.emplace(key, std::move(built)).first->second;
}

const MordellTable& SumEngine::mordell_table(unsigned k_max, unsigned level) {
    for (auto& [key, tab] : mordell_) {
        if (key.second == level && key.first >= k_max) return *tab;
    }
    auto key = std::make_pair(k_max, level);
    auto built = std::make_shared<MordellTable>(
        MordellTable::build(k_max, level, 0, cfg_.precision_bits + 64));
    return *mordell_.emplace(key, std::move(built)).first->second;
}

SumResult SumEngine::fkq_cell(const FieldOrder& q, unsigned k, unsigned cutoff) {
    const SmoothCountTable& smooth = smooth_table(q, k, cutoff);
    const MordellTable& mordell = mordell_table(k, cutoff + 1);
    return fkq(q, k, cutoff, cfg_, smooth, mordell);
}

Enclosure SumEngine::erdos(const FieldOrder& q, unsigned cutoff) {
    return erdos_sum_irreducibles(q, cutoff, cfg_, &irreducible_table(q, cutoff));
}

}  // namespace fqsum
