#include "fqsum/mordell.hpp"

#include <stdexcept>

namespace fqsum {

mpq_class mordell_closed_form_exact(unsigned k, unsigned long a) {
    if (a == 0) throw std::invalid_argument("mordell_closed_form_exact: a must be positive");
    mpq_class sum(0);
    mpz_class binom(1);  // C(a-1, i)
    for (unsigned long i = 0; i < a; ++i) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), i + 1, k + 1);
        mpq_class term(binom, den);
        term.canonicalize();
        if (i % 2 == 0) sum += term; else sum -= term;
        // C(a-1, i+1) from C(a-1, i)
        binom *= a - 1 - i;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i + 1);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    return mpq_class(sum * fact);
}

mpq_class mordell_exact(unsigned k, unsigned min_term, unsigned long a) {
    if (min_term == 0) throw std::invalid_argument("mordell_exact: min_term must be positive");
    if (a == 0) throw std::invalid_argument("mordell_exact: a must be positive (a = 0 needs zeta)");
    // row j holds M(j, N, b) for b = 1..need[j]
    std::vector<unsigned long> need(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        need[j] = a + static_cast<unsigned long>(k - j) * (min_term + 1);
    }
    std::vector<mpq_class> prev(need[0] + 1);
    for (unsigned long b = 1; b <= need[0]; ++b) {
        prev[b] = mpq_class(1, b);
        prev[b].canonicalize();
    }
    for (unsigned j = 1; j <= k; ++j) {
        std::vector<mpq_class> cur(need[j] + 1);
        mpq_class run(0);
        for (unsigned long b = 1; b <= need[j]; ++b) {
            run += prev[min_term + b - 1];
            cur[b] = run * j;
            cur[b] /= mpz_class(b);
            cur[b].canonicalize();
        }
        prev = std::move(cur);
    }
    return prev[a];
}

MordellTable MordellTable::build(unsigned k_max, unsigned level, unsigned long extra_shift,
                                 mpfr_prec_t prec) {
    if (level == 0) throw std::invalid_argument("MordellTable: level must be positive");
    MordellTable t;
    t.k_max_ = k_max;
    t.level_ = level;
    t.extra_ = extra_shift;

    auto cap = [&](unsigned k, unsigned lvl) {
        return static_cast<unsigned long>(k_max - k) * lvl + extra_shift + 1;
    };

    std::vector<std::vector<Enclosure>> rows(k_max + 1), prev_rows;
    std::vector<Enclosure> spine(k_max + 1, Enclosure(prec)), prev_spine;

    for (unsigned lvl = 1; lvl <= level; ++lvl) {
        prev_rows = std::move(rows);
        prev_spine = std::move(spine);
        rows.assign(k_max + 1, {});
        spine.assign(k_max + 1, Enclosure(prec));

        // Row 0: M(0, lvl, a) = 1/a.
        rows[0].assign(cap(0, lvl) + 1, Enclosure(prec));
        for (unsigned long a = 1; a <= cap(0, lvl); ++a) {
            Enclosure& dst = rows[0][a];
            mpfr_set_ui(dst.lo_mut(), 1, MPFR_RNDD);
            mpfr_div_ui(dst.lo_mut(), dst.lo(), a, MPFR_RNDD);
            mpfr_set_ui(dst.hi_mut(), 1, MPFR_RNDU);
            mpfr_div_ui(dst.hi_mut(), dst.hi(), a, MPFR_RNDU);
        }
        // Rows 1..k_max by the same-level shift recurrence with prefix sums.
        for (unsigned j = 1; j <= k_max; ++j) {
            rows[j].assign(cap(j, lvl) + 1, Enclosure(prec));
            Enclosure run(prec);
            for (unsigned long a = 1; a <= cap(j, lvl); ++a) {
                add_inplace(run, rows[j - 1][lvl + a - 1]);
                Enclosure& dst = rows[j][a];
                mpfr_mul_ui(dst.lo_mut(), run.lo(), j, MPFR_RNDD);
                mpfr_div_ui(dst.lo_mut(), dst.lo(), a, MPFR_RNDD);
                mpfr_mul_ui(dst.hi_mut(), run.hi(), j, MPFR_RNDU);
                mpfr_div_ui(dst.hi_mut(), dst.hi(), a, MPFR_RNDU);
            }
        }
        // Spine a = 0.
        if (lvl == 1) {
            PrecisionConfig zc{prec, 0.0};
            for (unsigned j = 1; j <= k_max; ++j) {
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(), j);
                spine[j] = mul_mpz(zeta_int(j + 1, zc), fact);
            }
        } else {
            unsigned long step = lvl - 1;
            for (unsigned j = 1; j <= k_max; ++j) {
                Enclosure acc = prev_spine[j];  // i = 0 term
                mpz_class denom(1);
                for (unsigned i = 1; i <= j; ++i) {
                    denom *= step;
                    mpz_class binom;
                    mpz_bin_uiui(binom.get_mpz_t(), j, i);
                    unsigned long shift = static_cast<unsigned long>(i) * step;
                    Enclosure term = div_mpz(mul_mpz(prev_rows[j - i][shift], binom), denom);
                    if (i % 2 == 1) sub_inplace(acc, term); else add_inplace(acc, term);
                }
                spine[j] = std::move(acc);
            }
        }
    }
    t.rows_ = std::move(rows);
    t.spine_ = std::move(spine);
    return t;
}

const Enclosure& MordellTable::value(unsigned k, unsigned long a) const {
    if (k > k_max_) throw std::out_of_range("MordellTable::value: k out of range");
    if (a == 0) {
        if (k == 0) throw std::domain_error("Mordell sum diverges at (k, a) = (0, 0)");
        return spine_[k];
    }
    if (a >= rows_[k].size()) throw std::out_of_range("MordellTable::value: shift out of range");
    return rows_[k][a];
}

const MordellTable& MordellCache::table_for(unsigned k_max, unsigned level,
                                            unsigned long min_extra, mpfr_prec_t prec) {
    auto key = std::make_pair(k_max, level);
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second.row_cap(k_max) > min_extra) return it->second;
    MordellTable t = MordellTable::build(k_max, level, min_extra, prec);
    auto [pos, inserted] = tables_.insert_or_assign(key, std::move(t));
    return pos->second;
}

Enclosure mordell(const MordellKey& key, const PrecisionConfig& cfg, MordellCache& cache) {
    if (key.min_term == 0) throw std::invalid_argument("mordell: min_term must be positive");
    if (key.k == 0) {
        if (key.shift == 0) throw std::domain_error("Mordell sum diverges at (k, a) = (0, 0)");
        mpq_class v(1, key.shift);
        v.canonicalize();
        return Enclosure::from_mpq(v, cfg.precision_bits);
    }
    const MordellTable& t =
        cache.table_for(key.k, key.min_term, key.shift, cfg.precision_bits + 64);
    Enclosure r(cfg.precision_bits);
    mpfr_set(r.lo_mut(), t.value(key.k, key.shift).lo(), MPFR_RNDD);
    mpfr_set(r.hi_mut(), t.value(key.k, key.shift).hi(), MPFR_RNDU);
    return r;
}

}  // namespace fqsum
