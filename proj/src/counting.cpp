#include "fqsum/counting.hpp"

#include <stdexcept>

namespace fqsum {

mpz_class irreducible_count(const FieldOrder& q, unsigned n) {
    if (n == 0) throw std::invalid_argument("irreducible_count: degree must be positive");
    mpz_class sum(0);
    for (unsigned long d : divisors(n)) {
        int mu = moebius(n / d);
        if (mu == 0) continue;
        mpz_class term = pow_mpz(q.q, d);
        if (mu > 0) sum += term; else sum -= term;
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
        throw std::logic_error("irreducible_count: Moebius sum not divisible by n");
    }
    mpz_class r;
    mpz_divexact_ui(r.get_mpz_t(), sum.get_mpz_t(), n);
    return r;
}

std::pair<mpq_class, mpq_class> irreducible_count_bounds(const FieldOrder& q, unsigned n) {
    mpq_class upper(pow_mpz(q.q, n), mpz_class(n));
    upper.canonicalize();
    mpq_class defect(pow_mpz(q.q, (n + 1) / 2) * q.q, mpz_class(n) * (q.q - 1));
    defect.canonicalize();
    return {upper - defect, upper};
}

IrreducibleCountTable IrreducibleCountTable::build(const FieldOrder& q, unsigned max_degree) {
    std::vector<mpz_class> counts;
    counts.reserve(max_degree);
    for (unsigned n = 1; n <= max_degree; ++n) counts.push_back(irreducible_count(q, n));
    return IrreducibleCountTable(q, std::move(counts));
}

IrreducibleCountTable IrreducibleCountTable::from_entries(const FieldOrder& q,
                                                          std::vector<mpz_class> counts) {
    IrreducibleCountTable t(q, std::move(counts));
    if (t.max_degree() == 0 || t.at(1) != q.q) {
        throw std::runtime_error("irreducible table failed validation: counts[1] != q");
    }
    unsigned probe = std::min(t.max_degree(), 12u);
    unsigned bottom = probe > 3 ? probe - 3 : 1;
    for (unsigned n = bottom; n <= probe; ++n) {
        if (!t.necklace_identity_holds(n)) {
            throw std::runtime_error("irreducible table failed the necklace identity spot check");
        }
    }
    return t;
}

const mpz_class& IrreducibleCountTable::at(unsigned n) const {
    if (n == 0 || n > counts_.size()) throw std::out_of_range("IrreducibleCountTable::at");
    return counts_[n - 1];
}

bool IrreducibleCountTable::necklace_identity_holds(unsigned n) const {
    mpz_class sum(0);
    for (unsigned long d : divisors(n)) sum += mpz_class(d) * at(static_cast<unsigned>(d));
    return sum == pow_mpz(q_.q, n);
}

SmoothCountTable SmoothCountTable::build(const FieldOrder& q, unsigned k_max, unsigned smoothness,
                                         unsigned n_max, const IrreducibleCountTable& irr) {
    if (irr.max_degree() < smoothness) {
        throw std::invalid_argument("SmoothCountTable: irreducible table shorter than smoothness");
    }
    SmoothCountTable t(q, k_max, smoothness, n_max);

    // Layered DP over the admitted factor degree j: after layer j,
    // cur[k][n] counts degree-n monics with k factors all of degree <= j.
    auto make_layer = [&] {
        return std::vector<std::vector<mpz_class>>(k_max + 1, std::vector<mpz_class>(n_max + 1));
    };
    auto cur = make_layer();
    cur[0][0] = 1;
    for (unsigned j = 1; j <= smoothness; ++j) {
        auto next = make_layer();
        // Multiset choices of l degree-j irreducibles, l <= k_max.
        std::vector<mpz_class> choose(k_max + 1);
        choose[0] = 1;
        for (unsigned l = 1; l <= k_max; ++l) choose[l] = multiset_binomial(irr.at(j), l);
        for (unsigned k = 0; k <= k_max; ++k) {
            for (unsigned n = 0; n <= n_max; ++n) {
                if (cur[k][n] == 0) continue;
                const mpz_class& base = cur[k][n];
                for (unsigned l = 0; k + l <= k_max; ++l) {
                    unsigned long nn = n + static_cast<unsigned long>(l) * j;
                    if (nn > n_max) break;
                    if (l == 0) {
                        next[k][nn] += base;
                    } else {
                        next[k + l][nn] += base * choose[l];
                    }
                }
            }
        }
        cur = std::move(next);
    }
    t.psi_ = std::move(cur);
    return t;
}

SmoothCountTable SmoothCountTable::from_entries(const FieldOrder& q, unsigned k_max,
                                                unsigned smoothness, unsigned n_max,
                                                std::vector<std::vector<mpz_class>> rows,
                                                const IrreducibleCountTable& irr) {
    SmoothCountTable t(q, k_max, smoothness, n_max);
    if (rows.size() != k_max + 1) throw std::runtime_error("smooth table: row count mismatch");
    for (auto& row : rows) {
        if (row.size() != n_max + 1) throw std::runtime_error("smooth table: column count mismatch");
    }
    t.psi_ = std::move(rows);
    if (t.psi(0, 0) != 1) throw std::runtime_error("smooth table failed validation: psi(0,0) != 1");
    for (unsigned n = 1; n <= std::min({smoothness, n_max, 6u}); ++n) {
        if (t.psi(1, n) != irr.at(n)) {
            throw std::runtime_error("smooth table failed validation: psi(1,n) != pi'(n)");
        }
    }
    unsigned probe = std::min({smoothness, n_max, 8u});
    if (probe >= 1) {
        mpz_class total(0);
        for (unsigned k = 0; k <= std::min(k_max, probe); ++k) total += t.psi(k, probe);
        if (k_max >= probe && total != pow_mpz(q.q, probe)) {
            throw std::runtime_error("smooth table failed validation: marginal != q^n");
        }
    }
    return t;
}

const mpz_class& SmoothCountTable::psi(unsigned k, unsigned n) const {
    if (k > k_max_ || n > n_max_) return zero_;
    return psi_[k][n];
}

mpz_class smooth_count(const FieldOrder& q, unsigned k, unsigned n, unsigned m) {
    if (m == 0) throw std::invalid_argument("smooth_count: smoothness must be positive");
    if (k == 0) return n == 0 ? mpz_class(1) : mpz_class(0);
    if (n < k || n > static_cast<unsigned long>(k) * m) return 0;
    auto irr = IrreducibleCountTable::build(q, m);
    auto table = SmoothCountTable::build(q, k, m, n, irr);
    return table.psi(k, n);
}

}  // namespace fqsum
