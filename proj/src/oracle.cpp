#include "fqsum/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fqsum {

SmallField SmallField::make(const FieldOrder& q) {
    if (q.q > 9) throw std::invalid_argument("SmallField: only q <= 9 is supported");
    SmallField f;
    f.q_ = static_cast<unsigned>(q.q);
    unsigned p = static_cast<unsigned>(q.p);
    unsigned e = q.e;
    f.add_.resize(f.q_ * f.q_);
    f.mul_.resize(f.q_ * f.q_);
    f.neg_.resize(f.q_);

    auto decode = [&](unsigned v, unsigned* c) {
        for (unsigned i = 0; i < e; ++i) {
            c[i] = v % p;
            v /= p;
        }
    };
    auto encode = [&](const unsigned* c) {
        unsigned v = 0;
        for (unsigned i = e; i-- > 0;) v = v * p + c[i];
        return v;
    };

    // Modulus for e > 1: the first monic degree-e polynomial over F_p with
    // no roots (degree 2 and 3 suffice for q <= 9, where rootlessness
    // implies irreducibility).
    unsigned modulus[4] = {0, 0, 0, 0};  // coefficients of x^0..x^(e-1)
    if (e > 1) {
        bool found = false;
        for (unsigned cand = 0; cand < f.q_ && !found; ++cand) {
            unsigned c[4];
            decode(cand, c);
            bool has_root = false;
            for (unsigned x = 0; x < p && !has_root; ++x) {
                unsigned val = 1;  // leading coefficient
                for (unsigned i = e; i-- > 0;) val = (val * x + c[i]) % p;
                if (val == 0) has_root = true;
            }
            if (!has_root) {
                for (unsigned i = 0; i < e; ++i) modulus[i] = c[i];
                found = true;
            }
        }
        if (!found) throw std::logic_error("SmallField: no irreducible modulus found");
    }

    for (unsigned a = 0; a < f.q_; ++a) {
        unsigned ca[4];
        decode(a, ca);
        unsigned cn[4];
        for (unsigned i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
        f.neg_[a] = static_cast<uint8_t>(encode(cn));
        for (unsigned b = 0; b < f.q_; ++b) {
            unsigned cb[4];
            decode(b, cb);
            unsigned cs[4];
            for (unsigned i = 0; i < e; ++i) cs[i] = (ca[i] + cb[i]) % p;
            f.add_[a * f.q_ + b] = static_cast<uint8_t>(encode(cs));
            // product, reduced modulo the field modulus
            unsigned prod[8] = {0};
            for (unsigned i = 0; i < e; ++i)
                for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (unsigned d = 2 * e - 2; d >= e && d < 8; --d) {
                unsigned coeff = prod[d];
                if (coeff) {
                    prod[d] = 0;
                    // x^d = x^(d-e) * (-modulus)
                    for (unsigned i = 0; i < e; ++i) {
                        prod[d - e + i] = (prod[d - e + i] + coeff * ((p - modulus[i]) % p)) % p;
                    }
                }
                if (d == e) break;
            }
            f.mul_[a * f.q_ + b] = static_cast<uint8_t>(encode(prod));
        }
    }
    return f;
}

namespace {

struct PolyRef {
    uint8_t deg = 0;
    uint32_t idx = 0;
    friend auto operator<=>(const PolyRef&, const PolyRef&) = default;
};

void decode_poly(uint32_t idx, unsigned deg, unsigned q, uint8_t* coeff) {
    for (unsigned i = 0; i < deg; ++i) {
        coeff[i] = static_cast<uint8_t>(idx % q);
        idx /= q;
    }
    coeff[deg] = 1;
}

uint32_t encode_poly(const uint8_t* coeff, unsigned deg, unsigned q) {
    uint32_t idx = 0;
    for (unsigned i = deg; i-- > 0;) idx = idx * q + coeff[i];
    return idx;
}

}  // namespace

OracleFactorTable OracleFactorTable::build(const FieldOrder& q, unsigned max_degree,
                                           size_t budget) {
    if (q.q > 9) throw std::invalid_argument("oracle: only q <= 9 is supported");
    if (max_degree > 15) throw std::invalid_argument("oracle: max_degree must be <= 15");
    size_t total = 0;
    size_t power = 1;
    for (unsigned n = 1; n <= max_degree; ++n) {
        power *= q.q;
        total += power;
        if (total > budget) {
            throw oracle_budget_exceeded("oracle: " + std::to_string(q.q) + "^" +
                                         std::to_string(n) + " monic polynomials exceed the budget");
        }
    }

    SmallField F = SmallField::make(q);
    unsigned Q = F.q();

    struct Mark {
        PolyRef spf;       // smallest irreducible factor (canonical order)
        uint32_t quot = 0; // index of f / spf
        bool set = false;
    };
    std::vector<std::vector<Mark>> marks(max_degree + 1);
    std::vector<size_t> count(max_degree + 1, 1);
    for (unsigned n = 1; n <= max_degree; ++n) {
        count[n] = count[n - 1] * Q;
        marks[n].resize(count[n]);
    }

    std::vector<std::vector<uint32_t>> irreducibles(max_degree + 1);

    uint8_t fc[40], gc[40], prod[40];
    // Sieve in canonical order (degree, then index). When irreducible p is
    // processed, every composite with a smaller factor is already marked, so
    // unmarked g (or g with spf >= p) are exactly the valid cofactors.
    for (unsigned dp = 1; dp <= max_degree; ++dp) {
        for (uint32_t ip = 0; ip < count[dp]; ++ip) {
            if (marks[dp][ip].set) continue;  // composite
            irreducibles[dp].push_back(ip);
            PolyRef p{static_cast<uint8_t>(dp), ip};
            decode_poly(ip, dp, Q, fc);
            for (unsigned dg = 1; dp + dg <= max_degree; ++dg) {
                for (uint32_t ig = 0; ig < count[dg]; ++ig) {
                    const Mark& mg = marks[dg][ig];
                    if (mg.set && mg.spf < p) continue;
                    decode_poly(ig, dg, Q, gc);
                    unsigned dn = dp + dg;
                    std::fill(prod, prod + dn + 1, 0);
                    for (unsigned i = 0; i <= dp; ++i) {
                        if (fc[i] == 0) continue;
                        for (unsigned j = 0; j <= dg; ++j) {
                            if (gc[j] == 0) continue;
                            prod[i + j] = F.add(prod[i + j], F.mul(fc[i], gc[j]));
                        }
                    }
                    uint32_t in = encode_poly(prod, dn, Q);
                    Mark& mf = marks[dn][in];
                    if (!mf.set) {
                        mf.set = true;
                        mf.spf = p;
                        mf.quot = ig;
                    }
                }
            }
        }
    }

    OracleFactorTable t;
    t.q_ = q;
    t.max_degree_ = max_degree;
    t.pi_prime_.assign(max_degree + 1, 0);
    t.pi_k_.assign(max_degree + 1, std::vector<mpz_class>(max_degree + 1, 0));
    t.pi_star_k_.assign(max_degree + 1, std::vector<mpz_class>(max_degree + 1, 0));
    t.histogram_.assign(max_degree + 1,
                        std::vector<std::vector<unsigned long>>(
                            max_degree + 1, std::vector<unsigned long>(max_degree + 1, 0)));

    // Factor statistics, bottom-up: omega, largest factor degree, squarefree.
    struct Stats {
        uint8_t omega = 0;
        uint8_t maxdeg = 0;
        bool squarefree = true;
    };
    std::vector<std::vector<Stats>> stats(max_degree + 1);
    for (unsigned n = 1; n <= max_degree; ++n) {
        stats[n].resize(count[n]);
        for (uint32_t i = 0; i < count[n]; ++i) {
            const Mark& m = marks[n][i];
            Stats s;
            if (!m.set) {
                s = Stats{1, static_cast<uint8_t>(n), true};
            } else {
                unsigned dq = n - m.spf.deg;
                const Stats& sq = stats[dq][m.quot];
                s.omega = static_cast<uint8_t>(sq.omega + 1);
                s.maxdeg = std::max<uint8_t>(sq.maxdeg, m.spf.deg);
                // spf(f) divides the quotient iff the quotient's own smallest
                // factor is exactly spf(f); that is the only way f can fail
                // to be squarefree at this step.
                bool repeated = dq > 0 && marks[dq][m.quot].set
                                    ? marks[dq][m.quot].spf == m.spf
                                    : (dq == m.spf.deg && m.quot == m.spf.idx);
                s.squarefree = sq.squarefree && !repeated;
            }
            stats[n][i] = s;
            t.pi_k_[s.omega][n] += 1;
            if (s.squarefree) t.pi_star_k_[s.omega][n] += 1;
            t.histogram_[n][s.omega][s.maxdeg] += 1;
        }
        t.pi_prime_[n] = t.pi_k_[1][n];
    }
    return t;
}

const mpz_class& OracleFactorTable::pi_prime(unsigned n) const {
    if (n == 0 || n > max_degree_) return zero_;
    return pi_prime_[n];
}

const mpz_class& OracleFactorTable::pi_k(unsigned k, unsigned n) const {
    if (n == 0 || n > max_degree_ || k > max_degree_) return zero_;
    return pi_k_[k][n];
}

const mpz_class& OracleFactorTable::pi_star_k(unsigned k, unsigned n) const {
    if (n == 0 || n > max_degree_ || k > max_degree_) return zero_;
    return pi_star_k_[k][n];
}

mpz_class OracleFactorTable::psi(unsigned k, unsigned n, unsigned m) const {
    if (k == 0) return n == 0 ? mpz_class(1) : mpz_class(0);
    if (n == 0 || n > max_degree_ || k > max_degree_) return 0;
    unsigned long c = 0;
    for (unsigned d = 1; d <= std::min(m, max_degree_); ++d) c += histogram_[n][k][d];
    return mpz_class(c);
}

mpq_class OracleFactorTable::erdos_partial_sum(unsigned k) const {
    mpq_class sum(0);
    for (unsigned n = 1; n <= max_degree_; ++n) {
        if (pi_k(k, n) == 0) continue;
        mpq_class term(pi_k(k, n), mpz_class(n) * pow_mpz(q_.q, n));
        term.canonicalize();
        sum += term;
    }
    return sum;
}

}  // namespace fqsum
