#pragma once

#include <vector>

#include <gmpxx.h>

#include "fqsum/exact.hpp"

namespace fqsum {

/// Exact count of monic irreducibles of degree n over F_q:
/// (1/n) sum_{d|n} q^d mu(n/d). Aborts (throws logic_error) if the Moebius
/// sum is not divisible by n, which would indicate an arithmetic bug.
mpz_class irreducible_count(const FieldOrder& q, unsigned n);

/// Two-sided exact-rational bounds: q^n/n - (q/(q-1)) q^ceil(n/2)/n and
/// q^n/n. For odd n the inner q^(n/2) is relaxed upward to q^ceil(n/2),
/// a slight loosening that keeps both bounds rational.
std::pair<mpq_class, mpq_class> irreducible_count_bounds(const FieldOrder& q, unsigned n);

/// Table of irreducible counts for degrees 1..max_degree.
class IrreducibleCountTable {
public:
    static IrreducibleCountTable build(const FieldOrder& q, unsigned max_degree);
    /// Rebuild-free construction from parsed entries; validates counts[1] = q
    /// and a necklace-identity spot check. Throws on failure.
    static IrreducibleCountTable from_entries(const FieldOrder& q, std::vector<mpz_class> counts);

    const FieldOrder& field() const { return q_; }
    unsigned max_degree() const { return static_cast<unsigned>(counts_.size()); }
    const mpz_class& at(unsigned n) const;

    /// Checks sum_{d|n} d * pi'(d) = q^n for the given degree.
    bool necklace_identity_holds(unsigned n) const;

private:
    IrreducibleCountTable(FieldOrder q, std::vector<mpz_class> counts)
        : q_(q), counts_(std::move(counts)) {}
    FieldOrder q_;
    std::vector<mpz_class> counts_;  // counts_[n-1] = pi'_q(n)
};

/// Exact counts of monic degree-n polynomials with exactly k irreducible
/// factors (with multiplicity), all of degree <= smoothness. Row k spans
/// n in [0, n_max].
class SmoothCountTable {
public:
    static SmoothCountTable build(const FieldOrder& q, unsigned k_max, unsigned smoothness,
                                  unsigned n_max, const IrreducibleCountTable& irr);
    /// Reconstitution from parsed entries with invariant spot checks
    /// (psi(0,0) = 1, psi(1,n) = pi'(n), one full-marginal column).
    static SmoothCountTable from_entries(const FieldOrder& q, unsigned k_max, unsigned smoothness,
                                         unsigned n_max, std::vector<std::vector<mpz_class>> rows,
                                         const IrreducibleCountTable& irr);

    const FieldOrder& field() const { return q_; }
    unsigned k_max() const { return k_max_; }
    unsigned smoothness() const { return smoothness_; }
    unsigned n_max() const { return n_max_; }
    /// Psi'_{k,q}(n, smoothness); zero outside the stored/feasible range.
    const mpz_class& psi(unsigned k, unsigned n) const;

    std::vector<std::vector<mpz_class>>& rows() { return psi_; }
    const std::vector<std::vector<mpz_class>>& rows() const { return psi_; }

private:
    SmoothCountTable(FieldOrder q, unsigned k_max, unsigned smoothness, unsigned n_max)
        : q_(q), k_max_(k_max), smoothness_(smoothness), n_max_(n_max) {}
    FieldOrder q_;
    unsigned k_max_, smoothness_, n_max_;
    std::vector<std::vector<mpz_class>> psi_;  // psi_[k][n]
    mpz_class zero_;
};

/// One-off Psi'_{k,q}(n, m). Out-of-range arguments yield 0; (k,n) = (0,0)
/// yields 1 (the empty product).
mpz_class smooth_count(const FieldOrder& q, unsigned k, unsigned n, unsigned m);

}  // namespace fqsum
