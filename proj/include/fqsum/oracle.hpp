#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fqsum/exact.hpp"

namespace fqsum {

class oracle_budget_exceeded : public std::runtime_error {
public:
    explicit oracle_budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic tables for F_q with q = p^e <= 9. Elements are indices 0..q-1;
/// for e > 1 the field is F_p[y]/(g) with g a monic irreducible found by
/// search, elements encoded base p.
class SmallField {
public:
    static SmallField make(const FieldOrder& q);
    unsigned q() const { return q_; }
    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }

private:
    unsigned q_ = 0;
    std::vector<uint8_t> add_, mul_, neg_;
};

/// Ground truth from exhaustive factorization of every monic polynomial of
/// degree 1..max_degree over F_q (q <= 9, max_degree <= 15). Irreducibles
/// are sieved Eratosthenes-style by crossing out all products.
class OracleFactorTable {
public:
    static OracleFactorTable build(const FieldOrder& q, unsigned max_degree,
                                   size_t budget = size_t(1) << 22);

    const FieldOrder& field() const { return q_; }
    unsigned max_degree() const { return max_degree_; }

    /// Number of degree-n irreducibles found by the sieve.
    const mpz_class& pi_prime(unsigned n) const;
    /// Monic degree-n polynomials with exactly k factors (with multiplicity).
    const mpz_class& pi_k(unsigned k, unsigned n) const;
    /// The squarefree ones among those.
    const mpz_class& pi_star_k(unsigned k, unsigned n) const;
    /// Degree-n monics with k factors, all factors of degree <= m.
    mpz_class psi(unsigned k, unsigned n, unsigned m) const;
    /// Exact partial Erdos sum over polynomials with k factors and degree <= max_degree.
    mpq_class erdos_partial_sum(unsigned k) const;

private:
    FieldOrder q_;
    unsigned max_degree_ = 0;
    std::vector<mpz_class> pi_prime_;
    std::vector<std::vector<mpz_class>> pi_k_, pi_star_k_;
    // histogram_[n][k][d]: count with exactly k factors, largest factor degree d
    std::vector<std::vector<std::vector<unsigned long>>> histogram_;
    mpz_class zero_;
};

}  // namespace fqsum
