#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace fqsum {

/// A validated prime power q = p^e, the order of the coefficient field.
struct FieldOrder {
    unsigned long q = 0;
    unsigned long p = 0;
    unsigned e = 0;

    friend bool operator==(const FieldOrder&, const FieldOrder&) = default;
};

class not_a_prime_power : public std::invalid_argument {
public:
    explicit not_a_prime_power(unsigned long q);
    unsigned long q;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(unsigned long n);

/// Accepts q = p^e with p prime, e >= 1. Throws std::invalid_argument for
/// q < 2 and not_a_prime_power for everything else that fails.
FieldOrder validate_field_order(unsigned long q);

/// Moebius function. mu(1) = 1, mu(m) = 0 iff m has a squared prime factor.
int moebius(unsigned long m);

/// Divisors of n in ascending order.
std::vector<unsigned long> divisors(unsigned long n);

/// C(a-1, i) for a >= 1, and the generalized C(-1, i) = (-1)^i for a = 0.
mpz_class binomial_shifted(unsigned long a, unsigned long i);

/// Exact harmonic number H_n = 1 + 1/2 + ... + 1/n.
mpq_class harmonic(unsigned long n);

/// C(count + l - 1, l): multisets of size l drawn from `count` kinds.
/// Computed as a falling-factorial product; count may be astronomically big.
mpz_class multiset_binomial(const mpz_class& count, unsigned long l);

/// q^e over arbitrary-size integers.
mpz_class pow_mpz(unsigned long base, unsigned long exp);

/// Smallest prime power strictly greater than x (x < 2^62).
unsigned long next_prime_power_above(unsigned long x);

/// All prime powers in [2, limit], ascending.
std::vector<unsigned long> prime_powers_up_to(unsigned long limit);

}  // namespace fqsum
