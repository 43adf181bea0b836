#include "fqsum/exact.hpp"

#include <string>

namespace fqsum {

not_a_prime_power::not_a_prime_power(unsigned long q_)
    : std::invalid_argument(std::to_string(q_) + " is not a prime power"), q(q_) {}

namespace {

unsigned long mulmod_u64(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long powmod_u64(unsigned long a, unsigned long e, unsigned long m) {
    unsigned long r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n % p == 0) return n == p;
    }
    unsigned long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every n < 2^64.
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        unsigned long x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldOrder validate_field_order(unsigned long q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    mpz_class z(static_cast<unsigned long>(q));
    // Try exponents from largest to smallest; e <= 63 since q >= 2.
    for (unsigned e = 63; e >= 1; --e) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), e) != 0) {
            unsigned long p = root.get_ui();
            if (is_prime_u64(p)) return FieldOrder{q, p, e};
        }
        if (e == 1) break;
    }
    throw not_a_prime_power(q);
}

int moebius(unsigned long m) {
    if (m == 0) throw std::invalid_argument("moebius: argument must be positive");
    int factors = 0;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            ++factors;
        }
    }
    if (m > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

mpz_class binomial_shifted(unsigned long a, unsigned long i) {
    if (a == 0) return (i % 2 == 0) ? mpz_class(1) : mpz_class(-1);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a - 1, i);
    return r;
}

mpq_class harmonic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("harmonic: argument must be positive");
    mpq_class h(0);
    for (unsigned long d = 1; d <= n; ++d) {
        h += mpq_class(1, d);
    }
    h.canonicalize();
    return h;
}

mpz_class multiset_binomial(const mpz_class& count, unsigned long l) {
    if (l == 0) return 1;
    if (count == 0) return 0;
    mpz_class num(1);
    for (unsigned long t = 0; t < l; ++t) num *= count + t;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), l);
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return r;
}

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

unsigned long next_prime_power_above(unsigned long x) {
    for (unsigned long q = x + 1;; ++q) {
        try {
            validate_field_order(q);
            return q;
        } catch (const std::invalid_argument&) {
        }
    }
}

std::vector<unsigned long> prime_powers_up_to(unsigned long limit) {
    std::vector<unsigned long> out;
    for (unsigned long q = 2; q <= limit; ++q) {
        try {
            validate_field_order(q);
            out.push_back(q);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

}  // namespace fqsum
