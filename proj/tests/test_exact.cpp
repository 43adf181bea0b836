#include "doctest.h"

#include <numeric>
#include <vector>

#include "fqsum/exact.hpp"

using namespace fqsum;

TEST_CASE("moebius basics") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(2) == -1);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
}

TEST_CASE("moebius divisor-sum identity up to 10^4") {
    for (unsigned long n = 1; n <= 10000; ++n) {
        long sum = 0;
        for (unsigned long d : divisors(n)) sum += moebius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<unsigned long>{1});
    CHECK(divisors(6) == std::vector<unsigned long>{1, 2, 3, 6});
    CHECK(divisors(16) == std::vector<unsigned long>{1, 2, 4, 8, 16});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("binomial_shifted") {
    CHECK(binomial_shifted(1, 0) == 1);
    CHECK(binomial_shifted(1, 1) == 0);
    CHECK(binomial_shifted(1, 5) == 0);
    CHECK(binomial_shifted(0, 3) == -1);
    CHECK(binomial_shifted(0, 4) == 1);
    CHECK(binomial_shifted(4, 2) == 3);
}

TEST_CASE("binomial_shifted Pascal recurrence") {
    for (unsigned long a = 2; a <= 20; ++a) {
        for (unsigned long i = 1; i <= a; ++i) {
            CHECK(binomial_shifted(a, i) ==
                  binomial_shifted(a - 1, i) + binomial_shifted(a - 1, i - 1));
        }
    }
}

TEST_CASE("harmonic") {
    CHECK(harmonic(1) == mpq_class(1));
    CHECK(harmonic(2) == mpq_class(3, 2));
    CHECK(harmonic(6) == mpq_class(49, 20));
    CHECK_THROWS_AS(harmonic(0), std::invalid_argument);
    for (unsigned long n = 2; n <= 120; ++n) {
        mpq_class step(1, n);
        step.canonicalize();
        CHECK(harmonic(n) - harmonic(n - 1) == step);
    }
}

TEST_CASE("validate_field_order") {
    FieldOrder f4 = validate_field_order(4);
    CHECK(f4.p == 2);
    CHECK(f4.e == 2);
    FieldOrder f19 = validate_field_order(19);
    CHECK(f19.p == 19);
    CHECK(f19.e == 1);
    FieldOrder f64 = validate_field_order(64);
    CHECK(f64.p == 2);
    CHECK(f64.e == 6);
    CHECK_THROWS_AS(validate_field_order(6), not_a_prime_power);
    CHECK_THROWS_AS(validate_field_order(0), std::invalid_argument);
    CHECK_THROWS_AS(validate_field_order(1), std::invalid_argument);
    CHECK_THROWS_WITH(validate_field_order(6), "6 is not a prime power");
}

TEST_CASE("prime powers up to 10^4 match a factorization sieve") {
    const unsigned long limit = 10000;
    std::vector<unsigned long> spf(limit + 1, 0);
    for (unsigned long i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (unsigned long j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    for (unsigned long n = 2; n <= limit; ++n) {
        unsigned long m = n;
        unsigned long p = spf[n];
        while (m % p == 0) m /= p;
        bool is_pp = (m == 1);
        bool accepted = true;
        try {
            FieldOrder f = validate_field_order(n);
            CHECK(f.p == p);
        } catch (const std::invalid_argument&) {
            accepted = false;
        }
        CHECK(accepted == is_pp);
    }
}

TEST_CASE("multiset_binomial") {
    CHECK(multiset_binomial(2, 2) == 3);  // {aa, ab, bb}
    CHECK(multiset_binomial(3, 1) == 3);
    CHECK(multiset_binomial(5, 0) == 1);
    CHECK(multiset_binomial(0, 2) == 0);
    mpz_class big = pow_mpz(2, 100);
    // C(big + 1, 2) = big (big + 1) / 2
    CHECK(multiset_binomial(big, 2) == big * (big + 1) / 2);
}

TEST_CASE("next_prime_power_above") {
    CHECK(next_prime_power_above(1) == 2);
    CHECK(next_prime_power_above(8) == 9);
    CHECK(next_prime_power_above(9) == 11);
    CHECK(next_prime_power_above(121) == 125);
}
