// Acceptance suite: runs every headline reproduction criterion end to end
// and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fqsum/bounds.hpp"
#include "fqsum/constants.hpp"
#include "fqsum/digits.hpp"
#include "fqsum/oracle.hpp"
#include "fqsum/sums.hpp"

using namespace fqsum;

namespace {

const PrecisionConfig cfg256{256, 0.0};

struct Failure {
    std::string detail;
};

void require(bool cond, const std::string& detail) {
    if (!cond) throw Failure{detail};
}

// Reference grid: 19 truncated fractional digits per cell, k = 1..10.
struct Column {
    unsigned long q;
    unsigned cutoff;
    const char* digits[10];
};

const Column kReferenceTable[] = {
    {2, 200, {"1.4676602238442289268", "1.0644425954143168595", "0.9755638525263773555",
              "0.9562373433151932108", "0.9581408226316153830", "0.9661285846774159333",
              "0.9747368549520022143", "0.9820875563671306239", "0.9877477647269600411",
              "0.9918478580517178761"}},
    {3, 150, {"1.5402654962770992783", "1.1301714500071343633", "1.0329809138654179703",
              "1.0039698809027713378", "0.9960179423616558785", "0.9949687972770260308",
              "0.9959150552841082468", "0.9971537408436136635", "0.9981715655684219998",
              "0.9988850772260466434"}},
    {4, 150, {"1.5708306089585806605", "1.1544864845853626474", "1.0517959064091933064",
              "1.0178327413536777409", "1.0057528618201179388", "1.0015148661835156763",
              "1.0001513629475453519", "0.9998044985849281472", "0.9997818901532824166",
              "0.9998382721719850807"}},
    {5, 110, {"1.5876369878229405564", "1.1668343411440889017", "1.0606722482320695710",
              "1.0239276909306761841", "1.0097501408648004439", "1.0040299319147160468",
              "1.0016773165460739756", "1.0007015961030813973", "1.0002951481314120617",
              "1.0001251569695533427"}},
    {7, 110, {"1.6055616864329830894", "1.1790969073890668757", "1.0689297642298799167",
              "1.0292662613922721641", "1.0130607223966467259", "1.0060072704223504918",
              "1.0028205606817957574", "1.0013445588428900262", "1.0006484376681192577",
              "1.0003155548064037100"}},
};

SumEngine g_engine(cfg256);

void criterion1_irreducible_sum() {
    auto start = std::chrono::steady_clock::now();
    FieldOrder q2 = validate_field_order(2);
    Enclosure val = erdos_sum_irreducibles(q2, 200, cfg256);
    unsigned certified = max_certified_fractional_digits(val);
    require(certified >= 19, "only " + std::to_string(certified) + " digits certified");
    require(certified_truncation(val, 19) == "1.4676602238442289268",
            "digit mismatch: " + certified_truncation(val, 19).value_or("<none>"));
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(s < 5.0, "took " + std::to_string(s) + " s, budget 5 s");
}

void criterion2_reference_table() {
    auto start = std::chrono::steady_clock::now();
    for (const Column& col : kReferenceTable) {
        FieldOrder q = validate_field_order(col.q);
        g_engine.prepare(q, 10, col.cutoff);
        for (unsigned k = 1; k <= 10; ++k) {
            SumResult cell = g_engine.fkq_cell(q, k, col.cutoff);
            auto digits = certified_truncation(cell.value, 19);
            require(digits.has_value(), "q=" + std::to_string(col.q) + " k=" + std::to_string(k) +
                                            ": fewer than 19 digits certified");
            require(*digits == col.digits[k - 1],
                    "q=" + std::to_string(col.q) + " k=" + std::to_string(k) + ": got " + *digits +
                        ", expected " + col.digits[k - 1]);
        }
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(s < 1800.0, "took " + std::to_string(s) + " s, budget 1800 s");
}

void criterion3_banks_martin() {
    struct MinimumCase {
        unsigned long q;
        unsigned cutoff;
        unsigned k_max;
        unsigned expect_k;
        const char* prefix;
    };
    const MinimumCase cases[] = {
        {2, 200, 10, 4, "0.956237"},
        {3, 150, 10, 6, "0.994968"},
        {4, 150, 10, 9, "0.999781"},
    };
    for (const MinimumCase& c : cases) {
        FieldOrder q = validate_field_order(c.q);
        BanksMartinReport rep = banks_martin_scan(q, c.k_max, c.cutoff, g_engine);
        require(rep.local_minima.size() == 1,
                "q=" + std::to_string(c.q) + ": expected exactly one interior minimum");
        require(rep.local_minima[0] == c.expect_k,
                "q=" + std::to_string(c.q) + ": minimum at k=" +
                    std::to_string(rep.local_minima[0]));
        // Strict-inequality neighbors come certified out of the scan.
        require(rep.step[c.expect_k - 2] == Relation::greater &&
                    rep.step[c.expect_k - 1] == Relation::less,
                "neighbors of the minimum not certified");
        auto digits = certified_truncation(rep.cells[c.expect_k - 1].value, 6);
        require(digits == c.prefix, "q=" + std::to_string(c.q) + ": minimum value " +
                                        digits.value_or("<none>") + ", expected " + c.prefix);
    }
    // q = 5: certified strict decrease with every value above 1 for k <= 30.
    FieldOrder q5 = validate_field_order(5);
    BanksMartinReport rep = banks_martin_scan(q5, 30, 110, g_engine);
    for (unsigned k = 1; k < 30; ++k) {
        require(rep.step[k - 1] == Relation::greater,
                "q=5: F(I_" + std::to_string(k) + ") > F(I_" + std::to_string(k + 1) +
                    ") not certified");
    }
    for (unsigned k = 1; k <= 30; ++k) {
        require(rep.versus_one[k - 1] == Relation::greater,
                "q=5: F(I_" + std::to_string(k) + ") > 1 not certified");
    }
}

void criterion4_coefficient_cancellation() {
    for (unsigned n = 1; n <= 60; ++n) {
        require(mertens_coefficient(n, 0) == harmonic(n), "c_0 != H_n at n=" + std::to_string(n));
        for (unsigned long j = 1; j <= n / 2; ++j) {
            require(mertens_coefficient(n, j) == 0,
                    "c_j nonzero at n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
}

void criterion5_mertens_bounds() {
    Enclosure eg = exp_gamma(cfg256);
    for (unsigned long qv : prime_powers_up_to(16)) {
        FieldOrder q = validate_field_order(qv);
        auto irr = IrreducibleCountTable::build(q, 40);
        for (unsigned n = 1; n <= 40; ++n) {
            Enclosure prod = mertens_product(q, n, cfg256, &irr);
            Enclosure ub = div(Enclosure::from_long(1, 256), mul_ui(eg, n));
            Enclosure lb = div(Enclosure::from_long(1, 256), mul_ui(eg, n + 1));
            require(certified_leq(prod, ub),
                    "upper bound fails at q=" + std::to_string(qv) + " n=" + std::to_string(n));
            if (qv == 2 && n == 1) {
                require(certified_less(prod, lb), "expected exception at (2,1) did not occur");
            } else {
                require(certified_less(lb, prod),
                        "lower bound fails at q=" + std::to_string(qv) + " n=" + std::to_string(n));
            }
        }
    }
}

void criterion6_universal_bound() {
    for (unsigned long qv : prime_powers_up_to(19)) {
        if (qv < 3) continue;
        FieldOrder q = validate_field_order(qv);
        UniversalBoundResult res = universal_bound_check(q, 400, cfg256);
        require(res.verdict == Verdict::holds,
                "B(q) < e^gamma not certified for q=" + std::to_string(qv));
    }
    require(certified_truncation(universal_limit_constant(cfg256), 6) == "1.800153",
            "limit constant digits");
    require(certified_truncation(q2_bound_constant(cfg256), 6) == "1.890536",
            "q=2 constant digits");
    require(certified_truncation(exp_gamma(cfg256), 6) == "1.781072", "e^gamma digits");
}

void run_oracle_block(unsigned long qv, unsigned max_degree) {
    FieldOrder q = validate_field_order(qv);
    OracleFactorTable oracle = OracleFactorTable::build(q, max_degree);
    auto irr = IrreducibleCountTable::build(q, max_degree);
    for (unsigned n = 1; n <= max_degree; ++n) {
        require(oracle.pi_prime(n) == irr.at(n),
                "pi' mismatch at q=" + std::to_string(qv) + " n=" + std::to_string(n));
        mpz_class total(0);
        for (unsigned k = 1; k <= n; ++k) total += oracle.pi_k(k, n);
        require(total == pow_mpz(qv, n), "factor totals mismatch at n=" + std::to_string(n));
    }
    for (unsigned m = 1; m <= max_degree; ++m) {
        auto smooth = SmoothCountTable::build(q, max_degree, m, max_degree, irr);
        for (unsigned k = 0; k <= max_degree; ++k) {
            for (unsigned n = 0; n <= max_degree; ++n) {
                require(oracle.psi(k, n, m) == smooth.psi(k, n),
                        "smooth count mismatch at (k,n,m)=(" + std::to_string(k) + "," +
                            std::to_string(n) + "," + std::to_string(m) + ")");
            }
        }
    }
    std::vector<mpz_class> conv(max_degree + 1, 0);
    conv[0] = 1;
    mpz_class fact(1);
    for (unsigned k = 1; k <= max_degree; ++k) {
        std::vector<mpz_class> next(max_degree + 1, 0);
        for (unsigned s = 0; s + 1 <= max_degree; ++s) {
            if (conv[s] == 0) continue;
            for (unsigned j = 1; s + j <= max_degree; ++j) next[s + j] += conv[s] * irr.at(j);
        }
        conv = std::move(next);
        fact *= k;
        for (unsigned n = 1; n <= max_degree; ++n) {
            require(fact * oracle.pi_star_k(k, n) <= conv[n],
                    "squarefree composition inequality fails");
            require(fact * oracle.pi_k(k, n) >= conv[n], "ordered composition inequality fails");
        }
    }
}

void criterion7_oracle() {
    auto start = std::chrono::steady_clock::now();
    run_oracle_block(2, 14);
    run_oracle_block(3, 9);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(s < 600.0, "took " + std::to_string(s) + " s, budget 600 s");
}

void criterion8_property_suites() {
    // Moebius divisor-sum identity.
    for (unsigned long n = 1; n <= 10000; ++n) {
        long sum = 0;
        for (unsigned long d : divisors(n)) sum += moebius(d);
        require(sum == (n == 1 ? 1 : 0), "Moebius identity fails at n=" + std::to_string(n));
    }
    // Necklace identity, every prime power q <= 64, n <= 80.
    for (unsigned long qv : prime_powers_up_to(64)) {
        FieldOrder q = validate_field_order(qv);
        auto table = IrreducibleCountTable::build(q, 80);
        for (unsigned n = 1; n <= 80; ++n) {
            require(table.necklace_identity_holds(n),
                    "necklace identity fails at q=" + std::to_string(qv) + " n=" +
                        std::to_string(n));
        }
    }
    // Mordell recurrence consistency over exact rationals.
    std::mt19937 rng(987654);
    std::uniform_int_distribution<unsigned> kd(1, 5), nd(2, 6), ad(1, 10);
    for (int trial = 0; trial < 80; ++trial) {
        unsigned k = kd(rng), n = nd(rng);
        unsigned long a = ad(rng);
        mpq_class lhs = mordell_exact(k, n, a);
        mpq_class rhs(0);
        mpz_class denom(1);
        for (unsigned i = 0; i <= k; ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, i);
            mpq_class term = mordell_exact(k - i, n - 1, a + i * (n - 1)) * binom;
            term /= denom;
            term.canonicalize();
            if (i % 2 == 0) rhs += term; else rhs -= term;
            denom *= n - 1;
        }
        require(lhs == rhs, "Mordell recurrence identity fails");
    }
    // Enclosure nesting under precision doubling.
    PrecisionConfig cfg512{512, 0.0};
    require(zeta_int(2, cfg256).contains(zeta_int(2, cfg512)), "zeta nesting fails");
    require(euler_gamma(cfg256).contains(euler_gamma(cfg512)), "gamma nesting fails");
    Enclosure half256 = Enclosure::from_mpq(mpq_class(1, 2), 288);
    Enclosure half512 = Enclosure::from_mpq(mpq_class(1, 2), 544);
    require(dilog(half256, cfg256).contains(dilog(half512, cfg512)), "dilog nesting fails");
    FieldOrder q2 = validate_field_order(2);
    SumEngine coarse(cfg256), fine(cfg512);
    SumResult c = coarse.fkq_cell(q2, 2, 40);
    SumResult f = fine.fkq_cell(q2, 2, 40);
    require(c.value.contains(f.value), "fkq nesting fails");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: F(I_2) to 19 certified digits at N=200 within 5 s",
         criterion1_irreducible_sum},
        {"criterion 2: reference grid q in {2,3,4,5,7}, k <= 10, 19-digit truncations",
         criterion2_reference_table},
        {"criterion 3: certified local minima (q=2,3,4) and q=5 descending chain to k=30",
         criterion3_banks_martin},
        {"criterion 4: c_0 = H_n and c_j = 0 for j <= n/2, n <= 60, exact",
         criterion4_coefficient_cancellation},
        {"criterion 5: Mertens product bracket, prime powers q <= 16, n <= 40",
         criterion5_mertens_bounds},
        {"criterion 6: B(q) < e^gamma for 3 <= q <= 19 and the three constants",
         criterion6_universal_bound},
        {"criterion 7: exhaustive oracle equivalence, F_2 deg <= 14 and F_3 deg <= 9",
         criterion7_oracle},
        {"criterion 8: property suites (Moebius, necklace, Mordell recurrence, nesting)",
         criterion8_property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.detail;
            ++failures;
        } catch (const std::exception& ex) {
            verdict = "FAIL";
            detail = std::string("exception: ") + ex.what();
            ++failures;
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << verdict << "  " << c.name << "  [" << s << " s]";
        if (!detail.empty()) line << "  -- " << detail;
        std::cout << line.str() << std::endl;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
