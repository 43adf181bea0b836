#include "doctest.h"

#include "fqsum/bounds.hpp"
#include "fqsum/constants.hpp"
#include "fqsum/digits.hpp"

using namespace fqsum;

namespace {
const PrecisionConfig cfg256{256, 0.0};
const FieldOrder F2 = validate_field_order(2);
const FieldOrder F9 = validate_field_order(9);
}

TEST_CASE("irreducible sum bounds") {
    for (unsigned long qv : {2ul, 5ul, 16ul, 64ul}) {
        auto [lower, upper] = irreducible_sum_bounds(validate_field_order(qv), cfg256);
        CHECK(upper.intersects(zeta_int(2, cfg256)));
        CHECK(mpfr_cmp(lower.hi(), upper.lo()) <= 0);
    }
    // The gap (q/(q-1)) Li2(1/sqrt(q)) closes below 1e-2 for large q.
    auto [lower, upper] = irreducible_sum_bounds(validate_field_order(16384), cfg256);
    Enclosure gap = sub(upper, lower);
    CHECK(certified_less(gap, mpq_class(1, 100)));
}

TEST_CASE("fkq upper bound values") {
    // zeta(3) + Li2(1/2)/2 ~ 1.4931772: above the true F(I_{2,2}) = 1.0644...
    Enclosure b22 = fkq_upper_bound(F2, 2, cfg256);
    CHECK(certified_truncation(b22, 7) == "1.4931771");
    // zeta(4) + log 2 zeta(2) ~ 2.2225
    Enclosure b23 = fkq_upper_bound(F2, 3, cfg256);
    CHECK(certified_truncation(b23, 4) == "2.2225");
    CHECK_THROWS_AS(fkq_upper_bound(F2, 1, cfg256), std::invalid_argument);
    // As q grows the bound collapses onto zeta(k+1).
    Enclosure big = fkq_upper_bound(validate_field_order(1048576), 5, cfg256);
    Enclosure gap = sub(big, zeta_int(6, cfg256));
    CHECK(certified_less(gap, mpq_class(1, 100000)));
    CHECK(gap.is_strictly_positive());
}

TEST_CASE("fkq lower bound values") {
    // q = 2: 1 - sqrt(2) < 0, so odd powers are negative (vacuous) and even
    // powers are small positives.
    CHECK(fkq_lower_bound(F2, 1, cfg256).is_strictly_negative());
    CHECK(fkq_lower_bound(F2, 3, cfg256).is_strictly_negative());
    CHECK(fkq_lower_bound(F2, 2, cfg256).is_strictly_positive());
    // q = 9, k = 1: (1 - 3/8) zeta(2) = 0.625 zeta(2) ~ 1.0280
    Enclosure lb = fkq_lower_bound(F9, 1, cfg256);
    CHECK(certified_truncation(lb, 4) == "1.0280");
    // and it sits below the certified F(I_{1,9}).
    Enclosure val = erdos_sum_irreducibles(F9, 40, cfg256);
    CHECK(certified_less(lb, val));
    // q -> infinity: factor tends to 1.
    Enclosure big = fkq_lower_bound(validate_field_order(1048576), 4, cfg256);
    Enclosure gap = sub(zeta_int(5, cfg256), big);
    CHECK(certified_less(gap, mpq_class(1, 100)));
}

TEST_CASE("sandwich: closed-form bounds vs certified cells") {
    SumEngine engine(cfg256);
    for (unsigned long qv : prime_powers_up_to(16)) {
        FieldOrder q = validate_field_order(qv);
        engine.prepare(q, 6, 40);
        for (unsigned k = 2; k <= 6; ++k) {
            SumResult cell = engine.fkq_cell(q, k, 40);
            Enclosure ub = fkq_upper_bound(q, k, cfg256);
            Enclosure lb = fkq_lower_bound(q, k, cfg256);
            CHECK(mpfr_cmp(lb.lo(), cell.value.lo()) <= 0);
            CHECK(mpfr_cmp(cell.value.hi(), ub.hi()) <= 0);
        }
    }
}

TEST_CASE("q_k bound") {
    CHECK(qk_bound(2, cfg256).bound.contains(mpq_class(11)));
    CHECK(qk_bound(3, cfg256).bound.contains(mpq_class(413)));
    QkBoundResult r4 = qk_bound(4, cfg256);
    // 4.03 * 9 * 256 * zeta(4)^2, evaluated independently by hand.
    CHECK(certified_less(mpq_class(10876), r4.bound));
    CHECK(certified_less(r4.bound, mpq_class(10877)));
    REQUIRE(r4.eta.has_value());
    CHECK(certified_truncation(*r4.eta, 5) == "0.00365");
    CHECK_THROWS_AS(qk_bound(1, cfg256), std::invalid_argument);

    for (unsigned k = 4; k <= 12; ++k) {
        CHECK(certified_leq(qk_threshold(k, cfg256), qk_bound(k, cfg256).bound));
    }
    // bound(k+1)/bound(k) = 4 (k/(k-1))^2 (zeta(k+1)/zeta(k))^2 decreases
    // toward 4; it is still 4.93 at k = 10, so the band is (3.5, 5).
    mpq_class lo(7, 2), hi(5);
    std::optional<Enclosure> prev_ratio;
    for (unsigned k = 10; k < 30; ++k) {
        Enclosure ratio = div(qk_bound(k + 1, cfg256).bound, qk_bound(k, cfg256).bound);
        CHECK(certified_leq(lo, ratio));
        CHECK(certified_less(ratio, hi));
        if (prev_ratio) CHECK(certified_less(ratio, *prev_ratio));
        prev_ratio = ratio;
    }
    Enclosure late = div(qk_bound(30, cfg256).bound, qk_bound(29, cfg256).bound);
    CHECK(certified_less(late, mpq_class(9, 2)));
}

TEST_CASE("descending chain holds just above the q_k threshold") {
    // Spot checks of the guarantee at two k values.
    SumEngine engine(cfg256);
    for (unsigned k : {4u, 6u}) {
        QkBoundResult bound = qk_bound(k, cfg256);
        mpfr_t hi_ceil;
        mpfr_init2(hi_ceil, 64);
        mpfr_set(hi_ceil, bound.bound.hi(), MPFR_RNDU);
        unsigned long threshold = mpfr_get_ui(hi_ceil, MPFR_RNDU);
        mpfr_clear(hi_ceil);
        FieldOrder q = validate_field_order(next_prime_power_above(threshold));
        engine.prepare(q, k, 12);
        SumResult prev = engine.fkq_cell(q, 1, 12);
        for (unsigned j = 2; j <= k; ++j) {
            SumResult cur = engine.fkq_cell(q, j, 12);
            CHECK(certified_less(cur.value, prev.value));
            prev = cur;
        }
    }
}

TEST_CASE("universal bound per q and its constants") {
    for (unsigned long qv : {3ul, 4ul, 5ul, 19ul}) {
        UniversalBoundResult res = universal_bound_check(validate_field_order(qv), 300, cfg256);
        CHECK(res.verdict == Verdict::holds);
    }
    CHECK_THROWS_AS(universal_bound_check(F2, 300, cfg256), std::invalid_argument);
    CHECK(certified_truncation(universal_limit_constant(cfg256), 6) == "1.800153");
    CHECK(certified_truncation(q2_bound_constant(cfg256), 6) == "1.890536");
    // At q just above 19 the margin flips within a few prime powers; the
    // bound is not below e^gamma for large q.
    UniversalBoundResult beyond = universal_bound_check(validate_field_order(64), 300, cfg256);
    CHECK(beyond.verdict == Verdict::fails);
}

TEST_CASE("1 - F(I_{k,2}) shrinks geometrically") {
    // Observed convergence rate: the defect 1 - F halves-ish per step.
    SumEngine engine(cfg256);
    engine.prepare(F2, 31, 100);
    mpq_class one(1);
    std::vector<Enclosure> defects;
    for (unsigned k = 10; k <= 31; ++k) {
        SumResult cell = engine.fkq_cell(F2, k, 100);
        defects.push_back(sub(Enclosure::from_mpq(one, 256), cell.value));
        CHECK(defects.back().is_strictly_positive());
    }
    mpq_class lo(3, 2), hi(3);
    for (size_t i = 0; i + 1 < defects.size(); ++i) {
        Enclosure ratio = div(defects[i], defects[i + 1]);
        CHECK(certified_less(lo, ratio));
        CHECK(certified_less(ratio, hi));
    }
}

TEST_CASE("banks-martin scan, small grid") {
    SumEngine engine(cfg256);
    BanksMartinReport rep = banks_martin_scan(F2, 6, 60, engine);
    CHECK(rep.fully_decided);
    REQUIRE(rep.local_minima.size() == 1);
    CHECK(rep.local_minima[0] == 4);
    std::vector<Relation> expect_step{Relation::greater, Relation::greater, Relation::greater,
                                      Relation::less, Relation::less};
    CHECK(rep.step == expect_step);
    std::vector<Relation> expect_one{Relation::greater, Relation::greater, Relation::less,
                                     Relation::less, Relation::less, Relation::less};
    CHECK(rep.versus_one == expect_one);
}

TEST_CASE("banks-martin scan reports undecided rather than guessing") {
    SumEngine engine(cfg256);
    BanksMartinReport rep = banks_martin_scan(F2, 3, 2, engine);
    CHECK(!rep.fully_decided);
    bool any_undecided = false;
    for (Relation r : rep.step) any_undecided |= (r == Relation::undecided);
    for (Relation r : rep.versus_one) any_undecided |= (r == Relation::undecided);
    CHECK(any_undecided);
}

TEST_CASE("doubling precision never reverses a certified comparison") {
    PrecisionConfig cfg512{512, 0.0};
    SumEngine e256(cfg256), e512(cfg512);
    BanksMartinReport r256 = banks_martin_scan(F2, 5, 40, e256);
    BanksMartinReport r512 = banks_martin_scan(F2, 5, 40, e512);
    for (size_t i = 0; i < r256.step.size(); ++i) {
        if (r256.step[i] != Relation::undecided) CHECK(r256.step[i] == r512.step[i]);
    }
}
