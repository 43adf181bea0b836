#pragma once

#include <optional>
#include <vector>

#include "fqsum/sums.hpp"

namespace fqsum {

/// Three-valued outcome of an interval comparison: interval arithmetic can
/// certify strict order only across disjoint intervals.
enum class Verdict { holds, fails, undecided };

Verdict certify_strictly_less(const Enclosure& a, const Enclosure& b);

/// pi^2/6 - (q/(q-1)) Li2(1/sqrt(q)) <= F(I_q) <= pi^2/6.
std::pair<Enclosure, Enclosure> irreducible_sum_bounds(const FieldOrder& q,
                                                       const PrecisionConfig& cfg);

/// Upper bound for F(I_{k,q}): zeta(3) + Li2(1/q)/2 for k = 2,
/// zeta(k+1) + log(q/(q-1)) zeta(k-1) for k >= 3. Rejects k < 2.
Enclosure fkq_upper_bound(const FieldOrder& q, unsigned k, const PrecisionConfig& cfg);

/// Lower bound (1 - sqrt(q)/(q-1))^k zeta(k+1); may be vacuous (< 0).
Enclosure fkq_lower_bound(const FieldOrder& q, unsigned k, const PrecisionConfig& cfg);

struct QkBoundResult {
    unsigned k = 0;
    std::optional<Enclosure> a;    // 2^(k+1) zeta(k-1) + 1, for k >= 3
    std::optional<Enclosure> b;    // (k-1) 2^(k+1) zeta(k), for k >= 3
    std::optional<Enclosure> eta;  // a/b^2 evaluated at k = 4
    Enclosure bound;               // threshold on q for the descending chain
};

/// Field-size threshold q_k beyond which F(I_{1,q}) > ... > F(I_{k,q}):
/// the explicit values 11 (k = 2) and 413 (k = 3), and
/// 4.03 (k-1)^2 4^k zeta(k)^2 for k >= 4.
QkBoundResult qk_bound(unsigned k, const PrecisionConfig& cfg);

/// Quadratic-formula threshold (sqrt(4ab^2 + b^4) + 2a + b^2)/2 that the
/// closed-form bound dominates for k >= 4.
Enclosure qk_threshold(unsigned k, const PrecisionConfig& cfg);

struct UniversalBoundResult {
    Enclosure value;  // 1 + e^gamma (1-1/q)^q + sum_{n>=2} pi'(n)/(n(n+1)q^n)
    Verdict verdict;  // value < e^gamma certified?
};

/// The per-q bound that is below e^gamma exactly for 3 <= q <= 19.
/// tail_cutoff controls the truncation; the remainder is enclosed by
/// 1/(N(N+1)). Rejects q = 2 (covered by the 1 + e^gamma/2 constant).
UniversalBoundResult universal_bound_check(const FieldOrder& q, unsigned tail_cutoff,
                                           const PrecisionConfig& cfg);

/// 1 + e^(gamma-1) + (pi^2 - 9)/6 = 1.800153..., the q-independent cap.
Enclosure universal_limit_constant(const PrecisionConfig& cfg);
/// 1 + e^gamma/2 = 1.890536..., the q = 2 cap.
Enclosure q2_bound_constant(const PrecisionConfig& cfg);

enum class Relation { greater, less, undecided };

struct BanksMartinReport {
    FieldOrder q;
    unsigned k_max = 0;
    unsigned cutoff = 0;
    std::vector<SumResult> cells;       // index k-1, k = 1..k_max
    std::vector<Relation> step;         // step[k-1]: F(I_k) vs F(I_{k+1})
    std::vector<Relation> versus_one;   // versus_one[k-1]: F(I_k) vs 1
    std::vector<unsigned> local_minima; // interior k with both neighbors above
    bool fully_decided = false;
};

/// Certified pairwise comparisons of F(I_{k,q}) along k = 1..k_max.
/// Comparisons are emitted only between disjoint enclosures; overlapping
/// cells are reported undecided, never guessed.
BanksMartinReport banks_martin_scan(const FieldOrder& q, unsigned k_max, unsigned cutoff,
                                    SumEngine& engine);

}  // namespace fqsum
