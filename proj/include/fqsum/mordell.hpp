#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "fqsum/constants.hpp"
#include "fqsum/enclosure.hpp"

namespace fqsum {

/// M(k, N, a) = sum over k-tuples n_1..n_k >= N of
/// 1 / (n_1 ... n_k (n_1 + ... + n_k + a)).
struct MordellKey {
    unsigned k = 0;        // number of summation variables
    unsigned min_term = 1; // N, smallest allowed summand
    unsigned long shift = 0;

    friend auto operator<=>(const MordellKey&, const MordellKey&) = default;
};

/// Closed form at N = 1 for integer a >= 1:
/// k! sum_{i=0}^{a-1} (-1)^i C(a-1, i) / (i+1)^(k+1), an exact rational.
mpq_class mordell_closed_form_exact(unsigned k, unsigned long a);

/// Exact rational M(k, N, a) for a >= 1 via the shift recurrence
/// M(k, N, a) = (k/a) sum_{b=N}^{N+a-1} M(k-1, N, b), M(0, N, a) = 1/a.
/// Intended for desk-size arguments (tests, spot checks); cost grows like
/// k * (a + k N) exact-rational operations with fast-growing denominators.
mpq_class mordell_exact(unsigned k, unsigned min_term, unsigned long a);

/// All Mordell values at one level L = min_term: rows k = 0..k_max with
/// shifts a = 0..row_cap(k), as rigorous enclosures.
///
/// Rows with a >= 1 are rebuilt at every level from the same-level shift
/// recurrence (all terms positive, so widths stay near rounding level).
/// The a = 0 spine descends from level 1 (where M(k,1,0) = k! zeta(k+1))
/// through the inclusion-exclusion step
///   M(k, N, 0) = sum_{i=0}^{k} (-1)^i C(k,i) M(k-i, N-1, i(N-1)) / (N-1)^i.
class MordellTable {
public:
    static MordellTable build(unsigned k_max, unsigned level, unsigned long extra_shift,
                              mpfr_prec_t prec);

    unsigned k_max() const { return k_max_; }
    unsigned level() const { return level_; }
    unsigned long row_cap(unsigned k) const {
        return static_cast<unsigned long>(k_max_ - k) * level_ + extra_ + 1;
    }
    /// M(k, level, a); a = 0 valid for k >= 1.
    const Enclosure& value(unsigned k, unsigned long a) const;

private:
    MordellTable() = default;
    unsigned k_max_ = 0, level_ = 1;
    unsigned long extra_ = 0;
    std::vector<std::vector<Enclosure>> rows_;  // rows_[k][a], a >= 1 at index a
    std::vector<Enclosure> spine_;              // a = 0, index k (k >= 1)
};

/// Memo for single-key Mordell queries; tables are shared per (k, level).
class MordellCache {
public:
    const MordellTable& table_for(unsigned k_max, unsigned level, unsigned long min_extra,
                                  mpfr_prec_t prec);

private:
    std::map<std::pair<unsigned, unsigned>, MordellTable> tables_;
};

/// Enclosure of M(key). Rejects (k, a) = (0, 0), which diverges.
Enclosure mordell(const MordellKey& key, const PrecisionConfig& cfg, MordellCache& cache);

}  // namespace fqsum
