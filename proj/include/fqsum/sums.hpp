#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>

#include "fqsum/counting.hpp"
#include "fqsum/enclosure.hpp"
#include "fqsum/mordell.hpp"

namespace fqsum {

/// Erdos sum over monic irreducibles, F(I_q) = sum_n pi'_q(n)/(n q^n),
/// as partial sum + zeta(2) correction with a tail in [-5 q^(-N/2)/N^2, 0].
Enclosure erdos_sum_irreducibles(const FieldOrder& q, unsigned cutoff,
                                 const PrecisionConfig& cfg,
                                 const IrreducibleCountTable* irr = nullptr);

/// sum_{i<=n} pi'_q(i) log(1 - q^-i), the log of the Mertens product.
Enclosure mertens_log_sum(const FieldOrder& q, unsigned n, const PrecisionConfig& cfg,
                          const IrreducibleCountTable* irr = nullptr);

/// prod_{deg p <= n} (1 - 1/||p||). Exact rational when the product is
/// small enough to expand, enclosure exponentials otherwise.
Enclosure mertens_product(const FieldOrder& q, unsigned n, const PrecisionConfig& cfg,
                          const IrreducibleCountTable* irr = nullptr);

/// Coefficient c_j of q^-j in the expanded Mertens log sum at cutoff n:
/// c_j = sum_{d=1}^{n} 1/(j+d) * sum_{r | (j+d)/d, r <= n/d} mu(r).
mpq_class mertens_coefficient(unsigned n, unsigned long j);

/// Exact head S_{k,N,q} = sum_{k<=n<=kN} Psi'_{k,q}(n,N)/(n q^n).
/// k = 0 yields 0 (the set {1} is excluded).
mpq_class head_sum_exact(const SmoothCountTable& smooth, unsigned k);
Enclosure head_sum(const SmoothCountTable& smooth, unsigned k, const PrecisionConfig& cfg);

struct TailParts {
    Enclosure tail;          // R_{k,N,q}
    Enclosure lower_defect;  // q^(1-N/2)/(q-1) weighted correction
    Enclosure upper_defect;  // 2/(N q^N)
};

/// Tail R plus the two defects of the final enclosure. The Mordell table
/// must be built at level N+1 with k_max >= k.
TailParts tail_estimate(const FieldOrder& q, unsigned k, unsigned cutoff,
                        const PrecisionConfig& cfg, const SmoothCountTable& smooth,
                        const MordellTable& mordell);

struct SumResult {
    FieldOrder q;
    unsigned k = 0;
    unsigned degree_bound = 0;
    Enclosure head;          // S, exact rational outward rounded
    Enclosure tail;          // R
    Enclosure lower_defect;
    Enclosure upper_defect;
    Enclosure value;         // [S + R - lower_defect.hi, S + R + upper_defect.hi]
};

SumResult fkq(const FieldOrder& q, unsigned k, unsigned cutoff, const PrecisionConfig& cfg,
              const SmoothCountTable& smooth, const MordellTable& mordell);

/// Degree cutoffs that reproduce the reference tables out of the box.
unsigned default_cutoff(unsigned long q);

/// Builds and memoizes the count and Mordell tables behind fkq so that
/// scans over many (q, k) cells share work. Optionally persists count
/// tables under cache_dir.
class SumEngine {
public:
    explicit SumEngine(PrecisionConfig cfg) : cfg_(cfg) {}

    const PrecisionConfig& config() const { return cfg_; }
    void set_cache_dir(std::filesystem::path dir) { cache_dir_ = std::move(dir); }

    /// Ensures tables for cells (q, k <= k_max) at this cutoff exist.
    void prepare(const FieldOrder& q, unsigned k_max, unsigned cutoff);

    SumResult fkq_cell(const FieldOrder& q, unsigned k, unsigned cutoff);
    Enclosure erdos(const FieldOrder& q, unsigned cutoff);

    const IrreducibleCountTable& irreducible_table(const FieldOrder& q, unsigned max_degree);
    const SmoothCountTable& smooth_table(const FieldOrder& q, unsigned k_max, unsigned cutoff);
    const MordellTable& mordell_table(unsigned k_max, unsigned level);

private:
    PrecisionConfig cfg_;
    std::optional<std::filesystem::path> cache_dir_;
    std::map<std::pair<unsigned long, unsigned>, std::shared_ptr<IrreducibleCountTable>> irr_;
    std::map<std::tuple<unsigned long, unsigned, unsigned>, std::shared_ptr<SmoothCountTable>> smooth_;
    std::map<std::pair<unsigned, unsigned>, std::shared_ptr<MordellTable>> mordell_;
};

}  // namespace fqsum
