#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fqsum/bounds.hpp"
#include "fqsum/cache_io.hpp"
#include "fqsum/constants.hpp"
#include "fqsum/digits.hpp"
#include "fqsum/oracle.hpp"
#include "fqsum/sums.hpp"

namespace {

using nlohmann::json;
using namespace fqsum;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("FQSUM_CACHE_DIR")) {
        if (*env) return std::filesystem::path(env);
    }
    return std::nullopt;
}

unsigned resolve_cutoff(unsigned flag_value, unsigned long q) {
    return flag_value ? flag_value : default_cutoff(q);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "undecided";
    }
}

struct ClaimLog {
    bool any_failed = false;
    bool any_undecided = false;

    void report(const std::string& id, Verdict v, const std::string& detail = "") {
        std::cout << verdict_name(v) << "  " << id;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (v == Verdict::fails) any_failed = true;
        if (v == Verdict::undecided) any_undecided = true;
    }
    void report(const std::string& id, bool ok, const std::string& detail = "") {
        report(id, ok ? Verdict::holds : Verdict::fails, detail);
    }
    int exit_code() const {
        if (any_failed) return kExitClaimFailed;
        if (any_undecided) return kExitUndecided;
        return kExitOk;
    }
};

struct CellOutput {
    unsigned k = 0;
    unsigned long q = 0;
    std::string value;  // certified truncated digits or "undecided"
    std::string lo, hi, defect_lo, defect_hi;
    unsigned certified = 0;
};

CellOutput render_cell(const SumResult& cell, unsigned digit_cap) {
    CellOutput out;
    out.k = cell.k;
    out.q = cell.q.q;
    unsigned certified = max_certified_fractional_digits(cell.value);
    if (digit_cap) certified = std::min(certified, digit_cap);
    out.certified = certified;
    auto digits = certified_truncation(cell.value, certified);
    out.value = (digits && certified > 0) ? *digits : "undecided";
    out.lo = decimal_lower(cell.value, 40);
    out.hi = decimal_upper(cell.value, 40);
    out.defect_lo = decimal_upper(cell.lower_defect, 3);
    out.defect_hi = decimal_upper(cell.upper_defect, 3);
    return out;
}

int cmd_compute(unsigned long q_in, unsigned k, unsigned cutoff_flag, unsigned bits,
                unsigned digits, const std::string& json_path, const std::string& cache_flag) {
    FieldOrder q;
    try {
        q = validate_field_order(q_in);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    unsigned cutoff = resolve_cutoff(cutoff_flag, q.q);
    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    SumEngine engine(cfg);
    if (auto dir = resolve_cache_dir(cache_flag)) engine.set_cache_dir(*dir);

    SumResult cell = engine.fkq_cell(q, k, cutoff);
    unsigned certified = max_certified_fractional_digits(cell.value);
    if (digits > 0 && certified < digits) {
        bool head_limited = mpfr_cmp(cell.lower_defect.hi(), cell.upper_defect.hi()) > 0;
        std::cerr << "error: only " << certified << " fractional digits are certified, "
                  << digits << " requested; limiting defect is the "
                  << (head_limited ? "lower (q^(1-N/2)) correction" : "upper (squarefull) bound")
                  << " - increase --degree-bound or --bits\n";
        return kExitUndecided;
    }
    CellOutput out = render_cell(cell, digits);
    std::cout << out.value << "\n";
    if (!json_path.empty()) {
        json j{{"q", q.q},
               {"k", k},
               {"degree_bound", cutoff},
               {"bits", bits},
               {"value", out.value},
               {"certified_fractional_digits", out.certified},
               {"lo", out.lo},
               {"hi", out.hi},
               {"defect_lo", out.defect_lo},
               {"defect_hi", out.defect_hi}};
        if (json_path == "-") {
            std::cout << j.dump(1) << "\n";
        } else {
            std::ofstream f(json_path);
            f << j.dump(1) << "\n";
        }
    }
    return kExitOk;
}

int cmd_table(const std::vector<unsigned long>& q_list, unsigned k_min, unsigned k_max,
              unsigned cutoff_flag, unsigned bits, unsigned digit_cap, const std::string& format,
              unsigned jobs, const std::string& cache_flag) {
    if (k_min < 1 || k_min > k_max) {
        std::cerr << "error: need 1 <= kmin <= kmax\n";
        return kExitUsage;
    }
    std::vector<FieldOrder> fields;
    for (unsigned long q : q_list) {
        try {
            fields.push_back(validate_field_order(q));
        } catch (const std::invalid_argument& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitUsage;
        }
    }
    std::sort(fields.begin(), fields.end(),
              [](const FieldOrder& a, const FieldOrder& b) { return a.q < b.q; });

    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    auto cache_dir = resolve_cache_dir(cache_flag);
    std::vector<std::vector<SumResult>> results(fields.size());

    if (jobs <= 1) {
        SumEngine engine(cfg);
        if (cache_dir) engine.set_cache_dir(*cache_dir);
        for (size_t i = 0; i < fields.size(); ++i) {
            unsigned cutoff = resolve_cutoff(cutoff_flag, fields[i].q);
            engine.prepare(fields[i], k_max, cutoff);
            for (unsigned k = k_min; k <= k_max; ++k) {
                results[i].push_back(engine.fkq_cell(fields[i], k, cutoff));
            }
        }
    } else {
        // Cells for distinct q are independent; one engine per worker.
        std::atomic<size_t> next{0};
        auto worker = [&] {
            SumEngine engine(cfg);
            if (cache_dir) engine.set_cache_dir(*cache_dir);
            for (size_t i = next.fetch_add(1); i < fields.size(); i = next.fetch_add(1)) {
                unsigned cutoff = resolve_cutoff(cutoff_flag, fields[i].q);
                engine.prepare(fields[i], k_max, cutoff);
                for (unsigned k = k_min; k <= k_max; ++k) {
                    results[i].push_back(engine.fkq_cell(fields[i], k, cutoff));
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<size_t>(jobs, fields.size()); ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) t.join();
    }

    // Deterministic assembly: k ascending, then q ascending.
    if (format == "csv") {
        std::cout << "k,q,value,lo,hi,defect_lo,defect_hi\n";
        for (unsigned k = k_min; k <= k_max; ++k) {
            for (size_t i = 0; i < fields.size(); ++i) {
                CellOutput c = render_cell(results[i][k - k_min], digit_cap);
                std::cout << c.k << "," << c.q << "," << c.value << "," << c.lo << "," << c.hi
                          << "," << c.defect_lo << "," << c.defect_hi << "\n";
            }
        }
    } else {
        json arr = json::array();
        for (unsigned k = k_min; k <= k_max; ++k) {
            for (size_t i = 0; i < fields.size(); ++i) {
                CellOutput c = render_cell(results[i][k - k_min], digit_cap);
                arr.push_back(json{{"k", c.k},
                                   {"q", c.q},
                                   {"value", c.value},
                                   {"lo", c.lo},
                                   {"hi", c.hi},
                                   {"defect_lo", c.defect_lo},
                                   {"defect_hi", c.defect_hi}});
            }
        }
        std::cout << arr.dump(1) << "\n";
    }
    return kExitOk;
}

int verify_mertens(unsigned long q_max, unsigned n_max, unsigned bits) {
    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    ClaimLog log;
    Enclosure eg = exp_gamma(cfg);
    for (unsigned long qv : prime_powers_up_to(q_max)) {
        FieldOrder q = validate_field_order(qv);
        auto irr = IrreducibleCountTable::build(q, n_max);
        bool upper_all = true, lower_all = true;
        std::string fail_detail;
        for (unsigned n = 1; n <= n_max; ++n) {
            Enclosure prod = mertens_product(q, n, cfg, &irr);
            Enclosure ub = div(Enclosure::from_long(1, cfg.precision_bits), mul_ui(eg, n));
            Enclosure lb = div(Enclosure::from_long(1, cfg.precision_bits), mul_ui(eg, n + 1));
            bool upper_ok = certified_leq(prod, ub);
            bool lower_ok = certified_less(lb, prod);
            if (qv == 2 && n == 1) {
                // The single documented exception: the product 1/4 sits
                // below 1/(2 e^gamma).
                if (lower_ok) {
                    lower_all = false;
                    fail_detail = "expected exception at (q,n)=(2,1) did not occur";
                }
                lower_ok = true;
            }
            if (!upper_ok) {
                upper_all = false;
                fail_detail = "n=" + std::to_string(n);
            }
            if (!lower_ok) {
                lower_all = false;
                fail_detail = "n=" + std::to_string(n);
            }
        }
        log.report("mertens-upper-q" + std::to_string(qv) + " product <= 1/(e^gamma n), n <= " +
                       std::to_string(n_max),
                   upper_all, upper_all ? "" : fail_detail);
        log.report("mertens-lower-q" + std::to_string(qv) +
                       " product > 1/(e^gamma (n+1)) away from (2,1), n <= " + std::to_string(n_max),
                   lower_all, lower_all ? "" : fail_detail);
    }
    return log.exit_code();
}

int verify_lemma32(unsigned n_max, unsigned bits) {
    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    ClaimLog log;
    bool c0_ok = true, vanish_ok = true, half_ok = true;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (mertens_coefficient(n, 0) != harmonic(n)) c0_ok = false;
        for (unsigned long j = 1; j <= n / 2; ++j) {
            if (mertens_coefficient(n, j) != 0) vanish_ok = false;
        }
    }
    for (unsigned n = 1; n <= std::min(40u, n_max); ++n) {
        mpq_class cap = harmonic(n) / 2;
        for (unsigned long j = 1; j <= 3ul * n; ++j) {
            if (abs(mertens_coefficient(n, j)) > cap) half_ok = false;
        }
    }
    log.report("lemma32-c0 c_0(n) = H_n, n <= " + std::to_string(n_max), c0_ok);
    log.report("lemma32-vanishing c_j(n) = 0 for 1 <= j <= n/2, n <= " + std::to_string(n_max),
               vanish_ok);
    log.report("lemma32-halfbound |c_j| <= H_n/2 for 1 <= j <= 3n, n <= 40", half_ok);
    for (unsigned long qv : prime_powers_up_to(9)) {
        FieldOrder q = validate_field_order(qv);
        unsigned bn = std::min(40u, n_max);
        auto irr = IrreducibleCountTable::build(q, bn);
        bool bracket_ok = true;
        for (unsigned n = 1; n <= bn; ++n) {
            Enclosure mag = neg(mertens_log_sum(q, n, cfg, &irr));  // the sum is negative
            mpq_class hn = harmonic(n);
            mpq_class eps(1, 2 * (qv - 1) * pow_mpz(qv, n / 2));
            eps.canonicalize();
            mpq_class lo = (1 - eps) * hn, hi = (1 + eps) * hn;
            if (!certified_leq(lo, mag) || !certified_leq(mag, hi)) bracket_ok = false;
        }
        log.report("lemma32-bracket-q" + std::to_string(qv) +
                       " |log product| within (1 +- eps) H_n, n <= " + std::to_string(bn),
                   bracket_ok);
    }
    return log.exit_code();
}

int verify_banks_martin(unsigned long q_in, unsigned k_max, unsigned cutoff_flag, unsigned bits,
                        const std::string& cache_flag) {
    FieldOrder q;
    try {
        q = validate_field_order(q_in);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    unsigned cutoff = resolve_cutoff(cutoff_flag, q.q);
    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    SumEngine engine(cfg);
    if (auto dir = resolve_cache_dir(cache_flag)) engine.set_cache_dir(*dir);
    BanksMartinReport rep = banks_martin_scan(q, k_max, cutoff, engine);

    ClaimLog log;
    for (unsigned k = 1; k + 1 <= k_max; ++k) {
        Relation rel = rep.step[k - 1];
        std::string id = "bm-step-q" + std::to_string(q.q) + " F(I_" + std::to_string(k) +
                         ") vs F(I_" + std::to_string(k + 1) + ")";
        if (rel == Relation::undecided) {
            log.report(id, Verdict::undecided, "overlapping enclosures; raise --degree-bound");
        } else {
            log.report(id, Verdict::holds, rel == Relation::greater ? "decreasing" : "increasing");
        }
    }
    std::ostringstream minima;
    for (unsigned k : rep.local_minima) {
        auto digits = certified_truncation(rep.cells[k - 1].value,
                                           std::min(19u, max_certified_fractional_digits(
                                                             rep.cells[k - 1].value)));
        minima << " k=" << k << " value=" << (digits ? *digits : std::string("?"));
    }
    log.report("bm-minima-q" + std::to_string(q.q),
               rep.fully_decided ? Verdict::holds : Verdict::undecided,
               rep.local_minima.empty() ? "no interior local minimum" : minima.str());
    return log.exit_code();
}

int verify_bounds(unsigned long q_max, unsigned k_max, unsigned cutoff, unsigned bits) {
    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    ClaimLog log;
    SumEngine engine(cfg);
    for (unsigned long qv : prime_powers_up_to(q_max)) {
        FieldOrder q = validate_field_order(qv);
        bool sandwich_ok = true;
        std::string detail;
        engine.prepare(q, k_max, cutoff);
        for (unsigned k = 2; k <= k_max; ++k) {
            SumResult cell = engine.fkq_cell(q, k, cutoff);
            Enclosure ub = fkq_upper_bound(q, k, cfg);
            Enclosure lb = fkq_lower_bound(q, k, cfg);
            if (mpfr_cmp(lb.lo(), cell.value.lo()) > 0 ||
                mpfr_cmp(cell.value.hi(), ub.hi()) > 0) {
                sandwich_ok = false;
                detail = "k=" + std::to_string(k);
            }
        }
        log.report("bounds-sandwich-q" + std::to_string(qv) + " lower <= F(I_k) <= upper, k <= " +
                       std::to_string(k_max),
                   sandwich_ok, detail);
    }
    bool qk_dom = true;
    for (unsigned k = 4; k <= 12; ++k) {
        if (!certified_leq(qk_threshold(k, cfg), qk_bound(k, cfg).bound)) qk_dom = false;
    }
    log.report("bounds-qk-threshold 4.03 (k-1)^2 4^k zeta(k)^2 dominates, k in 4..12", qk_dom);
    bool ratio_ok = true;
    mpq_class ratio_lo(7, 2), ratio_hi(5);
    for (unsigned k = 10; k < 30; ++k) {
        Enclosure ratio = div(qk_bound(k + 1, cfg).bound, qk_bound(k, cfg).bound);
        if (!certified_leq(ratio_lo, ratio) || !certified_less(ratio, ratio_hi)) ratio_ok = false;
    }
    log.report("bounds-qk-ratio bound(k+1)/bound(k) within (3.5, 5) and decreasing toward 4, "
               "k in 10..29",
               ratio_ok);
    return log.exit_code();
}

int verify_universal(unsigned long q_max, unsigned tail_cutoff, unsigned bits) {
    PrecisionConfig cfg{static_cast<mpfr_prec_t>(bits), 0.0};
    ClaimLog log;
    for (unsigned long qv : prime_powers_up_to(q_max)) {
        if (qv < 3) continue;
        FieldOrder q = validate_field_order(qv);
        UniversalBoundResult res = universal_bound_check(q, tail_cutoff, cfg);
        log.report("universal-q" + std::to_string(qv) + " B(q) < e^gamma", res.verdict,
                   "B(q) hi " + decimal_upper(res.value, 8));
    }
    log.report("universal-limit 1 + e^(gamma-1) + (pi^2-9)/6 starts 1.800153",
               certified_truncation(universal_limit_constant(cfg), 6) == "1.800153");
    log.report("universal-q2-constant 1 + e^gamma/2 starts 1.890536",
               certified_truncation(q2_bound_constant(cfg), 6) == "1.890536");
    log.report("universal-egamma e^gamma starts 1.781072",
               certified_truncation(exp_gamma(cfg), 6) == "1.781072");
    return log.exit_code();
}

int verify_oracle(unsigned long q_in, unsigned max_degree) {
    FieldOrder q;
    try {
        q = validate_field_order(q_in);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    ClaimLog log;
    OracleFactorTable oracle = OracleFactorTable::build(q, max_degree);
    auto irr = IrreducibleCountTable::build(q, max_degree);

    bool totals_ok = true, gauss_ok = true;
    for (unsigned n = 1; n <= max_degree; ++n) {
        mpz_class total(0);
        for (unsigned k = 1; k <= n; ++k) total += oracle.pi_k(k, n);
        if (total != pow_mpz(q.q, n)) totals_ok = false;
        if (oracle.pi_prime(n) != irr.at(n)) gauss_ok = false;
    }
    log.report("oracle-totals sum_k pi'_k(n) = q^n", totals_ok);
    log.report("oracle-gauss enumerated pi'(n) matches the Moebius-sum formula", gauss_ok);

    bool psi_ok = true;
    for (unsigned m = 1; m <= max_degree && psi_ok; ++m) {
        auto smooth = SmoothCountTable::build(q, max_degree, m, max_degree, irr);
        for (unsigned k = 0; k <= max_degree; ++k) {
            for (unsigned n = 0; n <= max_degree; ++n) {
                if (oracle.psi(k, n, m) != smooth.psi(k, n)) psi_ok = false;
            }
        }
    }
    log.report("oracle-psi enumerated smooth counts match the multiset-binomial formula", psi_ok);

    // Composition sums: conv^k of the pi' vector.
    bool sf_ok = true, ordered_ok = true;
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
            if (fact * oracle.pi_star_k(k, n) > conv[n]) sf_ok = false;
            if (fact * oracle.pi_k(k, n) < conv[n]) ordered_ok = false;
        }
    }
    log.report("oracle-squarefree k! pi*_k(n) <= composition sum", sf_ok);
    log.report("oracle-ordered k! pi'_k(n) >= composition sum", ordered_ok);
    return log.exit_code();
}

int cmd_cache(const std::string& action, const std::string& kind, unsigned long q_in,
              unsigned k_max, unsigned cutoff_flag, const std::string& cache_flag) {
    auto dir = resolve_cache_dir(cache_flag);
    if (!dir) {
        std::cerr << "error: no cache directory (use --cache-dir or FQSUM_CACHE_DIR)\n";
        return kExitUsage;
    }
    if (action == "inspect") {
        auto entries = inspect_cache(*dir);
        for (const auto& e : entries) {
            std::cout << (e.valid ? "ok      " : "invalid ") << e.file << "  kind=" << e.kind
                      << " q=" << e.q << " " << e.params << "  " << e.detail << "\n";
        }
        std::cout << entries.size() << " cache file(s)\n";
        return kExitOk;
    }
    if (action == "clear") {
        size_t removed = 0;
        if (std::filesystem::exists(*dir)) {
            for (const auto& e : std::filesystem::directory_iterator(*dir)) {
                if (e.path().extension() != ".json") continue;
                std::string name = e.path().filename().string();
                if (!kind.empty() && kind != "all" && name.rfind(kind, 0) != 0) continue;
                if (q_in != 0 && name.find("_q" + std::to_string(q_in) + "_") == std::string::npos)
                    continue;
                std::filesystem::remove(e.path());
                ++removed;
            }
        }
        std::cout << "removed " << removed << " cache file(s)\n";
        return kExitOk;
    }
    if (action == "build") {
        FieldOrder q;
        try {
            q = validate_field_order(q_in);
        } catch (const std::invalid_argument& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return kExitUsage;
        }
        unsigned cutoff = resolve_cutoff(cutoff_flag, q.q);
        if (kind == "irreducible") {
            auto t = IrreducibleCountTable::build(q, cutoff);
            save_irreducible(*dir, t);
            std::cout << "wrote " << irreducible_cache_path(*dir, q, cutoff).string() << " ("
                      << cutoff << " entries)\n";
            return kExitOk;
        }
        if (kind == "smooth") {
            auto irr = IrreducibleCountTable::build(q, cutoff);
            auto t = SmoothCountTable::build(q, k_max, cutoff, k_max * cutoff, irr);
            save_smooth(*dir, t);
            std::cout << "wrote " << smooth_cache_path(*dir, q, k_max, cutoff).string() << "\n";
            return kExitOk;
        }
        std::cerr << "error: cache build kind must be irreducible or smooth\n";
        return kExitUsage;
    }
    std::cerr << "error: unknown cache action\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified Erdos sums over F_q[x]: irreducible counts, F(I_{k,q}) enclosures, "
                 "and claim verification suites"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Certified value of F(I_{k,q})");
    unsigned long c_q = 2;
    unsigned c_k = 1, c_cutoff = 0, c_bits = 256, c_digits = 0;
    std::string c_json, c_cache;
    compute->add_option("--q", c_q, "Field order (prime power)")->required();
    compute->add_option("--k", c_k, "Number of irreducible factors")->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--degree-bound", c_cutoff, "Head cutoff N (default per q)");
    compute->add_option("--bits", c_bits, "Working precision in bits")->check(CLI::Range(64u, 16384u));
    compute->add_option("--digits", c_digits, "Required certified fractional digits");
    compute->add_option("--json", c_json, "Write a JSON sidecar (path or - for stdout)");
    compute->add_option("--cache-dir", c_cache, "Count-table cache directory");

    // table
    auto* table = app.add_subcommand("table", "Grid of F(I_{k,q}) cells (CSV or JSON)");
    std::vector<unsigned long> t_q{2, 3, 4, 5, 7};
    unsigned t_kmin = 1, t_kmax = 10, t_cutoff = 0, t_bits = 256, t_digits = 0, t_jobs = 1;
    std::string t_format = "csv", t_cache;
    table->add_option("--q", t_q, "Field orders")->delimiter(',');
    table->add_option("--kmin", t_kmin, "Smallest k");
    table->add_option("--kmax", t_kmax, "Largest k");
    table->add_option("--degree-bound", t_cutoff, "Head cutoff N (default per q)");
    table->add_option("--bits", t_bits, "Working precision in bits")->check(CLI::Range(64u, 16384u));
    table->add_option("--digits", t_digits, "Cap on printed fractional digits");
    table->add_option("--format", t_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--jobs", t_jobs, "Concurrent workers over q")->check(CLI::PositiveNumber);
    table->add_option("--cache-dir", t_cache, "Count-table cache directory");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a certified claim suite");
    verify->require_subcommand(1);
    auto* v_mertens = verify->add_subcommand("mertens", "Mertens product bounds");
    unsigned long vm_qmax = 16;
    unsigned vm_nmax = 40, vm_bits = 256;
    v_mertens->add_option("--qmax", vm_qmax, "Largest field order");
    v_mertens->add_option("--nmax", vm_nmax, "Largest cutoff degree");
    v_mertens->add_option("--bits", vm_bits, "Precision");

    auto* v_lemma = verify->add_subcommand("lemma32", "Mertens log-sum coefficients");
    unsigned vl_nmax = 60, vl_bits = 256;
    v_lemma->add_option("--nmax", vl_nmax, "Largest cutoff degree");
    v_lemma->add_option("--bits", vl_bits, "Precision");

    auto* v_bm = verify->add_subcommand("banks-martin", "Descending-chain scan for one q");
    unsigned long vb_q = 2;
    unsigned vb_kmax = 10, vb_cutoff = 0, vb_bits = 256;
    std::string vb_cache;
    v_bm->add_option("--q", vb_q, "Field order")->required();
    v_bm->add_option("--kmax", vb_kmax, "Largest k");
    v_bm->add_option("--degree-bound", vb_cutoff, "Head cutoff N (default per q)");
    v_bm->add_option("--bits", vb_bits, "Precision");
    v_bm->add_option("--cache-dir", vb_cache, "Count-table cache directory");

    auto* v_bounds = verify->add_subcommand("bounds", "Closed-form sandwich and q_k checks");
    unsigned long vo_qmax = 16;
    unsigned vo_kmax = 10, vo_cutoff = 40, vo_bits = 256;
    v_bounds->add_option("--qmax", vo_qmax, "Largest field order");
    v_bounds->add_option("--kmax", vo_kmax, "Largest k");
    v_bounds->add_option("--degree-bound", vo_cutoff, "Head cutoff N for the cells");
    v_bounds->add_option("--bits", vo_bits, "Precision");

    auto* v_univ = verify->add_subcommand("universal", "Per-q primitive-set bound vs e^gamma");
    unsigned long vu_qmax = 19;
    unsigned vu_cutoff = 400, vu_bits = 256;
    v_univ->add_option("--qmax", vu_qmax, "Largest field order");
    v_univ->add_option("--tail-cutoff", vu_cutoff, "Series truncation");
    v_univ->add_option("--bits", vu_bits, "Precision");

    auto* v_oracle = verify->add_subcommand("oracle", "Exhaustive enumeration cross-checks");
    unsigned long vr_q = 2;
    unsigned vr_maxdeg = 12;
    v_oracle->add_option("--q", vr_q, "Field order (<= 9)")->required();
    v_oracle->add_option("--maxdeg", vr_maxdeg, "Largest degree to enumerate (<= 15)");

    // cache
    auto* cache = app.add_subcommand("cache", "Manage on-disk count tables");
    std::string ca_action, ca_kind, ca_cache;
    unsigned long ca_q = 0;
    unsigned ca_kmax = 10, ca_cutoff = 0;
    cache->add_option("action", ca_action, "build | inspect | clear")->required()
        ->check(CLI::IsMember({"build", "inspect", "clear"}));
    cache->add_option("kind", ca_kind, "irreducible | smooth | all");
    cache->add_option("--q", ca_q, "Field order");
    cache->add_option("--kmax", ca_kmax, "Factor bound for smooth tables");
    cache->add_option("--degree-bound", ca_cutoff, "Cutoff N (default per q)");
    cache->add_option("--cache-dir", ca_cache, "Cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(c_q, c_k, c_cutoff, c_bits, c_digits, c_json, c_cache);
        }
        if (table->parsed()) {
            return cmd_table(t_q, t_kmin, t_kmax, t_cutoff, t_bits, t_digits, t_format, t_jobs,
                             t_cache);
        }
        if (verify->parsed()) {
            if (v_mertens->parsed()) return verify_mertens(vm_qmax, vm_nmax, vm_bits);
            if (v_lemma->parsed()) return verify_lemma32(vl_nmax, vl_bits);
            if (v_bm->parsed()) {
                return verify_banks_martin(vb_q, vb_kmax, vb_cutoff, vb_bits, vb_cache);
            }
            if (v_bounds->parsed()) return verify_bounds(vo_qmax, vo_kmax, vo_cutoff, vo_bits);
            if (v_univ->parsed()) return verify_universal(vu_qmax, vu_cutoff, vu_bits);
            if (v_oracle->parsed()) return verify_oracle(vr_q, vr_maxdeg);
        }
        if (cache->parsed()) {
            return cmd_cache(ca_action, ca_kind, ca_q, ca_kmax, ca_cutoff, ca_cache);
        }
    } catch (const oracle_budget_exceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitClaimFailed;
    }
    return kExitUsage;
}
