#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace fqsum {

struct PrecisionConfig {
    mpfr_prec_t precision_bits = 256;
    double series_tail_tolerance = 0.0;  // 0 means 2^-(precision_bits + 16)

    mpfr_prec_t working_bits() const { return precision_bits + 32; }
};

/// A rigorous two-sided interval [lo, hi]. Every operation rounds lo toward
/// -inf and hi toward +inf, so the true value of any expression evaluated on
/// enclosures of its inputs is contained in the resulting enclosure.
class Enclosure {
public:
    explicit Enclosure(mpfr_prec_t prec = 256);
    Enclosure(const Enclosure& other);
    Enclosure(Enclosure&& other) noexcept;
    Enclosure& operator=(const Enclosure& other);
    Enclosure& operator=(Enclosure&& other) noexcept;
    ~Enclosure();

    static Enclosure from_long(long v, mpfr_prec_t prec);
    static Enclosure from_ui(unsigned long v, mpfr_prec_t prec);
    static Enclosure from_mpz(const mpz_class& v, mpfr_prec_t prec);
    static Enclosure from_mpq(const mpq_class& v, mpfr_prec_t prec);
    /// Interval [a, b] from exact rationals, outward rounded.
    static Enclosure from_mpq_pair(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec);
    /// Encloses the value whose decimal expansion starts with the given
    /// truncated literal: [literal, literal + 10^-(fractional digits)].
    static Enclosure from_truncated_decimal(const std::string& literal, mpfr_prec_t prec);

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    bool contains_zero() const;
    bool is_strictly_positive() const;  // lo > 0
    bool is_strictly_negative() const;  // hi < 0
    bool contains(const mpq_class& v) const;
    bool contains(const Enclosure& other) const;  // other subseteq this
    bool intersects(const Enclosure& other) const;
    /// width = hi - lo, rounded up, as a double (may be +inf on overflow).
    double width_upper() const;

    std::string str(size_t digits = 30) const;  // "[lo, hi]" for diagnostics

    friend void swap(Enclosure& a, Enclosure& b) noexcept;

private:
    mpfr_t lo_, hi_;
};

// Arithmetic. Result precision is max of operand precisions.
Enclosure add(const Enclosure& a, const Enclosure& b);
Enclosure sub(const Enclosure& a, const Enclosure& b);
Enclosure mul(const Enclosure& a, const Enclosure& b);
Enclosure div(const Enclosure& a, const Enclosure& b);  // throws if 0 in b
Enclosure neg(const Enclosure& a);

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);

/// acc += x without allocating a temporary.
void add_inplace(Enclosure& acc, const Enclosure& x);
void sub_inplace(Enclosure& acc, const Enclosure& x);

Enclosure mul_ui(const Enclosure& a, unsigned long v);
Enclosure div_ui(const Enclosure& a, unsigned long v);
Enclosure mul_mpz(const Enclosure& a, const mpz_class& v);
Enclosure div_mpz(const Enclosure& a, const mpz_class& v);  // v != 0
Enclosure add_mpq(const Enclosure& a, const mpq_class& v);

Enclosure exp_enc(const Enclosure& a);
Enclosure log_enc(const Enclosure& a);   // requires a.lo > 0
Enclosure sqrt_enc(const Enclosure& a);  // requires a.lo >= 0
Enclosure pow_int(const Enclosure& a, long e);

/// True iff a.hi < b.lo (the order is certified by disjointness).
bool certified_less(const Enclosure& a, const Enclosure& b);
bool certified_less(const Enclosure& a, const mpq_class& b);
bool certified_less(const mpq_class& a, const Enclosure& b);
/// a.hi <= b.lo: certifies the non-strict order.
bool certified_leq(const Enclosure& a, const Enclosure& b);
bool certified_leq(const Enclosure& a, const mpq_class& b);
bool certified_leq(const mpq_class& a, const Enclosure& b);

}  // namespace fqsum
