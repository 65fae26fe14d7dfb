#ifndef HEIGHTLAB_INTERVAL_HPP
#define HEIGHTLAB_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace hl {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an enclosure-based decision cannot be separated even at the
/// configured precision cap.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error("precision exhausted: " + what) {}
};

/// Closed real interval [lo, hi] with MPFR endpoints, rounded outward.
/// All arithmetic is directed-rounding, so the result always encloses the
/// exact value. Endpoints carry their own precision; binary operations work
/// at the larger of the operand precisions.
class RealInterval {
public:
    RealInterval();                               // [0, 0] at default precision
    explicit RealInterval(mpfr_prec_t prec);      // [0, 0]
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(const RealInterval& o);
    RealInterval& operator=(RealInterval&& o) noexcept;
    ~RealInterval();

    static mpfr_prec_t default_prec();
    static void set_default_prec(mpfr_prec_t p);

    static RealInterval exact(const Rat& q, mpfr_prec_t prec = 0);
    static RealInterval exact(long n, mpfr_prec_t prec = 0);
    static RealInterval exact(const Int& n, mpfr_prec_t prec = 0);
    static RealInterval zero(mpfr_prec_t prec = 0);
    static RealInterval hull(const RealInterval& a, const RealInterval& b);

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator*(const RealInterval& o) const;
    RealInterval operator/(const RealInterval& o) const;  // requires 0 not in o
    RealInterval operator-() const;
    RealInterval& operator+=(const RealInterval& o) { return *this = *this + o; }
    RealInterval& operator-=(const RealInterval& o) { return *this = *this - o; }
    RealInterval& operator*=(const RealInterval& o) { return *this = *this * o; }
    RealInterval& operator/=(const RealInterval& o) { return *this = *this / o; }

    RealInterval abs() const;
    RealInterval sqrt() const;                 // requires lo >= 0 (clamped at 0)
    RealInterval log() const;                  // requires lo > 0
    RealInterval exp() const;
    RealInterval log_plus() const;             // max(0, log x); requires lo > 0
    RealInterval pow(const Rat& e) const;      // x^e for x with lo > 0
    static RealInterval log_of(const Rat& q, mpfr_prec_t prec = 0);   // q > 0
    static RealInterval max(const RealInterval& a, const RealInterval& b);
    static RealInterval min(const RealInterval& a, const RealInterval& b);

    bool contains_zero() const;
    bool contains(const Rat& q) const;
    bool definitely_lt(const RealInterval& o) const;   // hi < o.lo
    bool definitely_le(const RealInterval& o) const;   // hi <= o.lo
    bool definitely_positive() const;
    bool overlaps(const RealInterval& o) const;

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const;
    double width_d() const;
    Rat hi_rat() const;   // exact value of the upper endpoint
    Rat lo_rat() const;

    std::string str(int digits = 17) const;    // midpoint, deterministic

private:
    mpfr_t lo_, hi_;
    void init(mpfr_prec_t prec);
};

/// Runs `body(prec)` at doubling precisions until it returns a value,
/// starting at `start` and giving up past `cap`. `body` returns
/// std::optional-like via bool+out; here we use exceptions-free lambda
/// convention: body returns true and fills result when the enclosure
/// separated.
template <typename T, typename Body>
T escalate_precision(Body body, mpfr_prec_t start, mpfr_prec_t cap,
                     const std::string& what) {
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        T out;
        if (body(p, out)) return out;
    }
    throw PrecisionExhausted(what);
}

}  // namespace hl

#endif
