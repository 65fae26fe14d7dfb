#include "heightlab/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace hl {

namespace {
mpfr_prec_t g_default_prec = 128;
}

mpfr_prec_t RealInterval::default_prec() { return g_default_prec; }
void RealInterval::set_default_prec(mpfr_prec_t p) { g_default_prec = p; }

void RealInterval::init(mpfr_prec_t prec) {
    if (prec <= 0) prec = g_default_prec;
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

RealInterval::RealInterval() {
    init(0);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(mpfr_prec_t prec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) {
    init(o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec());
    mpfr_set_prec(hi_, o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::exact(const Rat& q, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exact(long n, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_, n, MPFR_RNDD);
    mpfr_set_si(r.hi_, n, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exact(const Int& n, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::zero(mpfr_prec_t prec) { return RealInterval(prec); }

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_t t;
    mpfr_init2(t, r.prec());
    // lo = min of the four products rounded down, hi = max rounded up.
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero())
        throw std::domain_error("interval division by interval containing 0");
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_t t;
    mpfr_init2(t, r.prec());
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::abs() const {
    RealInterval r(prec());
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec());
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::sqrt() const {
    RealInterval r(prec());
    if (mpfr_sgn(lo_) < 0) {
        if (mpfr_sgn(hi_) < 0) throw std::domain_error("sqrt of negative interval");
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of interval touching 0");
    RealInterval r(prec());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exp() const {
    RealInterval r(prec());
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::log_plus() const {
    RealInterval l = log();
    RealInterval z = zero(prec());
    return max(l, z);
}

RealInterval RealInterval::pow(const Rat& e) const {
    if (e == 0) return exact(1L, prec());
    RealInterval l = log();
    return (l * exact(e, prec())).exp();
}

RealInterval RealInterval::log_of(const Rat& q, mpfr_prec_t prec) {
    return exact(q, prec).log();
}

RealInterval RealInterval::max(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec(), b.prec()));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::min(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec(), b.prec()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::contains(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool RealInterval::definitely_lt(const RealInterval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool RealInterval::definitely_le(const RealInterval& o) const {
    return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool RealInterval::definitely_positive() const { return mpfr_sgn(lo_) > 0; }

bool RealInterval::overlaps(const RealInterval& o) const {
    return !(definitely_lt(o) || o.definitely_lt(*this));
}

double RealInterval::mid_d() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double RealInterval::width_d() const {
    mpfr_t t;
    mpfr_init2(t, prec());
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

Rat RealInterval::hi_rat() const {
    if (!mpfr_number_p(hi_)) throw std::domain_error("non-finite endpoint");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, hi_);
    Rat r(q);
    mpq_clear(q);
    return r;
}

Rat RealInterval::lo_rat() const {
    if (!mpfr_number_p(lo_)) throw std::domain_error("non-finite endpoint");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, lo_);
    Rat r(q);
    mpq_clear(q);
    return r;
}

std::string RealInterval::str(int digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec());
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, fmt, mid);
    mpfr_clear(mid);
    return std::string(buf);
}

}  // namespace hl
