#include "heightlab/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hl {

// ---------- RatPoly ----------

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rat(0), Rat(1)}); }

Rat RatPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
    return c_[i];
}

Rat RatPoly::lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v = -v;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    RatPoly r = *this;
    std::vector<Rat> q(std::max<long>(0, degree() - d.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat f = r.lead() / d.lead();
        long sh = r.degree() - d.degree();
        q[sh] = f;
        std::vector<Rat> sub(sh + d.c_.size(), Rat(0));
        for (size_t i = 0; i < d.c_.size(); ++i) sub[i + sh] = d.c_[i] * f;
        r = r - RatPoly(std::move(sub));
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.lead());
    return a;
}

std::pair<IntPoly, Rat> RatPoly::clear_denominators() const {
    if (is_zero()) return {IntPoly(), Rat(0)};
    Int l(1);
    for (const auto& v : c_) l = lcm(l, den(v));
    std::vector<Int> w(c_.size());
    Int g(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        w[i] = num(c_[i]) * (l / den(c_[i]));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    for (auto& v : w) v /= g;
    IntPoly p{std::move(w)};
    return {p, make_rat(g, l)};
}

long RatPoly::order_at_zero() const {
    if (is_zero()) throw std::domain_error("order of zero polynomial");
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return 0;  // unreachable
}

// ---------- IntPoly ----------

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly({c}); }

IntPoly IntPoly::from_long(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return IntPoly({Int(0), Int(1)}); }

Int IntPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Int(0);
    return c_[i];
}

Int IntPoly::lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = Rat(c_[i]);
    return RatPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    std::vector<Int> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    if (is_zero() || coeff(0) == 0)
        throw std::domain_error("reversal requires nonzero constant term");
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [q, r] = to_rat().divmod(d.to_rat());
    if (!r.is_zero()) throw std::domain_error("not an exact polynomial division");
    std::vector<Int> w(q.coeffs().size());
    for (size_t i = 0; i < w.size(); ++i) {
        Rat c = q.coeff(static_cast<long>(i));
        if (den(c) != 1) throw std::domain_error("quotient not integral");
        w[i] = num(c);
    }
    return IntPoly(std::move(w));
}

bool IntPoly::divides(const IntPoly& g) const {
    if (is_zero()) return g.is_zero();
    if (g.is_zero()) return true;
    if (g.degree() < degree()) return false;
    auto [q, r] = g.to_rat().divmod(to_rat());
    (void)q;
    return r.is_zero();
}

IntPoly IntPoly::pseudo_rem(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("pseudo_rem by zero");
    IntPoly r = *this;
    Int dl = d.lead();
    long dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        long sh = r.degree() - dd;
        Int rl = r.lead();
        std::vector<Int> sub(sh + d.c_.size(), Int(0));
        for (size_t i = 0; i < d.c_.size(); ++i) sub[i + sh] = d.c_[i] * rl;
        r = r * dl - IntPoly(std::move(sub));
    }
    return r;
}

namespace {
IntPoly normalize_sign(IntPoly p) {
    if (!p.is_zero() && p.lead() < 0) p = -p;
    return p;
}
}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : normalize_sign(b.primitive_part());
    if (b.is_zero()) return normalize_sign(a.primitive_part());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = a.pseudo_rem(b);
        a = std::move(b);
        if (r.is_zero())
            b = IntPoly();
        else
            b = r.primitive_part();
    }
    return normalize_sign(a);
}

long IntPoly::order_at_zero() const {
    if (is_zero()) throw std::domain_error("order of zero polynomial");
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return 0;
}

Int IntPoly::sup_norm() const {
    Int m(0);
    for (const auto& v : c_) m = std::max(m, Int(abs(v)));
    return m;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Int c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part of zero");
    IntPoly g = IntPoly::gcd(f, f.derivative());
    IntPoly s = f.exact_div(g).primitive_part();
    if (s.lead() < 0) s = -s;
    return s;
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    return IntPoly::gcd(f, f.derivative()).degree() == 0;
}

}  // namespace hl
