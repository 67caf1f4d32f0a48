#include "rxy/rings.hpp"

#include <algorithm>
#include <sstream>

namespace rxy {

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly UniPoly::monomial(int k, const mpq_class& coeff) {
    UniPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, mpq_class(0));
        p.c_.back() = coeff;
    }
    return p;
}

const mpq_class& UniPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const mpq_class& k) const {
    if (k == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
    r.trim();
    return r;
}

mpq_class UniPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw DivisionError("polynomial division by zero");
    q = UniPoly();
    r = a;
    const int db = b.deg();
    while (!r.is_zero() && r.deg() >= db) {
        int k = r.deg() - db;
        mpq_class c = r.leading() / b.leading();
        UniPoly m = UniPoly::monomial(k, c);
        q = q + m;
        r = r - m * b;
    }
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(1 / x.leading());  // monic
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpq_class a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool coeff_shown = (a != 1 || i == 0);
        if (coeff_shown) os << a.get_str();
        if (i > 0) {
            if (coeff_shown) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RingElem
// ---------------------------------------------------------------------------

const mpz_class& RingElem::as_int() const {
    if (ring() != Ring::Int) throw DomainMismatch("expected an integer ring element");
    return std::get<mpz_class>(v_);
}

const UniPoly& RingElem::as_poly() const {
    if (ring() != Ring::PolyZ) throw DomainMismatch("expected a Q[z] ring element");
    return std::get<UniPoly>(v_);
}

void RingElem::check_same(const RingElem& o) const {
    if (ring() != o.ring()) throw DomainMismatch("mixed base rings in one computation");
}

bool RingElem::is_zero() const {
    return ring() == Ring::Int ? as_int() == 0 : as_poly().is_zero();
}

bool RingElem::is_one() const {
    if (ring() == Ring::Int) return as_int() == 1;
    const UniPoly& p = as_poly();
    return p.deg() == 0 && p.coeff(0) == 1;
}

bool RingElem::is_unit() const {
    if (ring() == Ring::Int) return as_int() == 1 || as_int() == -1;
    return as_poly().deg() == 0;
}

RingElem RingElem::operator+(const RingElem& o) const {
    check_same(o);
    if (ring() == Ring::Int) return RingElem(mpz_class(as_int() + o.as_int()));
    return RingElem(as_poly() + o.as_poly());
}

RingElem RingElem::operator-(const RingElem& o) const {
    check_same(o);
    if (ring() == Ring::Int) return RingElem(mpz_class(as_int() - o.as_int()));
    return RingElem(as_poly() - o.as_poly());
}

RingElem RingElem::operator*(const RingElem& o) const {
    check_same(o);
    if (ring() == Ring::Int) return RingElem(mpz_class(as_int() * o.as_int()));
    return RingElem(as_poly() * o.as_poly());
}

RingElem RingElem::operator-() const {
    if (ring() == Ring::Int) return RingElem(mpz_class(-as_int()));
    return RingElem(-as_poly());
}

bool RingElem::operator==(const RingElem& o) const {
    if (ring() != o.ring()) return false;
    if (ring() == Ring::Int) return as_int() == o.as_int();
    return as_poly() == o.as_poly();
}

std::string RingElem::str() const {
    return ring() == Ring::Int ? as_int().get_str() : as_poly().str();
}

UnitNormal normalize_unit(const RingElem& r) {
    if (r.is_zero()) throw Error("normalize_unit: zero input rejected");
    if (r.ring() == Ring::Int) {
        int s = sgn(r.as_int());
        return {RingElem(mpz_class(s)), RingElem(mpz_class(abs(r.as_int())))};
    }
    const mpq_class lt = r.as_poly().leading();
    return {RingElem(UniPoly(lt)), RingElem(r.as_poly().scaled(1 / lt))};
}

RingElem unit_inverse(const RingElem& u) {
    if (!u.is_unit()) throw DivisionError("inverse of a non-unit in R");
    if (u.ring() == Ring::Int) return u;  // +-1 are self-inverse
    return RingElem(UniPoly(1 / u.as_poly().coeff(0)));
}

bool divides(const RingElem& b, const RingElem& a) {
    if (b.is_zero()) return a.is_zero();
    if (b.ring() == Ring::Int) {
        if (a.ring() != Ring::Int) throw DomainMismatch("mixed base rings");
        return mpz_divisible_p(a.as_int().get_mpz_t(), b.as_int().get_mpz_t()) != 0;
    }
    UniPoly q, r;
    UniPoly::divmod(a.as_poly(), b.as_poly(), q, r);
    return r.is_zero();
}

RingElem exact_div(const RingElem& a, const RingElem& b) {
    if (b.is_zero()) throw DivisionError("division by zero");
    if (b.ring() == Ring::Int) {
        if (!divides(b, a)) throw DivisionError("inexact division in Z");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
        return RingElem(q);
    }
    UniPoly q, r;
    UniPoly::divmod(a.as_poly(), b.as_poly(), q, r);
    if (!r.is_zero()) throw DivisionError("inexact division in Q[z]");
    return RingElem(q);
}

RingElem canonical_rem(const RingElem& a, const RingElem& p) {
    if (p.is_zero()) throw ZeroModulus();
    if (p.ring() == Ring::Int) {
        mpz_class m = abs(p.as_int());
        mpz_class r;
        mpz_mod(r.get_mpz_t(), a.as_int().get_mpz_t(), m.get_mpz_t());  // in [0, m)
        return RingElem(r);
    }
    UniPoly q, r;
    UniPoly::divmod(a.as_poly(), p.as_poly(), q, r);
    return RingElem(r);
}

BezoutResult gcd_bezout(const RingElem& a, const RingElem& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd_bezout: both-zero input rejected");
    const Ring R = a.ring();
    if (b.ring() != R) throw DomainMismatch("mixed base rings");
    if (a.is_zero()) {
        UnitNormal n = normalize_unit(b);
        return {n.canonical, RingElem::zero(R), unit_inverse(n.unit)};
    }
    if (b.is_zero()) {
        UnitNormal n = normalize_unit(a);
        return {n.canonical, unit_inverse(n.unit), RingElem::zero(R)};
    }
    // extended Euclid
    RingElem r0 = a, r1 = b;
    RingElem s0 = RingElem::one(R), s1 = RingElem::zero(R);
    RingElem t0 = RingElem::zero(R), t1 = RingElem::one(R);
    while (!r1.is_zero()) {
        RingElem q = [&] {
            if (R == Ring::Int) {
                mpz_class quo;
                mpz_tdiv_q(quo.get_mpz_t(), r0.as_int().get_mpz_t(), r1.as_int().get_mpz_t());
                return RingElem(quo);
            }
            UniPoly quo, rem;
            UniPoly::divmod(r0.as_poly(), r1.as_poly(), quo, rem);
            return RingElem(quo);
        }();
        RingElem r2 = r0 - q * r1;
        RingElem s2 = s0 - q * s1;
        RingElem t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    UnitNormal n = normalize_unit(r0);
    RingElem ui = unit_inverse(n.unit);
    RingElem g = n.canonical, s = ui * s0, t = ui * t0;
    // canonicalize t modulo a/g so the output is independent of argument order
    RingElem m = exact_div(a, g);
    if (!m.is_unit()) {
        RingElem tr = canonical_rem(t, m);
        if (R == Ring::Int) {
            // least-absolute representative
            mpz_class mm = abs(m.as_int());
            if (tr.as_int() * 2 > mm) tr = RingElem(mpz_class(tr.as_int() - mm));
        }
        t = tr;
    } else {
        t = RingElem::zero(R);
    }
    s = exact_div(g - t * b, a);
    return {g, s, t};
}

RingElem gcd(const RingElem& a, const RingElem& b) {
    if (a.is_zero() && b.is_zero()) return a;
    return gcd_bezout(a, b).g;
}

RingElem lcm(const RingElem& a, const RingElem& b) {
    if (a.is_zero() || b.is_zero()) return RingElem::zero(a.ring());
    RingElem g = gcd(a, b);
    return normalize_unit(exact_div(a * b, g)).canonical;
}

RingElem pow(const RingElem& a, unsigned e) {
    RingElem acc = RingElem::one(a.ring());
    RingElem base = a;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

RingElem pow_mod(const RingElem& a, unsigned e, const RingElem& p) {
    RingElem acc = canonical_rem(RingElem::one(a.ring()), p);
    RingElem base = canonical_rem(a, p);
    while (e) {
        if (e & 1u) acc = canonical_rem(acc * base, p);
        base = canonical_rem(base * base, p);
        e >>= 1u;
    }
    return acc;
}

unsigned nilpotency_bound(const RingElem& p) {
    if (p.is_zero()) throw ZeroModulus();
    if (p.ring() == Ring::Int) {
        mpz_class m = abs(p.as_int());
        return static_cast<unsigned>(mpz_sizeinbase(m.get_mpz_t(), 2));
    }
    return static_cast<unsigned>(p.as_poly().deg());
}

bool is_nilpotent_mod(const RingElem& a, const RingElem& p) {
    if (p.is_zero()) throw ZeroModulus();
    unsigned e = nilpotency_bound(p);
    return pow_mod(a, e, p).is_zero();
}

bool is_unit_mod(const RingElem& a, const RingElem& p) {
    if (p.is_zero()) throw ZeroModulus();
    return gcd(a, p).is_unit() || p.is_unit();
}

RingElem inverse_mod(const RingElem& a, const RingElem& p) {
    if (p.is_zero()) throw ZeroModulus();
    if (p.is_unit()) return RingElem::zero(a.ring());  // zero ring
    BezoutResult bz = gcd_bezout(a, p);
    if (!bz.g.is_unit()) throw DivisionError("inverse_mod: not a unit modulo p");
    return canonical_rem(unit_inverse(bz.g) * bz.s, p);
}

std::optional<RingElem> radical(const RingElem& p, unsigned long budget) {
    if (p.is_zero()) throw ZeroModulus();
    if (p.ring() == Ring::PolyZ) {
        const UniPoly& f = p.as_poly();
        if (f.deg() == 0) return RingElem::one(Ring::PolyZ);
        UniPoly g = gcd(f, f.derivative());
        UniPoly q, r;
        UniPoly::divmod(f, g, q, r);
        return RingElem(q.scaled(1 / q.leading()));
    }
    mpz_class n = abs(p.as_int());
    if (n == 1) return RingElem(mpz_class(1));
    mpz_class rad(1), d(2);
    while (n > 1) {
        if (d * d > n) {  // remaining cofactor is prime
            rad *= n;
            break;
        }
        if (mpz_cmp_ui(d.get_mpz_t(), budget) > 0) return std::nullopt;
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            rad *= d;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
        }
        d += 1;
    }
    return RingElem(rad);
}

// ---------------------------------------------------------------------------
// FracElem
// ---------------------------------------------------------------------------

FracElem::FracElem(RingElem n, RingElem d) : num_(std::move(n)), den_(std::move(d)) {
    if (num_.ring() != den_.ring()) throw DomainMismatch("fraction with mixed base rings");
    if (den_.is_zero()) throw DivisionError("fraction with zero denominator");
    if (num_.is_zero()) {
        den_ = RingElem::one(num_.ring());
        return;
    }
    RingElem g = gcd(num_, den_);
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
    UnitNormal nu = normalize_unit(den_);
    den_ = nu.canonical;
    num_ = num_ * unit_inverse(nu.unit);
}

FracElem FracElem::from_rational(Ring r, const mpq_class& q) {
    if (r == Ring::Int) return FracElem(RingElem(mpz_class(q.get_num())), RingElem(mpz_class(q.get_den())));
    return FracElem(RingElem(UniPoly(q)));
}

bool FracElem::is_constant() const {
    if (ring() == Ring::Int) return true;
    return den_.is_one() && num_.as_poly().deg() <= 0;
}

mpq_class FracElem::constant_value() const {
    if (ring() == Ring::Int) return mpq_class(num_.as_int(), den_.as_int());
    if (!is_constant()) throw Error("not a constant");
    return num_.as_poly().coeff(0);
}

FracElem FracElem::operator+(const FracElem& o) const {
    return FracElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
FracElem FracElem::operator-(const FracElem& o) const {
    return FracElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
FracElem FracElem::operator*(const FracElem& o) const { return FracElem(num_ * o.num_, den_ * o.den_); }
FracElem FracElem::operator/(const FracElem& o) const {
    if (o.is_zero()) throw DivisionError("division by zero fraction");
    return FracElem(num_ * o.den_, den_ * o.num_);
}
FracElem FracElem::operator-() const {
    FracElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FracElem FracElem::inverse() const {
    if (is_zero()) throw DivisionError("inverse of zero");
    return FracElem(den_, num_);
}

RingElem FracElem::to_ring() const {
    if (!is_integral()) throw DivisionError("fraction is not integral: " + str());
    return num_;
}

std::string FracElem::str() const {
    if (is_integral()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (ring() == Ring::PolyZ) {
        if (num_.as_poly().deg() > 0) n = "(" + n + ")";
        if (den_.as_poly().deg() > 0) d = "(" + d + ")";
    }
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// QuotElem
// ---------------------------------------------------------------------------

QuotElem::QuotElem(RingElem rep, RingElem mod) : rep_(std::move(rep)), mod_(std::move(mod)) {
    if (mod_.is_zero()) throw ZeroModulus();
    if (rep_.ring() != mod_.ring()) throw DomainMismatch("quotient with mixed base rings");
    rep_ = canonical_rem(rep_, mod_);
}

void QuotElem::check_same(const QuotElem& o) const {
    if (!(mod_ == o.mod_)) throw DomainMismatch("quotient elements with different moduli");
}

QuotElem QuotElem::operator+(const QuotElem& o) const {
    check_same(o);
    return QuotElem(rep_ + o.rep_, mod_);
}
QuotElem QuotElem::operator-(const QuotElem& o) const {
    check_same(o);
    return QuotElem(rep_ - o.rep_, mod_);
}
QuotElem QuotElem::operator*(const QuotElem& o) const {
    check_same(o);
    return QuotElem(rep_ * o.rep_, mod_);
}

std::string QuotElem::str() const { return rep_.str() + " mod " + mod_.str(); }

}  // namespace rxy
