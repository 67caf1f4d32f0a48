#pragma once

// Sparse bivariate polynomials in x and y with exact coefficients.
// BiPoly<RingElem> lives in R[x,y], BiPoly<FracElem> in qt(R)[x,y];
// ModPoly couples a BiPoly<RingElem> with a modulus to represent (R/pR)[x,y].

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rxy/rings.hpp"

namespace rxy {

// degree of the zero polynomial
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

struct Exp {
    int x = 0, y = 0;
    bool operator<(const Exp& o) const { return x != o.x ? x < o.x : y < o.y; }
    bool operator==(const Exp& o) const { return x == o.x && y == o.y; }
    int total() const { return x + y; }
};

template <class C>
class BiPoly {
  public:
    explicit BiPoly(Ring r = Ring::Int) : ring_(r) {}

    static BiPoly zero(Ring r) { return BiPoly(r); }
    static BiPoly constant(const C& c) {
        BiPoly p(c.ring());
        p.add_term({0, 0}, c);
        return p;
    }
    static BiPoly var_x(Ring r) {
        BiPoly p(r);
        p.add_term({1, 0}, C::one(r));
        return p;
    }
    static BiPoly var_y(Ring r) {
        BiPoly p(r);
        p.add_term({0, 1}, C::one(r));
        return p;
    }
    static BiPoly monomial(Ring r, Exp e, const C& c) {
        BiPoly p(r);
        p.add_term(e, c);
        return p;
    }
    // polynomial in y only, coeffs[k] multiplying y^k
    static BiPoly from_y_coeffs(Ring r, const std::vector<C>& coeffs) {
        BiPoly p(r);
        for (size_t k = 0; k < coeffs.size(); ++k) p.add_term({0, static_cast<int>(k)}, coeffs[k]);
        return p;
    }

    Ring ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, C>& terms() const { return terms_; }

    C coeff(int i, int j) const {
        auto it = terms_.find(Exp{i, j});
        return it == terms_.end() ? C::zero(ring_) : it->second;
    }
    C constant_term() const { return coeff(0, 0); }

    int deg_x() const {
        int d = kDegNegInf;
        for (const auto& [e, c] : terms_) d = std::max(d, e.x);
        return d;
    }
    int deg_y() const {
        int d = kDegNegInf;
        for (const auto& [e, c] : terms_) d = std::max(d, e.y);
        return d;
    }
    int total_deg() const {
        int d = kDegNegInf;
        for (const auto& [e, c] : terms_) d = std::max(d, e.total());
        return d;
    }
    bool is_univariate_y() const { return deg_x() <= 0; }

    void add_term(Exp e, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiPoly operator+(const BiPoly& o) const {
        check_same(o);
        BiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    BiPoly operator-(const BiPoly& o) const { return *this + (-o); }
    BiPoly operator-() const {
        BiPoly r(ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    BiPoly operator*(const BiPoly& o) const {
        check_same(o);
        BiPoly r(ring_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term({e1.x + e2.x, e1.y + e2.y}, c1 * c2);
        return r;
    }
    BiPoly scaled(const C& k) const {
        BiPoly r(ring_);
        if (k.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * k);
        return r;
    }
    bool operator==(const BiPoly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly pow(unsigned n) const {
        BiPoly acc = constant(C::one(ring_));
        BiPoly base = *this;
        while (n) {
            if (n & 1u) acc = acc * base;
            base = base * base;
            n >>= 1u;
        }
        return acc;
    }

    // top homogeneous part with respect to total degree
    BiPoly leading_form() const {
        BiPoly r(ring_);
        int d = total_deg();
        for (const auto& [e, c] : terms_)
            if (e.total() == d) r.terms_.emplace(e, c);
        return r;
    }

    // coefficients of a polynomial that is univariate in y
    std::vector<C> y_coeffs() const {
        if (!is_univariate_y()) throw Error("polynomial is not univariate in y");
        std::vector<C> out(static_cast<size_t>(std::max(0, deg_y() + 1)), C::zero(ring_));
        for (const auto& [e, c] : terms_) out[static_cast<size_t>(e.y)] = c;
        return out;
    }

    std::string str() const;

  private:
    void check_same(const BiPoly& o) const {
        if (ring_ != o.ring_) throw DomainMismatch("bivariate polynomials over different base rings");
    }
    Ring ring_;
    std::map<Exp, C> terms_;  // no zero coefficients stored
};

using PolyR = BiPoly<RingElem>;
using PolyQ = BiPoly<FracElem>;

// F(gx, gy), expanded and normalized
template <class C>
BiPoly<C> substitute(const BiPoly<C>& F, const BiPoly<C>& gx, const BiPoly<C>& gy) {
    if (F.ring() != gx.ring() || F.ring() != gy.ring())
        throw DomainMismatch("substitute: mixed coefficient domains");
    // cache powers of gx and gy
    int dx = std::max(0, F.deg_x()), dy = std::max(0, F.deg_y());
    std::vector<BiPoly<C>> px, py;
    px.reserve(static_cast<size_t>(dx) + 1);
    py.reserve(static_cast<size_t>(dy) + 1);
    px.push_back(BiPoly<C>::constant(C::one(F.ring())));
    py.push_back(BiPoly<C>::constant(C::one(F.ring())));
    for (int i = 1; i <= dx; ++i) px.push_back(px.back() * gx);
    for (int j = 1; j <= dy; ++j) py.push_back(py.back() * gy);
    BiPoly<C> out(F.ring());
    for (const auto& [e, c] : F.terms())
        out = out + (px[static_cast<size_t>(e.x)] * py[static_cast<size_t>(e.y)]).scaled(c);
    return out;
}

// composition Q(S) for Q univariate in y
template <class C>
BiPoly<C> compose_y(const BiPoly<C>& Q, const BiPoly<C>& S) {
    if (!Q.is_univariate_y()) throw Error("compose_y: left operand must be univariate in y");
    return substitute(Q, BiPoly<C>::zero(Q.ring()), S);
}

enum class Var { X, Y };

template <class C>
BiPoly<C> partial(const BiPoly<C>& F, Var v) {
    BiPoly<C> out(F.ring());
    for (const auto& [e, c] : F.terms()) {
        int k = (v == Var::X) ? e.x : e.y;
        if (k == 0) continue;
        Exp d = (v == Var::X) ? Exp{e.x - 1, e.y} : Exp{e.x, e.y - 1};
        out.add_term(d, c * C::from_int(F.ring(), k));
    }
    return out;
}

template <class C>
BiPoly<C> eval_shift(const BiPoly<C>& F, const C& cx, const C& cy) {
    return substitute(F, BiPoly<C>::constant(cx), BiPoly<C>::constant(cy));
}

inline PolyQ promote(const PolyR& F) {
    PolyQ out(F.ring());
    for (const auto& [e, c] : F.terms()) out.add_term(e, FracElem(c));
    return out;
}

inline bool is_integral(const PolyQ& F) {
    for (const auto& [e, c] : F.terms())
        if (!c.is_integral()) return false;
    return true;
}

inline PolyR to_integral(const PolyQ& F) {
    PolyR out(F.ring());
    for (const auto& [e, c] : F.terms()) out.add_term(e, c.to_ring());
    return out;
}

// coefficient-wise exact division by a ring element
inline PolyR poly_exact_div(const PolyR& F, const RingElem& m) {
    PolyR out(F.ring());
    for (const auto& [e, c] : F.terms()) out.add_term(e, exact_div(c, m));
    return out;
}

struct ClearedPoly {
    RingElem multiplier;  // m in U(R), minimal
    PolyR poly;           // m * F
};

inline ClearedPoly clear_denominators(const PolyQ& F) {
    RingElem m = RingElem::one(F.ring());
    for (const auto& [e, c] : F.terms()) m = lcm(m, c.den());
    PolyQ scaledF = F.scaled(FracElem(m));
    return {m, to_integral(scaledF)};
}

// ---------------------------------------------------------------------------
// ModPoly: BiPoly over R/pR with canonical coefficient representatives
// ---------------------------------------------------------------------------

class ModPoly {
  public:
    ModPoly(PolyR rep, RingElem mod) : rep_(std::move(rep)), mod_(std::move(mod)) {
        if (mod_.is_zero()) throw ZeroModulus();
        reduce();
    }

    const PolyR& rep() const { return rep_; }
    const RingElem& mod() const { return mod_; }
    bool is_zero() const { return rep_.is_zero(); }

    ModPoly operator+(const ModPoly& o) const {
        check_same(o);
        return ModPoly(rep_ + o.rep_, mod_);
    }
    ModPoly operator-(const ModPoly& o) const {
        check_same(o);
        return ModPoly(rep_ - o.rep_, mod_);
    }
    ModPoly operator*(const ModPoly& o) const {
        check_same(o);
        return ModPoly(rep_ * o.rep_, mod_);
    }
    bool operator==(const ModPoly& o) const { return mod_ == o.mod_ && rep_ == o.rep_; }
    bool operator!=(const ModPoly& o) const { return !(*this == o); }

    std::string str() const { return rep_.str() + " mod " + mod_.str(); }

  private:
    void check_same(const ModPoly& o) const {
        if (!(mod_ == o.mod_)) throw DomainMismatch("mod-polynomials with different moduli");
    }
    void reduce() {
        PolyR out(rep_.ring());
        for (const auto& [e, c] : rep_.terms()) out.add_term(e, canonical_rem(c, mod_));
        rep_ = out;
    }
    PolyR rep_;
    RingElem mod_;
};

// coefficient-wise canonical morphism R[x,y] -> (R/pR)[x,y]
inline ModPoly reduce_mod(const PolyR& F, const RingElem& p) { return ModPoly(F, p); }

// ---------------------------------------------------------------------------
// canonical rendering (graded lexicographic, highest grade first, x before y)
// ---------------------------------------------------------------------------

namespace detail {
inline bool needs_parens(const std::string& s) {
    return s.find(' ') != std::string::npos;
}
}  // namespace detail

template <class C>
std::string BiPoly<C>::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exp, C>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
        return b.first < a.first;  // x-major within a grade
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        std::string s = c.str();
        char sign = '+';
        if (!detail::needs_parens(s) && !s.empty() && s[0] == '-') {
            sign = '-';
            s = s.substr(1);
        }
        if (first) {
            if (sign == '-') os << "-";
            first = false;
        } else {
            os << ' ' << sign << ' ';
        }
        if (detail::needs_parens(s)) s = "(" + s + ")";
        bool have_vars = (e.x > 0 || e.y > 0);
        bool coeff_shown = (s != "1" || !have_vars);
        if (coeff_shown) os << s;
        if (e.x > 0) {
            if (coeff_shown) os << '*';
            os << 'x';
            if (e.x > 1) os << '^' << e.x;
            coeff_shown = true;
        }
        if (e.y > 0) {
            if (coeff_shown) os << '*';
            os << 'y';
            if (e.y > 1) os << '^' << e.y;
        }
    }
    return os.str();
}

}  // namespace rxy
