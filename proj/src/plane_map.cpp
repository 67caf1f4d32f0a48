#include "rxy/plane_map.hpp"

namespace rxy {

namespace {

struct ElemStep {
    Var reduced;  // which component was reduced
    FracElem c;
    unsigned k;
};

PlaneMapQ elem_map(const ElemStep& st, Ring r) {
    // X: (x - c*y^k, y),  Y: (x, y - c*x^k)
    PolyQ mono = (st.reduced == Var::X)
                     ? BiPoly<FracElem>::monomial(r, {0, static_cast<int>(st.k)}, -st.c)
                     : BiPoly<FracElem>::monomial(r, {static_cast<int>(st.k), 0}, -st.c);
    if (st.reduced == Var::X) return {PolyQ::var_x(r) + mono, PolyQ::var_y(r)};
    return {PolyQ::var_x(r), PolyQ::var_y(r) + mono};
}

// Iterated elementary degree reduction: sigma * e_1 * ... * e_n = affine.
// Appends the e_i to `steps` and returns the final affine map.
PlaneMapQ reduce_pass(PlaneMapQ s, std::vector<ElemStep>& steps) {
    const Ring r = s.ring();
    for (;;) {
        const int d1 = s.f1.total_deg(), d2 = s.f2.total_deg();
        if (d1 < 1 || d2 < 1) throw NotAnAutomorphism("component of degree < 1", d1, d2);
        if (d1 <= 1 && d2 <= 1) break;
        const bool reduce_first = (d1 >= d2);  // tie: reduce f1 against f2
        const PolyQ& hi = reduce_first ? s.f1 : s.f2;
        const PolyQ& lo = reduce_first ? s.f2 : s.f1;
        const int dh = std::max(d1, d2), dl = std::min(d1, d2);
        if (dh % dl != 0)
            throw NotAnAutomorphism("leading degrees do not divide", d1, d2);
        const unsigned k = static_cast<unsigned>(dh / dl);
        const PolyQ target = hi.leading_form();
        const PolyQ base = lo.leading_form().pow(k);
        const auto& [e0, c0] = *target.terms().begin();
        auto it = base.terms().find(e0);
        if (it == base.terms().end())
            throw NotAnAutomorphism("leading forms do not match", d1, d2);
        const FracElem c = c0 / it->second;
        if (target != base.scaled(c))
            throw NotAnAutomorphism("leading form is not proportional to a power", d1, d2);
        const PolyQ reduced = hi - lo.pow(k).scaled(c);
        if (reduce_first)
            s.f1 = reduced;
        else
            s.f2 = reduced;
        steps.push_back({reduce_first ? Var::X : Var::Y, c, k});
    }
    const FracElem det = s.f1.coeff(1, 0) * s.f2.coeff(0, 1) - s.f1.coeff(0, 1) * s.f2.coeff(1, 0);
    if (det.is_zero())
        throw NotAnAutomorphism("singular affine part", s.f1.total_deg(), s.f2.total_deg());
    (void)r;
    return s;
}

PlaneMapQ affine_inverse_map(const PlaneMapQ& A) { return to_map(affine_inverse(to_affine(A)), A.ring()); }

}  // namespace

PlaneMapQ to_map(const Factor& f, Ring r) {
    if (std::holds_alternative<Swap>(f)) return PlaneMapQ::swap(r);
    if (const auto* t = std::get_if<Triangular>(&f)) {
        if (t->p.is_zero()) throw Error("triangular factor with zero multiplier");
        if (!t->q.is_univariate_y()) throw Error("triangular factor with x-dependent shift");
        return {PolyQ::var_x(r).scaled(t->p) + t->q, PolyQ::var_y(r)};
    }
    const auto& a = std::get<Affine2>(f);
    PolyQ f1 = PolyQ::var_x(r).scaled(a.a) + PolyQ::var_y(r).scaled(a.b) + PolyQ::constant(a.e);
    PolyQ f2 = PolyQ::var_x(r).scaled(a.c) + PolyQ::var_y(r).scaled(a.d) + PolyQ::constant(a.f);
    if ((a.a * a.d - a.b * a.c).is_zero()) throw Error("affine factor with singular linear part");
    return {f1, f2};
}

PlaneMapQ recompose(const Word& w) {
    PlaneMapQ acc = PlaneMapQ::identity(w.ring);
    for (const Factor& f : w.factors) acc = compose(acc, to_map(f, w.ring));
    return acc;
}

Affine2 to_affine(const PlaneMapQ& s) {
    if (std::max(s.f1.total_deg(), s.f2.total_deg()) > 1) throw Error("map is not affine");
    Affine2 a{s.f1.coeff(1, 0), s.f1.coeff(0, 1), s.f1.coeff(0, 0),
              s.f2.coeff(1, 0), s.f2.coeff(0, 1), s.f2.coeff(0, 0)};
    if ((a.a * a.d - a.b * a.c).is_zero()) throw Error("affine map with singular linear part");
    return a;
}

Affine2 affine_inverse(const Affine2& a) {
    const FracElem D = a.a * a.d - a.b * a.c;
    Affine2 r{a.d / D,  -(a.b / D), (a.b * a.f - a.d * a.e) / D,
              -(a.c / D), a.a / D,  (a.c * a.e - a.a * a.f) / D};
    return r;
}

Word free_reduce(const Word& w) {
    const Ring r = w.ring;
    std::vector<Factor> fs = w.factors;
    const FracElem one = FracElem::one(r);

    auto fixpoint = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < fs.size(); ++i) {
                if (const auto* t = std::get_if<Triangular>(&fs[i]);
                    t && t->p == one && t->q.is_zero()) {
                    fs.erase(fs.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                if (i + 1 < fs.size()) {
                    if (std::holds_alternative<Swap>(fs[i]) &&
                        std::holds_alternative<Swap>(fs[i + 1])) {
                        fs.erase(fs.begin() + static_cast<long>(i),
                                 fs.begin() + static_cast<long>(i) + 2);
                        changed = true;
                        break;
                    }
                    const auto* t1 = std::get_if<Triangular>(&fs[i]);
                    const auto* t2 = std::get_if<Triangular>(&fs[i + 1]);
                    if (t1 && t2) {
                        Triangular m{t1->p * t2->p, t1->q.scaled(t2->p) + t2->q};
                        fs[i] = m;
                        fs.erase(fs.begin() + static_cast<long>(i) + 1);
                        changed = true;
                        break;
                    }
                }
            }
            // absorb affine triangular neighbours of the tail into the tail;
            // the tail's y-row stays x-free under this merge
            if (!changed && fs.size() >= 2 && std::holds_alternative<Affine2>(fs.back())) {
                const Factor& prev = fs[fs.size() - 2];
                if (const auto* t = std::get_if<Triangular>(&prev); t && t->q.total_deg() <= 1) {
                    PlaneMapQ merged = compose(to_map(prev, r), to_map(fs.back(), r));
                    fs.pop_back();
                    fs.back() = to_affine(merged);
                    changed = true;
                }
            }
        }
    };

    fixpoint();
    // a tail whose y-row involves x hides a swap: split it by Bruhat so the
    // word ends in a triangular-affine tail, keeping recomposition exact
    if (!fs.empty()) {
        if (const auto* a = std::get_if<Affine2>(&fs.back()); a && !a->c.is_zero()) {
            const Affine2 t = *a;
            const FracElem det = t.a * t.d - t.b * t.c;
            const Triangular b1{FracElem::one(r), PolyQ::monomial(r, {0, 1}, t.d / t.c)};
            const Affine2 b2{-(det / t.c), t.a, t.e, FracElem::zero(r), t.c, t.f};
            fs.pop_back();
            if (!b1.q.is_zero()) fs.push_back(b1);
            fs.push_back(Swap{});
            fs.push_back(b2);
            fixpoint();
        }
    }
    return {r, std::move(fs)};
}

int rational_length(const Word& w) {
    int swaps = 0;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        if (std::holds_alternative<Swap>(w.factors[i])) ++swaps;
        if (i + 1 < w.factors.size() && std::holds_alternative<Triangular>(w.factors[i]) &&
            std::holds_alternative<Triangular>(w.factors[i + 1]))
            throw Error("rational_length: non-reduced word rejected");
    }
    return swaps;
}

PlaneMapQ invert_over_field(const PlaneMapQ& sigma) {
    std::vector<ElemStep> steps;
    const PlaneMapQ A = reduce_pass(sigma, steps);
    PlaneMapQ inv = PlaneMapQ::identity(sigma.ring());
    for (const ElemStep& st : steps) inv = compose(inv, elem_map(st, sigma.ring()));
    inv = compose(inv, affine_inverse_map(A));
    if (compose(sigma, inv) != PlaneMapQ::identity(sigma.ring()))
        throw Error("internal: inverse verification failed");
    return inv;
}

Word decompose_over_field(const PlaneMapQ& sigma) {
    const Ring r = sigma.ring();
    std::vector<ElemStep> steps1;
    reduce_pass(sigma, steps1);  // rejects non-automorphisms early
    const PlaneMapQ inv = invert_over_field(sigma);

    // sigma_inv * eps_1 * ... * eps_m = B, hence sigma = eps_1 * ... * eps_m * B^-1
    std::vector<ElemStep> steps2;
    const PlaneMapQ B = reduce_pass(inv, steps2);

    Word w{r, {}};
    for (const ElemStep& st : steps2) {
        PolyQ q = BiPoly<FracElem>::monomial(r, {0, static_cast<int>(st.k)}, -st.c);
        if (st.reduced == Var::X) {
            w.factors.push_back(Triangular{FracElem::one(r), q});
        } else {
            w.factors.push_back(Swap{});
            w.factors.push_back(Triangular{FracElem::one(r), q});
            w.factors.push_back(Swap{});
        }
    }
    w.factors.push_back(to_affine(affine_inverse_map(B)));
    w = free_reduce(w);
    if (recompose(w) != sigma) throw Error("internal: decomposition does not recompose");
    return w;
}

bool vde_check(const PlaneMapR& sigma) {
    const RingElem at_origin = jacobian_det(sigma).constant_term();
    if (!at_origin.is_unit()) return false;
    try {
        std::vector<ElemStep> steps;
        reduce_pass(promote(sigma), steps);
        return true;
    } catch (const NotAnAutomorphism&) {
        return false;
    }
}

bool is_triangular(const PlaneMapR& s) {
    // f1 in R*x + R[y]
    if (s.f1.deg_x() != 1) return false;
    for (const auto& [e, c] : s.f1.terms())
        if (e.x >= 1 && !(e.x == 1 && e.y == 0)) return false;
    if (!s.f1.coeff(1, 0).is_unit()) return false;
    // f2 in R*y + R
    if (s.f2.deg_x() > 0) return false;
    if (s.f2.deg_y() != 1) return false;
    return s.f2.coeff(0, 1).is_unit();
}

namespace {
bool z_deg_at_most(const RingElem& c, int d) {
    if (c.ring() == Ring::Int) return true;
    return c.as_poly().deg() <= d;
}
}  // namespace

bool is_affine(const PlaneMapR& s) {
    if (std::max(s.f1.total_deg(), s.f2.total_deg()) > 1) return false;
    const RingElem a = s.f1.coeff(1, 0), b = s.f1.coeff(0, 1);
    const RingElem c = s.f2.coeff(1, 0), d = s.f2.coeff(0, 1);
    if (s.ring() == Ring::PolyZ) {
        // affine as an automorphism of K[x,y,z] fixing z
        if (!z_deg_at_most(a, 0) || !z_deg_at_most(b, 0) || !z_deg_at_most(c, 0) || !z_deg_at_most(d, 0))
            return false;
        if (!z_deg_at_most(s.f1.coeff(0, 0), 1) || !z_deg_at_most(s.f2.coeff(0, 0), 1)) return false;
        return !(a * d - b * c).is_zero();
    }
    return (a * d - b * c).is_unit();
}

bool is_parabolic_3d(const PlaneMapR& s) {
    if (s.ring() != Ring::PolyZ) throw DomainMismatch("parabolic test applies to z-automorphisms");
    return s.f2.deg_x() <= 0;
}

bool is_affine_q(const PlaneMapQ& s) {
    if (std::max(s.f1.total_deg(), s.f2.total_deg()) > 1) return false;
    return !(s.f1.coeff(1, 0) * s.f2.coeff(0, 1) - s.f1.coeff(0, 1) * s.f2.coeff(1, 0)).is_zero();
}

}  // namespace rxy
