#include "rxy/cotame.hpp"

namespace rxy {

namespace {

PlaneMapR translation_t(Ring r) {
    return {PolyR::var_x(r) + PolyR::constant(RingElem::one(r)), PolyR::var_y(r)};
}

PlaneMapR exact_inverse(const PlaneMapR& s) {
    try {
        return to_integral(invert_over_field(promote(s)));
    } catch (const NotAnAutomorphism&) {
        throw NotAutomorphism3();
    } catch (const DivisionError&) {
        throw NotAutomorphism3();
    }
}

// extract (p1, Q1) from sigma(y) = p1*x + Q1(y)
std::pair<RingElem, PolyR> r1_shape(const PolyR& F) {
    if (F.deg_x() != 1) throw NotR2Presentation("sigma(y) is not of length 1 shape");
    PolyR Q(F.ring());
    RingElem p = RingElem::zero(F.ring());
    for (const auto& [e, c] : F.terms()) {
        if (e.x == 0)
            Q.add_term(e, c);
        else if (e.x == 1 && e.y == 0)
            p = c;
        else
            throw NotR2Presentation("sigma(y) has mixed x-terms");
    }
    if (p.is_zero()) throw NotR2Presentation("sigma(y) has zero x-coefficient");
    return {p, Q};
}

// Q2 with Q2(F) = G for F = p*x + Q(y): greedy extraction along x-degrees
PolyQ extract_composed(const PolyQ& G0, const FracElem& p, const PolyQ& F) {
    const Ring r = G0.ring();
    PolyQ G = G0, Q2(r);
    while (G.deg_x() >= 1) {
        const int k = G.deg_x();
        PolyQ topcoef(r);  // coefficient of x^k, a y-polynomial
        for (const auto& [e, c] : G.terms())
            if (e.x == k) topcoef.add_term({0, e.y}, c);
        if (topcoef.deg_y() > 0) throw Error("extract_composed: not a composition through F");
        FracElem ck = topcoef.constant_term();
        for (int i = 0; i < k; ++i) ck = ck / p;
        Q2.add_term({0, k}, ck);
        G = G - compose_y(PolyQ::monomial(r, {0, k}, ck), F);
    }
    if (!G.is_univariate_y() || G.deg_y() > 0) {
        if (G.deg_y() > 0) throw Error("extract_composed: nonconstant remainder");
    }
    Q2.add_term({0, 0}, G.constant_term());
    return Q2;
}

// the exact unit u with sigma = ((u p1)^-1 (y - Q2(F)), F): u = -det(J sigma)^-1
RingElem rs_unit(const PlaneMapR& sigma) {
    const PolyR det = jacobian_det(sigma);
    const RingElem d0 = det.constant_term();
    if (det != PolyR::constant(d0) || !d0.is_unit())
        throw NotR2Presentation("Jacobian determinant is not a unit constant");
    return unit_inverse(-d0);
}

CotameCertificate base_triangular(const PlaneMapR& sigma, PlaneMapR tau) {
    CotameCertificate c{CotameCertificate::Kind::BaseTriangular, sigma, std::move(tau), {}, {}, {},
                        {}, {}, {}, -1, "Bodnarchuk: triangular non-affine maps are co-tame", nullptr};
    return c;
}

}  // namespace

ThreeMap::ThreeMap(PlaneMapR base_) : base(std::move(base_)) {
    if (base.ring() != Ring::PolyZ) throw DomainMismatch("z-automorphisms live over K[z]");
    if (!vde_check(base)) throw NotAutomorphism3();
}

ThreeMap conjugate_by_translation(const ThreeMap& sigma) {
    const Ring r = sigma.base.ring();
    const PlaneMapR inv = exact_inverse(sigma.base);
    return ThreeMap(compose(compose(sigma.base, translation_t(r)), inv));
}

CotameCertificate certify_cotame_r1_map(const PlaneMapR& sigma) {
    const Ring r = sigma.ring();
    if (r != Ring::PolyZ) throw DomainMismatch("co-tameness certificates live over K[z]");
    if (is_affine(sigma)) throw AffineInput();
    const auto [p1, Q1] = r1_shape(sigma.f2);

    const ThreeMap tm(sigma);
    const PlaneMapR tau = conjugate_by_translation(tm).base;

    if (is_triangular(tau) && !is_affine(tau)) return base_triangular(sigma, tau);

    // tau affine: deg_y Q1 <= 2 with constant quadratic coefficient; the
    // residue criterion then forces p1 constant or a vanishing quadratic part
    const RingElem c = Q1.coeff(0, 2);
    const bool c_zero = c.is_zero();
    const bool p1_unit = p1.is_unit();
    if (!p1_unit && !c_zero)
        throw CotameSearchFailed("translation conjugate is affine but neither p1 in K* nor c = 0");

    if (p1_unit) {
        // sigma = b1 . pi . b2 with b1 = (p1 x + Q1(y), (u p1)^-1 y),
        // b2 = (x - (u p1)^-1 Q2(y), y)
        const RingElem u = rs_unit(sigma);
        const RingElem s = unit_inverse(u * p1);
        const PolyQ G = promote(sigma.f1).scaled(-FracElem(u * p1)) + PolyQ::var_y(r);
        const PolyQ Q2q = extract_composed(G, FracElem(p1), promote(sigma.f2));
        if (!is_integral(Q2q)) throw CotameSearchFailed("extracted Q2 is not integral");
        const PolyR Q2 = to_integral(Q2q);

        PlaneMapR b1{PolyR::var_x(r).scaled(p1) + Q1, PolyR::var_y(r).scaled(s)};
        PlaneMapR a = PlaneMapR::swap(r);
        PlaneMapR b2{PolyR::var_x(r) - Q2.scaled(s), PolyR::var_y(r)};
        if (compose(compose(b1, a), b2) != sigma)
            throw InternalCheckFailed("BAB factorization does not recompose to sigma");
        if (!is_triangular(b1) || !is_triangular(b2) || !is_affine(a))
            throw InternalCheckFailed("BAB factors have the wrong shapes");
        CotameCertificate cert{CotameCertificate::Kind::BaseBAB, sigma, {}, b1, a, b2, {}, {}, {},
                               -1, "Bodnarchuk: bi-triangular non-affine maps are co-tame", nullptr};
        return cert;
    }

    // c = 0 and p1 non-constant: sigma is z-affine; hunt for an affine
    // sandwich turning the y-component x-free (a parabolic presentation)
    for (bool use_swap : {false, true}) {
        const PlaneMapR beta = use_swap ? PlaneMapR::swap(r) : PlaneMapR::identity(r);
        const PlaneMapR M = compose(sigma, beta);
        if (M.f2.deg_x() <= 0) {
            if (!is_parabolic_3d(M) || is_affine(M)) continue;
            CotameCertificate cert{CotameCertificate::Kind::BaseParabolic, sigma, {}, {}, {}, {},
                                   PlaneMapR::identity(r), beta, M, -1,
                                   "Bodnarchuk: parabolic non-affine maps are co-tame", nullptr};
            return cert;
        }
        if (std::max(M.f2.deg_x(), M.f2.deg_y()) > 1) continue;
        // (alpha . M).f2 = P*alpha.f1 + B*alpha.f2 + C with P = [x]M.f2,
        // B = [y]M.f2; its x-coefficient is P*s + B*t for the x-coefficients
        // (s, t) of alpha's components, a 2x2 homogeneous K-system over the
        // z-coefficients of P and B
        const RingElem P = M.f2.coeff(1, 0), B = M.f2.coeff(0, 1);
        if (P.as_poly().deg() > 1 || B.as_poly().deg() > 1) continue;
        auto zc = [](const RingElem& v, int k) { return v.as_poly().coeff(k); };
        const mpq_class P0 = zc(P, 0), P1 = zc(P, 1), B0 = zc(B, 0), B1 = zc(B, 1);
        if (P0 * B1 - P1 * B0 != 0) continue;  // only the singular pencil is solvable with z fixed
        mpq_class s, t;
        if (B0 != 0 || P0 != 0) {
            s = B0;
            t = -P0;
        } else {
            s = B1;
            t = -P1;
        }
        if (s == 0 && t == 0) continue;
        // complete (s, t) to an invertible matrix: alpha = (s x + s2 y, t x + t2 y)
        mpq_class s2 = (s != 0) ? mpq_class(0) : mpq_class(1);
        mpq_class t2 = (s != 0) ? mpq_class(1) : mpq_class(0);
        auto fq = [&](const mpq_class& q) { return RingElem(UniPoly(q)); };
        PlaneMapR alpha{PolyR::var_x(r).scaled(fq(s)) + PolyR::var_y(r).scaled(fq(s2)),
                        PolyR::var_x(r).scaled(fq(t)) + PolyR::var_y(r).scaled(fq(t2))};
        if (!is_affine(alpha)) continue;
        const PlaneMapR theta = compose(alpha, M);
        if (!is_parabolic_3d(theta) || is_affine(theta)) continue;
        CotameCertificate cert{CotameCertificate::Kind::BaseParabolic, sigma, {}, {}, {}, {},
                               alpha, beta, theta, -1,
                               "Bodnarchuk: parabolic non-affine maps are co-tame", nullptr};
        return cert;
    }
    throw CotameSearchFailed("no triangular, BAB or parabolic presentation found (z-affine case)");
}

CotameCertificate certify_cotame_r1(const RingElem& p1, const PolyR& Q1, const RingElem& u) {
    const CoordinateWitness w = construct_rs(p1, Q1, u);
    if (is_affine(w.sigma)) throw AffineInput();
    return certify_cotame_r1_map(w.sigma);
}

namespace {

struct R2Presentation {
    Triangular tau1, tau2, tau3;
};

// normalize a word into [tau1, pi, tau2, pi, tau3]; tolerates an identity
// affine tail and missing outer triangulars
R2Presentation parse_r2_word(const Word& w0) {
    Word w = free_reduce(w0);
    std::vector<Factor> fs = w.factors;
    const Ring r = w.ring;
    if (!fs.empty()) {
        if (const auto* a = std::get_if<Affine2>(&fs.back())) {
            const PlaneMapQ am = to_map(*a, r);
            if (am != PlaneMapQ::identity(r))
                throw NotR2Presentation("word carries a non-identity affine tail");
            fs.pop_back();
        }
    }
    const Triangular id{FracElem::one(r), PolyQ(r)};
    std::vector<Triangular> taus;
    int swaps = 0;
    bool expect_tri = true;
    for (const Factor& f : fs) {
        if (std::holds_alternative<Swap>(f)) {
            if (expect_tri) taus.push_back(id);  // missing triangular
            ++swaps;
            expect_tri = true;
        } else if (const auto* t = std::get_if<Triangular>(&f)) {
            if (!expect_tri) throw NotR2Presentation("adjacent triangular factors");
            taus.push_back(*t);
            expect_tri = false;
        } else {
            throw NotR2Presentation("unexpected affine factor inside the word");
        }
    }
    if (expect_tri) taus.push_back(id);
    if (swaps != 2 || taus.size() != 3)
        throw NotR2Presentation("expected exactly two swap factors and three triangulars, got " +
                                std::to_string(swaps) + " swaps");
    return {taus[0], taus[1], taus[2]};
}

CotameCertificate certify_r2_rec(const R2Presentation& pres, const PlaneMapR& sigma, int depth) {
    const Ring r = sigma.ring();
    if (depth > 64) throw CotameSearchFailed("recursion depth exceeded");
    if (is_affine(sigma)) throw CotameSearchFailed("conjugation became affine during the recursion");

    const int dmid = pres.tau2.q.deg_y();
    if (dmid <= 1) {
        // Bruhat collapse: pi tau2 pi is affine, sigma(y) has length 1 shape
        CotameCertificate node{CotameCertificate::Kind::CollapseToR1, sigma, {}, {}, {}, {}, {}, {},
                               {}, dmid, "", nullptr};
        node.child = std::make_unique<CotameCertificate>(certify_cotame_r1_map(sigma));
        return node;
    }

    // tau = sigma t sigma^-1 = tau1 pi tau4 pi (x + p3^-1, y) tau1^-1 with
    // tau4 = (x + p2^-1(Q2(y) - Q2(y + p3^-1)), y)
    const ThreeMap tm(sigma);
    const PlaneMapR tau = conjugate_by_translation(tm).base;

    const FracElem delta = pres.tau3.p.inverse();
    const PolyQ y = PolyQ::var_y(r);
    const PolyQ shifted = compose_y(pres.tau2.q, y + PolyQ::constant(delta));
    const PolyQ D = (pres.tau2.q - shifted).scaled(pres.tau2.p.inverse());
    const Triangular tau4{FracElem::one(r), D};
    // tau3' = (x + delta, y) . tau1^-1
    const FracElem p1inv = pres.tau1.p.inverse();
    const Triangular tau3p{p1inv, (PolyQ::constant(delta) - pres.tau1.q).scaled(p1inv)};
    const R2Presentation next{pres.tau1, tau4, tau3p};

    Word check{r, {Factor(next.tau1), Factor(Swap{}), Factor(next.tau2), Factor(Swap{}), Factor(next.tau3)}};
    if (recompose(check) != promote(tau))
        throw InternalCheckFailed("recursed word does not recompose to sigma t sigma^-1");
    if (D.deg_y() >= dmid) throw InternalCheckFailed("middle degree did not decrease");

    CotameCertificate node{CotameCertificate::Kind::RecurseConjugate, sigma, tau, {}, {}, {}, {}, {},
                           {}, dmid, "", nullptr};
    node.child = std::make_unique<CotameCertificate>(certify_r2_rec(next, tau, depth + 1));
    return node;
}

}  // namespace

CotameCertificate certify_cotame_r2(const Word& word, const ThreeMap& sigma) {
    const R2Presentation pres = parse_r2_word(word);
    Word check{word.ring, {Factor(pres.tau1), Factor(Swap{}), Factor(pres.tau2), Factor(Swap{}), Factor(pres.tau3)}};
    if (recompose(check) != promote(sigma.base))
        throw NotR2Presentation("word does not recompose to sigma");
    if (is_affine(sigma.base)) throw AffineInput();
    return certify_r2_rec(pres, sigma.base, 0);
}

CotameCertificate sandwich_certificate(const PlaneMapR& alpha, const PlaneMapR& beta,
                                       CotameCertificate inner) {
    if (!is_affine(alpha) || !is_affine(beta)) throw Error("sandwich factors must be affine");
    const PlaneMapR outer = compose(compose(alpha, inner.sigma), beta);
    CotameCertificate cert{CotameCertificate::Kind::Sandwich, outer, {}, {}, {}, {}, alpha, beta, {},
                           -1, "co-tameness is a property of the affine double orbit", nullptr};
    cert.child = std::make_unique<CotameCertificate>(std::move(inner));
    return cert;
}

namespace {

ReplayResult fail(const std::string& step) { return {false, step}; }

ReplayResult verify_node(const CotameCertificate& c) {
    using K = CotameCertificate::Kind;
    const Ring r = c.sigma.ring();
    switch (c.kind) {
        case K::BaseTriangular: {
            if (!c.tau) return fail("BaseTriangular: missing conjugate");
            PlaneMapR expect = conjugate_by_translation(ThreeMap(c.sigma)).base;
            if (expect != *c.tau) return fail("BaseTriangular: recorded conjugate mismatch");
            if (!is_triangular(*c.tau) || is_affine(*c.tau))
                return fail("BaseTriangular: conjugate not in B minus A");
            return {};
        }
        case K::BaseBAB: {
            if (!c.b1 || !c.a || !c.b2) return fail("BaseBAB: missing factors");
            if (compose(compose(*c.b1, *c.a), *c.b2) != c.sigma)
                return fail("BaseBAB: factors do not recompose");
            if (!is_triangular(*c.b1) || !is_triangular(*c.b2) || !is_affine(*c.a))
                return fail("BaseBAB: factor shapes wrong");
            if (is_affine(c.sigma)) return fail("BaseBAB: sigma is affine");
            return {};
        }
        case K::BaseParabolic: {
            if (!c.alpha || !c.beta || !c.theta) return fail("BaseParabolic: missing data");
            if (!is_affine(*c.alpha) || !is_affine(*c.beta))
                return fail("BaseParabolic: sandwich factors not affine");
            if (compose(compose(*c.alpha, c.sigma), *c.beta) != *c.theta)
                return fail("BaseParabolic: theta mismatch");
            if (!is_parabolic_3d(*c.theta) || is_affine(*c.theta))
                return fail("BaseParabolic: theta not in P minus A");
            return {};
        }
        case K::BaseDerksen: {
            PlaneMapR derksen{PolyR::var_x(r) + PolyR::var_y(r) * PolyR::var_y(r), PolyR::var_y(r)};
            if (c.sigma != derksen) return fail("BaseDerksen: map is not (x + y^2, y, z)");
            return {};
        }
        case K::RecurseConjugate: {
            if (!c.tau || !c.child) return fail("RecurseConjugate: missing data");
            PlaneMapR expect = conjugate_by_translation(ThreeMap(c.sigma)).base;
            if (expect != *c.tau) return fail("RecurseConjugate: conjugate mismatch");
            if (c.child->kind == K::RecurseConjugate || c.child->kind == K::CollapseToR1) {
                if (c.child->middle_degree >= c.middle_degree && c.child->middle_degree >= 0)
                    return fail("RecurseConjugate: middle degree did not strictly decrease");
            }
            if (c.child->sigma != *c.tau) return fail("RecurseConjugate: child certifies a different map");
            return verify_node(*c.child);
        }
        case K::CollapseToR1: {
            if (!c.child) return fail("CollapseToR1: missing child");
            if (c.child->sigma != c.sigma) return fail("CollapseToR1: child certifies a different map");
            return verify_node(*c.child);
        }
        case K::Sandwich: {
            if (!c.alpha || !c.beta || !c.child) return fail("Sandwich: missing data");
            if (!is_affine(*c.alpha) || !is_affine(*c.beta)) return fail("Sandwich: factors not affine");
            if (compose(compose(*c.alpha, c.child->sigma), *c.beta) != c.sigma)
                return fail("Sandwich: relation alpha . inner . beta = sigma fails");
            return verify_node(*c.child);
        }
    }
    return fail("unknown node kind");
}

}  // namespace

ReplayResult verify_certificate(const CotameCertificate& cert, const ThreeMap& sigma) {
    if (cert.sigma != sigma.base) return fail("certificate root certifies a different map");
    try {
        return verify_node(cert);
    } catch (const Error& e) {
        return fail(std::string("replay raised: ") + e.what());
    }
}

}  // namespace rxy
