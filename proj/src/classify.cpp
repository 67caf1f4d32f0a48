#include "rxy/classify.hpp"

namespace rxy {

namespace {

PolyQ expand_q(const Quadruplet& q) {
    const Ring r = q.ring();
    const PolyQ inner = PolyQ::var_x(r).scaled(q.p1) + q.Q1;
    return PolyQ::var_y(r).scaled(q.p2) + compose_y(q.Q2, inner);
}

// B^1 shape: p*x + Q(y) with p in R nonzero and Q in R[y]
std::optional<std::pair<RingElem, PolyR>> b1_shape(const PolyR& H) {
    if (H.deg_x() != 1) return std::nullopt;
    PolyR Q(H.ring());
    RingElem p = RingElem::zero(H.ring());
    for (const auto& [e, c] : H.terms()) {
        if (e.x == 0) {
            Q.add_term(e, c);
        } else if (e.x == 1 && e.y == 0) {
            p = c;
        } else {
            return std::nullopt;  // x*y^j or x^2 terms
        }
    }
    if (p.is_zero()) return std::nullopt;
    return std::make_pair(p, Q);
}

// completes G = p*x + Q(y) to an automorphism (p'*x + Q'(y), G) with both
// components in B^1(R): needs p'*Q' - u exactly divisible by p with an exact
// unit u, plus an integral antiderivative.
std::optional<PlaneMapR> complete_b1(const RingElem& p, const PolyR& Q, const RingElem& p_cand) {
    const Ring r = p.ring();
    const PolyR dQ = partial(Q, Var::Y);
    const PolyR scaled = dQ.scaled(p_cand);
    const PolyR residue = reduce_mod(scaled, p).rep();
    if (residue.deg_y() > 0) return std::nullopt;  // p_cand * Q' not constant mod p
    const RingElem c = residue.constant_term();

    // exact unit u with u = c mod p
    std::vector<RingElem> unit_candidates;
    if (r == Ring::Int) {
        for (long s : {1L, -1L}) {
            RingElem u = RingElem::from_int(r, s);
            if (canonical_rem(u, p) == c) unit_candidates.push_back(u);
        }
    } else {
        if (!c.is_zero() && c.as_poly().deg() == 0) unit_candidates.push_back(c);
    }

    for (const RingElem& u : unit_candidates) {
        const PolyR D = poly_exact_div(scaled - PolyR::constant(u), p);
        // antiderivative of D, constant term zero
        PolyR Qp(r);
        bool ok = true;
        for (const auto& [e, cc] : D.terms()) {
            const RingElem k = RingElem::from_int(r, e.y + 1);
            if (!divides(k, cc)) {
                ok = false;
                break;
            }
            Qp.add_term({0, e.y + 1}, exact_div(cc, k));
        }
        if (!ok) continue;
        PlaneMapR sigma{PolyR::var_x(r).scaled(p_cand) + Qp, PolyR::var_x(r).scaled(p) + Q};
        if (!vde_check(sigma)) continue;
        return sigma;
    }
    return std::nullopt;
}

std::vector<RingElem> divisor_candidates(const RingElem& p, unsigned long budget) {
    const Ring r = p.ring();
    std::vector<RingElem> out{RingElem::one(r)};
    if (r == Ring::Int) {
        mpz_class n = abs(p.as_int());
        unsigned long cap = std::min(budget, mpz_class(n).get_ui());
        for (unsigned long d = 2; d <= cap; ++d)
            if (mpz_divisible_ui_p(n.get_mpz_t(), d)) out.push_back(RingElem(mpz_class(d)));
        if (n > 1) out.push_back(RingElem(n));
    } else {
        // squarefree ladder: gcd chains give monic divisors without factoring
        UniPoly f = normalize_unit(p).canonical.as_poly();
        UniPoly g = gcd(f, f.derivative());
        unsigned long used = 0;
        while (f.deg() > 0 && used++ < budget) {
            UniPoly q, rr;
            UniPoly::divmod(f, g, q, rr);  // squarefree part
            if (q.deg() > 0) out.push_back(RingElem(q));
            if (g.deg() == 0) break;
            f = g;
            g = gcd(f, f.derivative());
        }
        out.push_back(normalize_unit(p).canonical);
    }
    return out;
}

}  // namespace

Quadruplet::Quadruplet(FracElem p1_, FracElem p2_, PolyQ Q1_, PolyQ Q2_)
    : p1(std::move(p1_)), p2(std::move(p2_)), Q1(std::move(Q1_)), Q2(std::move(Q2_)) {
    if (p1.is_zero() || p2.is_zero()) throw InvariantViolation("p1, p2 must be nonzero");
    if (!Q1.is_univariate_y() || !Q2.is_univariate_y())
        throw InvariantViolation("Q1, Q2 must be univariate in y");
    if (Q1.deg_y() < 1 || Q2.deg_y() < 2)
        throw InvariantViolation("rational length 2 needs deg Q1 >= 1 and deg Q2 >= 2");
    if (!is_integral(expand_q(*this))) throw NotIntegral(expand_q(*this).str());
}

PolyR expand(const Quadruplet& q) { return to_integral(expand_q(q)); }

ReducedQuadruplet reduce(const Quadruplet& q0) {
    const Ring r = q0.ring();
    FracElem p1 = q0.p1, p2 = q0.p2;
    PolyQ Q1 = q0.Q1, Q2 = q0.Q2;
    const PolyQ y = PolyQ::var_y(r);

    // 1) shift so Q1(0) = 0, compensating inside Q2
    const FracElem c = Q1.constant_term();
    Q1 = Q1 - PolyQ::constant(c);
    Q2 = compose_y(Q2, y + PolyQ::constant(c));

    // 2) drop Q2(0)
    Q2 = Q2 - PolyQ::constant(Q2.constant_term());

    // 3) clear the fractional content of (p1, Q1): the unique m (up to units)
    //    with m*p1 and m*Q1 integral of unit content-gcd
    RingElem den = p1.den();
    for (const auto& [e, cc] : Q1.terms()) den = lcm(den, cc.den());
    RingElem num = p1.num() * exact_div(den, p1.den());
    for (const auto& [e, cc] : Q1.terms()) num = gcd(num, cc.num() * exact_div(den, cc.den()));
    const FracElem m = FracElem(den, num);  // multiply by m = den/num
    p1 = p1 * m;
    Q1 = Q1.scaled(m);
    Q2 = compose_y(Q2, y.scaled(m.inverse()));

    // 4) unit-normalize p1
    const UnitNormal un = normalize_unit(p1.to_ring());
    const FracElem u(un.unit);
    p1 = FracElem(un.canonical);
    Q1 = Q1.scaled(u.inverse());
    Q2 = compose_y(Q2, y.scaled(u));

    Quadruplet out(p1, p2, Q1, Q2);
    // reduced-form invariants
    if (!out.Q1.constant_term().is_zero() || !out.Q2.constant_term().is_zero())
        throw InternalCheckFailed("reduce: zero constant terms expected");
    RingElem content = out.p1.to_ring();
    for (const auto& [e, cc] : out.Q1.terms()) content = gcd(content, cc.to_ring());
    if (!content.is_unit()) throw InternalCheckFailed("reduce: gcd(p1, content Q1) not a unit");
    return ReducedQuadruplet(std::move(out));
}

DqDecomposition dq_decompose(const ReducedQuadruplet& q) {
    const RingElem d = q.p2().den();
    const RingElem q2 = q.p2().num();
    const RingElem q1 = exact_div(q.p1().to_ring(), d);
    const PolyR Q2t = to_integral(q.Q2().scaled(FracElem(d)));
    return {d, q1, q2, Q2t};
}

ClassificationReport classify(const ReducedQuadruplet& rq, unsigned long budget) {
    const Ring r = rq.ring();
    const DqDecomposition dq = dq_decompose(rq);
    const RingElem p1 = rq.p1().to_ring();
    const PolyR Q1 = to_integral(rq.Q1());
    const PolyR F = expand(rq.get());
    const PolyR x = PolyR::var_x(r), y = PolyR::var_y(r);

    const Rl2Data data(dq.d, dq.q1, dq.q2, Q1, dq.Q2_tilde);
    if (!verify_rl2_criterion(data).ok)
        throw NotCoordinate("the expansion fails the VA_1 residue criterion");

    ClassificationReport rep;

    // mate of length 1  <=>  p1*p2 a unit of R
    const FracElem u_frac = rq.p1() * rq.p2();
    rep.mate_length1 = u_frac.is_integral() && u_frac.to_ring().is_unit();
    if (rep.mate_length1) {
        const RingElem u = u_frac.to_ring();
        const RingElem ui = unit_inverse(u);
        const PolyR G = (x.scaled(p1) + Q1).scaled(ui);
        PlaneMapR mate{F, G};
        if (!vde_check(mate)) throw InternalCheckFailed("mate pair is not an automorphism");
        rep.mate = mate;
    }

    // length "1+1"  <=>  phi_p1(Q1) in VA_1(R/p1R)
    rep.length_1plus1 = is_va1_mod(Q1, p1).member;
    if (rep.length_1plus1) {
        const PolyR Q5 = composition_inverse_mod(Q1, p1);
        const PolyR W = x.scaled(p1) + Q1;
        PlaneMapR sig{poly_exact_div(compose_y(Q5, W) - y, p1), W};
        const PlaneMapR sig_inv = to_integral(invert_over_field(promote(sig)));
        const PolyR Hy = apply(sig_inv, F);
        auto shape = b1_shape(Hy);
        if (!shape) throw InternalCheckFailed("sigma^{-1}(F) is not of B^1 shape");
        if (apply(sig, Hy) != F) throw InternalCheckFailed("sigma(sigma^{-1}(F)) != F");
        const CoordinateWitness tw = construct_rs(shape->first, shape->second, RingElem::one(r));
        rep.one_plus_one_sigma = sig;
        rep.one_plus_one_tau = tw.sigma;
        if (apply(sig, tw.sigma.f2) != F)
            throw InternalCheckFailed("sigma(tau(y)) != F in the length-\"1+1\" witness");
    }

    // tameness
    if (!rep.length_1plus1) {
        rep.tame = TameVerdict::NotTame;
        rep.tame_reason = "not of length \"1+1\" (a tame rational length 2 coordinate would be)";
    } else if (rep.mate_length1) {
        if (!is_tame_B1(p1, Q1)) {
            rep.tame = TameVerdict::NotTame;
            rep.tame_reason = "the mate coordinate p1*x + Q1(y) is not tame: phi_p1(Q1) is not affine";
        } else {
            rep.tame = TameVerdict::Tame;
            rep.tame_reason = "mate of length 1 with tame mate coordinate";
            // try to exhibit an integral factorization word for a map with
            // y-component F
            try {
                const PlaneMapR rho{rep.mate->f2, rep.mate->f1};  // (G, F)
                Word w = decompose_over_field(promote(rho));
                bool integral = true;
                for (const Factor& f : w.factors) {
                    if (const auto* t = std::get_if<Triangular>(&f)) {
                        if (!t->p.is_integral() || !t->p.to_ring().is_unit() || !is_integral(t->q))
                            integral = false;
                    } else if (const auto* a = std::get_if<Affine2>(&f)) {
                        for (const FracElem* e : {&a->a, &a->b, &a->e, &a->c, &a->d, &a->f})
                            if (!e->is_integral()) integral = false;
                        if (integral && !(a->a * a->d - a->b * a->c).to_ring().is_unit()) integral = false;
                    }
                }
                if (integral) rep.tame_word = w;
            } catch (const Error&) {
                // keep the axiom-level justification
            }
        }
    } else {
        // bounded search for a pair sigma, tau with all four components B^1
        rep.tame = TameVerdict::Undetermined;
        rep.tame_reason = "B^1-pair search budget exhausted";
        for (const RingElem& pc : divisor_candidates(p1 * dq.q2, budget)) {
            auto sig = complete_b1(p1, Q1, pc);
            if (!sig) continue;
            const PlaneMapR sig_inv = to_integral(invert_over_field(promote(*sig)));
            const PolyR Hy = apply(sig_inv, F);
            auto shape = b1_shape(Hy);
            if (!shape) continue;
            for (const RingElem& pc2 : divisor_candidates(shape->first, budget)) {
                auto tau = complete_b1(shape->first, shape->second, pc2);
                if (!tau) continue;
                if (apply(*sig, tau->f2) != F) continue;
                rep.tame = TameVerdict::Tame;
                rep.tame_reason = "explicit B^1-component pair found";
                rep.tame_pair = TamePairWitness{*sig, *tau};
                break;
            }
            if (rep.tame == TameVerdict::Tame) break;
        }
    }

    // report coherence (structural theorems; violations indicate bugs)
    if (rep.tame == TameVerdict::Tame && !rep.length_1plus1)
        throw InternalCheckFailed("coherence: Tame must imply length \"1+1\"");
    if (rep.mate_length1 && !rep.length_1plus1)
        throw InternalCheckFailed("coherence: a mate of length 1 must imply length \"1+1\"");

    if (r == Ring::PolyZ && rep.tame == TameVerdict::NotTame)
        rep.wild_3d_note =
            "over K[z] a non-tame coordinate of K[z][x,y] is a wild coordinate of K[x,y,z] "
            "(Umirbaev-Yu)";
    return rep;
}

}  // namespace rxy
