#include "rxy/construct.hpp"

namespace rxy {

namespace {

void require_y_poly(const PolyR& Q, const char* name) {
    if (!Q.is_univariate_y()) throw InvariantViolation(std::string(name) + " must be univariate in y");
}

PlaneMapR integral_map(const PlaneMapQ& s, const char* what) {
    if (!is_integral(s.f1) || !is_integral(s.f2))
        throw InternalCheckFailed(std::string(what) + ": component is not integral");
    return to_integral(s);
}

void check_two_sided_identity(const PlaneMapR& s, const PlaneMapR& si, const char* what) {
    const PlaneMapR id = PlaneMapR::identity(s.ring());
    if (compose(s, si) != id || compose(si, s) != id)
        throw InternalCheckFailed(std::string(what) + ": inverse verification failed");
}

}  // namespace

Rl2Data::Rl2Data(RingElem d_, RingElem q1_, RingElem q2_, PolyR Q1_, PolyR Q2_)
    : d(std::move(d_)), q1(std::move(q1_)), q2(std::move(q2_)), Q1(std::move(Q1_)), Q2(std::move(Q2_)) {
    if (d.is_zero() || q1.is_zero() || q2.is_zero())
        throw InvariantViolation("d, q1, q2 must be nonzero");
    require_y_poly(Q1, "Q1");
    require_y_poly(Q2, "Q2");
    if (!gcd(d, q2).is_unit()) throw InvariantViolation("dR + q2R = R fails: gcd(d, q2) is not a unit");
    const PolyR probe = PolyR::var_y(ring()).scaled(q2) + compose_y(Q2, Q1);
    if (!reduce_mod(probe, d).is_zero())
        throw InvariantViolation("phi_d(q2*y + Q2(Q1(y))) != 0");
}

CoordinateWitness construct_rs(const RingElem& p1, const PolyR& Q1, const RingElem& u) {
    const Ring r = p1.ring();
    if (p1.is_zero()) throw InvariantViolation("p1 must be nonzero");
    if (!u.is_unit()) throw InvariantViolation("u must be a unit");
    require_y_poly(Q1, "Q1");
    if (!is_va1_mod(Q1, p1).member)
        throw NotCoordinate("phi_p1(Q1) is not in VA_1(R/p1R)");

    const PolyR Q2 = composition_inverse_mod(Q1, p1);
    const PolyR x = PolyR::var_x(r), y = PolyR::var_y(r);
    const PolyR F = x.scaled(p1) + Q1;

    PlaneMapR sigma{poly_exact_div(y - compose_y(Q2, F), u * p1), F};

    // direct inverse: ( p1^-1 (y - Q1(u p1 x + Q2(y))), u p1 x + Q2(y) )
    const PolyR G2 = x.scaled(u * p1) + Q2;
    PlaneMapR sigma_inv{poly_exact_div(y - compose_y(Q1, G2), p1), G2};
    check_two_sided_identity(sigma, sigma_inv, "construct_rs");

    // for the length-1 route the compositional inverse plays the role of S
    CoordinateWitness w{F, sigma, sigma_inv, ConstructionTrace{Q2, PolyR(r), PolyR(r), PolyR(r), PolyR(r), PolyR(r)}, {}};
    return w;
}

Rl2Criteria verify_rl2_criterion(const Rl2Data& data) {
    const Ring r = data.ring();
    const PolyR y = PolyR::var_y(r);
    const PolyR F0 = poly_exact_div(y.scaled(data.q2) + compose_y(data.Q2, data.Q1), data.d);
    Rl2Criteria out{false, is_va1_mod(F0, data.q1), is_va1_mod(data.Q2, data.q2)};
    out.ok = out.at_q1.member && out.at_q2.member;
    return out;
}

CoordinateWitness construct_rl2(const Rl2Data& data) {
    const Ring r = data.ring();
    const Rl2Criteria crit = verify_rl2_criterion(data);
    if (!crit.ok)
        throw CriterionFailed(std::string("VA_1 residue criterion fails at ") +
                              (crit.at_q1.member ? "q2" : "q1"));

    const PolyR x = PolyR::var_x(r), y = PolyR::var_y(r);

    // S(Q2(y)) = y + q2 U(y)
    const PolyR S = composition_inverse_mod(data.Q2, data.q2);
    const PolyR U = poly_exact_div(compose_y(S, data.Q2) - y, data.q2);

    // S(q2 y + x) - S(x) = q2 V(x, y)
    const PolyR V = poly_exact_div(substitute(S, PolyR::zero(r), y.scaled(data.q2) + x) -
                                       substitute(S, PolyR::zero(r), x),
                                   data.q2);
    const PolyR W = substitute(V, compose_y(data.Q2, data.Q1), y);

    // T(F(0,y)) = y mod q1
    const PolyR F0 = poly_exact_div(y.scaled(data.q2) + compose_y(data.Q2, data.Q1), data.d);
    const PolyR T = composition_inverse_mod(F0, data.q1);

    // Q3(y) = S(d y) - q2 { U(Q1(T(y))) + W(T(y)) }
    const PolyR Q3 =
        compose_y(S, y.scaled(data.d)) -
        (compose_y(U, compose_y(data.Q1, T)) + compose_y(W, T)).scaled(data.q2);

    // assemble sigma = tau1 pi tau2 pi tau3 over the fraction field
    const FracElem fd(data.d), fq1(data.q1), fq2(data.q2);
    const Triangular tau1{fq1 * fd, promote(data.Q1)};
    const Triangular tau2{fq2 / fd, promote(data.Q2).scaled(fd.inverse())};
    const Triangular tau3{(fq1 * fq2).inverse(), promote(Q3).scaled(-(fq1 * fq2).inverse())};

    const PlaneMapQ pi = PlaneMapQ::swap(r);
    PlaneMapQ sq = to_map(Factor(tau1), r);
    sq = compose(sq, pi);
    sq = compose(sq, to_map(Factor(tau2), r));
    sq = compose(sq, pi);
    sq = compose(sq, to_map(Factor(tau3), r));

    const PlaneMapR sigma = integral_map(sq, "construct_rl2 sigma");
    const PolyR F = sigma.f2;

    // the congruence q1 d x + Q1(y) - Q3(F) = 0 mod q1 q2, which is what
    // makes the first component integral
    const PolyR congruence = x.scaled(data.q1 * data.d) + data.Q1 - compose_y(Q3, F);
    if (!reduce_mod(congruence, data.q1 * data.q2).is_zero())
        throw InternalCheckFailed("congruence q1*d*x + Q1 - Q3(F) = 0 mod q1*q2 fails");
    if (F != poly_exact_div(y.scaled(data.q2) + compose_y(data.Q2, x.scaled(data.q1 * data.d) + data.Q1), data.d))
        throw InternalCheckFailed("sigma(y) does not match the displayed formula for F");

    if (jacobian_det(sigma) != PolyR::constant(RingElem::one(r)))
        throw InternalCheckFailed("det(J sigma) != 1");

    // inverse: tau3^-1 pi tau2^-1 pi tau1^-1
    auto tri_inverse = [&](const Triangular& t) {
        return Triangular{t.p.inverse(), t.q.scaled(-(t.p.inverse()))};
    };
    PlaneMapQ iq = to_map(Factor(tri_inverse(tau3)), r);
    iq = compose(iq, pi);
    iq = compose(iq, to_map(Factor(tri_inverse(tau2)), r));
    iq = compose(iq, pi);
    iq = compose(iq, to_map(Factor(tri_inverse(tau1)), r));
    const PlaneMapR sigma_inv = integral_map(iq, "construct_rl2 inverse");
    check_two_sided_identity(sigma, sigma_inv, "construct_rl2");

    CoordinateWitness w{F, sigma, sigma_inv, ConstructionTrace{S, U, W, T, Q3, V}, {tau1, tau2, tau3}};
    return w;
}

Word rl2_word(const CoordinateWitness& w) {
    if (w.taus.size() != 3) throw Error("witness does not carry an RL2 factorization");
    const Ring r = w.F.ring();
    Word word{r, {}};
    word.factors.push_back(w.taus[0]);
    word.factors.push_back(Swap{});
    word.factors.push_back(w.taus[1]);
    word.factors.push_back(Swap{});
    word.factors.push_back(w.taus[2]);
    return word;
}

PolyQ berson_poly(const std::vector<FracElem>& ps, const std::vector<PolyQ>& Qs) {
    if (ps.size() != Qs.size() || ps.empty()) throw Error("berson_poly: length mismatch");
    const Ring r = ps[0].ring();
    for (const FracElem& p : ps)
        if (p.is_zero()) throw Error("berson_poly: zero multiplier");
    const PolyQ x = PolyQ::var_x(r), y = PolyQ::var_y(r);
    PolyQ prev2(r);  // F_{l-2}
    PolyQ prev = x.scaled(ps[0]) + Qs[0];
    if (ps.size() == 1) return prev;
    PolyQ cur = y.scaled(ps[1]) + compose_y(Qs[1], prev);
    for (size_t l = 2; l < ps.size(); ++l) {
        prev2 = prev;
        prev = cur;
        cur = prev2.scaled(ps[l]) + compose_y(Qs[l], prev);
    }
    return cur;
}

Rl2Data example2_family(const RingElem& d, const RingElem& q1, const RingElem& q2, const PolyR& Q3,
                        const PolyR& Q4) {
    const Ring r = d.ring();
    if (!gcd(d, q1).is_unit() || !gcd(d, q2).is_unit() || !gcd(q1, q2).is_unit())
        throw InvariantViolation("pairwise coprimality of d, q1, q2 fails");
    require_y_poly(Q3, "Q3");
    require_y_poly(Q4, "Q4");
    for (const auto& [e, c] : Q4.terms())
        if (!is_nilpotent_mod(c, q2))
            throw InvariantViolation("phi_q2(Q4) must have nilpotent coefficients");

    const BezoutResult bz = gcd_bezout(d, q1);  // d*s + q1*t = 1
    if (!bz.g.is_one()) throw InvariantViolation("gcd(d, q1) is not 1");
    const RingElem v = bz.t;

    const PolyR y = PolyR::var_y(r);
    const PolyR Q1 = y + Q3.scaled(d);
    const PolyR Q2 = (y.scaled(d - q2 * v) + Q4.scaled(d)).scaled(q1);
    return Rl2Data(d, q1, q2, Q1, Q2);
}

}  // namespace rxy
