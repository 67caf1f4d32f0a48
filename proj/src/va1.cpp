#include "rxy/va1.hpp"

namespace rxy {

Va1Verdict is_va1_mod(const PolyR& Q, const RingElem& p) {
    if (p.is_zero()) throw ZeroModulus();
    if (!Q.is_univariate_y()) throw Error("is_va1_mod: polynomial must be univariate in y");
    const Ring r = Q.ring();
    const ModPoly qbar = reduce_mod(Q, p);

    RingElem lin = RingElem::zero(r), cst = RingElem::zero(r);
    PolyR tail(r);
    for (const auto& [e, c] : qbar.rep().terms()) {
        if (e.y == 0)
            cst = c;
        else if (e.y == 1)
            lin = c;
        else
            tail.add_term(e, c);
    }
    bool member = is_unit_mod(lin, p);
    for (const auto& [e, c] : tail.terms())
        if (!is_nilpotent_mod(c, p)) {
            member = false;
            break;
        }
    return Va1Verdict{member, QuotElem(lin, p), ModPoly(tail, p), cst};
}

PolyR composition_inverse_mod(const PolyR& Q, const RingElem& p) {
    const Va1Verdict v = is_va1_mod(Q, p);
    if (!v.member) throw NotVa1();
    const Ring r = Q.ring();
    const PolyR qbar = reduce_mod(Q, p).rep();
    const PolyR y = PolyR::var_y(r);

    // affine part A = c1*y + c0 and its inverse A^-1 = c1^-1 (y - c0)
    const RingElem c1 = v.unit_coeff.rep();
    const RingElem c0 = v.affine_shift;
    const RingElem c1_inv = inverse_mod(c1, p);
    const PolyR a_inv = (y - PolyR::constant(c0)).scaled(c1_inv);

    // Newton correction over the nilpotent filtration: the error of
    // S <- S - E(A^-1) gains one nilpotency level per step.
    PolyR S = reduce_mod(a_inv, p).rep();
    const unsigned bound = nilpotency_bound(p);
    for (unsigned it = 0; it <= bound + 1; ++it) {
        const PolyR E = reduce_mod(compose_y(S, qbar) - y, p).rep();
        if (E.is_zero()) break;
        if (it == bound + 1) throw Error("internal: composition inverse did not converge");
        S = reduce_mod(S - compose_y(E, a_inv), p).rep();
    }

    // truncate to the minimal degree achieving the congruence
    const int d = std::max(0, S.deg_y());
    for (int cut = 0; cut <= d; ++cut) {
        PolyR trunc(r);
        for (const auto& [e, c] : S.terms())
            if (e.y <= cut) trunc.add_term(e, c);
        if (reduce_mod(compose_y(trunc, Q) - y, p).is_zero()) return trunc;
    }
    return S;
}

bool is_coordinate_B1(const RingElem& p, const PolyR& Q) {
    if (p.is_zero()) throw ZeroModulus();
    return is_va1_mod(Q, p).member;
}

bool is_tame_B1(const RingElem& p, const PolyR& Q) {
    if (!is_coordinate_B1(p, Q)) throw Error("is_tame_B1: p*x + Q(y) is not a coordinate");
    const Va1Verdict v = is_va1_mod(Q, p);
    return v.nilpotent_tail.is_zero() && v.unit_coeff.is_unit();
}

}  // namespace rxy
