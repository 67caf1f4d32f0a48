#pragma once

// Constructive coordinate builders: the length-1 construction (p*x + Q(y)
// with its explicit automorphism), the rational length 2 construction with
// triangular factorization and explicit inverse, the Berson recursion, and
// the coprime-parameter example family.

#include "rxy/plane_map.hpp"
#include "rxy/va1.hpp"

namespace rxy {

struct NotCoordinate : Error {
    explicit NotCoordinate(const std::string& what) : Error("not a coordinate: " + what) {}
};
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error("invariant violation: " + what) {}
};
struct CriterionFailed : Error {
    explicit CriterionFailed(const std::string& what) : Error("criterion failed: " + what) {}
};
struct InternalCheckFailed : Error {
    explicit InternalCheckFailed(const std::string& what) : Error("internal check failed: " + what) {}
};

// datum of F = d^-1 { q2*y + Q2(q1*d*x + Q1(y)) }; construction validates
// gcd(d, q2) unit and the divisibility hypothesis phi_d(q2*y + Q2(Q1(y))) = 0
struct Rl2Data {
    Rl2Data(RingElem d, RingElem q1, RingElem q2, PolyR Q1, PolyR Q2);
    RingElem d, q1, q2;
    PolyR Q1, Q2;
    Ring ring() const { return d.ring(); }
};

struct ConstructionTrace {
    PolyR S, U, W, T, Q3;  // univariate in y
    PolyR V;               // bivariate
};

struct CoordinateWitness {
    PolyR F;                   // the coordinate, sigma(y) = F
    PlaneMapR sigma;
    PlaneMapR sigma_inverse;
    ConstructionTrace trace;
    std::vector<Triangular> taus;  // [tau1, tau2, tau3] when built by the RL2 route
};

// sigma = ( (u*p1)^-1 (y - Q2(F)), F ) for F = p1*x + Q1(y);
// Q2 is the compositional inverse of Q1 modulo p1
CoordinateWitness construct_rs(const RingElem& p1, const PolyR& Q1, const RingElem& u);

struct Rl2Criteria {
    bool ok = false;
    Va1Verdict at_q1;  // phi_q1(F(0,y))
    Va1Verdict at_q2;  // phi_q2(Q2)
};
Rl2Criteria verify_rl2_criterion(const Rl2Data& data);

// the rational length 2 construction: sigma = tau1 pi tau2 pi tau3 with
// det(J sigma) = 1, exact inverse tau3^-1 pi tau2^-1 pi tau1^-1
CoordinateWitness construct_rl2(const Rl2Data& data);

// the presentation word [tau1, pi, tau2, pi, tau3] of an RL2 witness
Word rl2_word(const CoordinateWitness& w);

// F_1 = p1*x + Q1(y), F_2 = p2*y + Q2(F_1), F_l = p_l F_{l-2} + Q_l(F_{l-1})
PolyQ berson_poly(const std::vector<FracElem>& ps, const std::vector<PolyQ>& Qs);

// builds Rl2Data from pairwise-coprime d, q1, q2 and shape polynomials:
// Q1 = y + d*Q3, Q2 = q1 { (d - q2*v)*y + d*Q4 } with d*u + q1*v = 1
Rl2Data example2_family(const RingElem& d, const RingElem& q1, const RingElem& q2, const PolyR& Q3,
                        const PolyR& Q4);

}  // namespace rxy
