#pragma once

// Equivalence of length 1 polynomials p1*x + Q1(y) and p2*x + Q2(y) under
// GA_2(R): witness verification, the necessary VA_2 condition, the complete
// same-p decision by nilpotent-layer lifting, and the closed-form parity
// criterion for the Danielewski-style family.

#include <optional>

#include "rxy/construct.hpp"

namespace rxy {

struct StarFailed : Error {
    explicit StarFailed(const std::string& s) : Error("condition (*) failed: " + s) {}
};
struct StarStarFailed : Error {
    explicit StarStarFailed(const std::string& s) : Error("condition (**) failed: " + s) {}
};
struct NotUnit : Error {
    NotUnit() : Error("u is not a unit of R") {}
};
struct UnsupportedRing : Error {
    explicit UnsupportedRing(const std::string& s) : Error("unsupported instance: " + s) {}
};

struct EquivWitness {
    RingElem u;
    PolyR Q3;
    PlaneMapR sigma;  // sigma(p1*x + Q1(y)) = p2*x + Q2(y) exactly
};

// verifies (*) integrality of Y and (**) the congruence mod p1, then builds
// and validates the automorphism
EquivWitness check_witness(const RingElem& p1, const PolyR& Q1, const RingElem& p2, const PolyR& Q2,
                           const RingElem& u, const PolyR& Q3);

// p1/gcd * x + Q1 and p2/gcd * x + Q2 must both be coordinates when the
// polynomials are equivalent; false proves non-equivalence
bool necessary_va2(const RingElem& p1, const PolyR& Q1, const RingElem& p2, const PolyR& Q2);

struct SamePResult {
    std::optional<EquivWitness> witness;
    std::string note;  // exhaustion summary when no witness was found
};

// decides whether some sigma in GA_2(R) sends p*x + Q1(y) to p*x + Q2(y);
// complete for moduli whose radical is prime (Z) or linear (Q[z])
SamePResult decide_same_p(const RingElem& p, const PolyR& Q1, const PolyR& Q2,
                          unsigned long budget = 64);

// the family p = z^2, Q_i = -y^2 - z q_i(y): equivalence holds iff the even
// parts of q1 and q2 agree; q_i are z-free with q_i(0) = 0
bool poloni_decide(const PolyQ& q1, const PolyQ& q2);

}  // namespace rxy
