#pragma once

// Membership in VA_1(R/pR) for univariate polynomials (unit linear
// coefficient, nilpotent higher coefficients) and compositional inverses
// modulo p via Newton iteration along the nilpotent filtration.

#include "rxy/bipoly.hpp"

namespace rxy {

struct NotVa1 : Error {
    NotVa1() : Error("polynomial is not in VA_1 modulo p") {}
};

struct Va1Verdict {
    bool member = false;
    QuotElem unit_coeff;    // residue of the linear coefficient
    ModPoly nilpotent_tail;  // residue of the degree >= 2 part
    RingElem affine_shift;   // residue of the constant term (the r of uy + r + N)
};

// Q univariate in y over R, p nonzero. member iff phi_p(Q) has a unit linear
// coefficient and nilpotent coefficients in every degree >= 2.
Va1Verdict is_va1_mod(const PolyR& Q, const RingElem& p);

// S with S(Q(y)) = y mod pR[y] (two-sided); canonical coefficients, minimal
// degree. Requires is_va1_mod(Q, p).member.
PolyR composition_inverse_mod(const PolyR& Q, const RingElem& p);

// p*x + Q(y) in VA_2(R), decided through the residue criterion
bool is_coordinate_B1(const RingElem& p, const PolyR& Q);

// the associated automorphisms are tame iff phi_p(Q) is affine with a unit
// linear coefficient mod p; requires is_coordinate_B1(p, Q)
bool is_tame_B1(const RingElem& p, const PolyR& Q);

}  // namespace rxy
