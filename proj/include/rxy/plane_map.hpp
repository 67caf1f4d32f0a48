#pragma once

// Endomorphisms of R[x,y] and qt(R)[x,y] as component pairs, together with
// the factorization machinery over the fraction field (triangular / swap
// factors with an affine tail).
//
// Composition convention, fixed once for the whole project:
//     compose(a, b)(h) = a(b(h))          for h in R[x,y],
// i.e. compose(a, b).f_i = b.f_i evaluated at (a.f1, a.f2).  With this
// convention a product written left to right, tau1 * pi * tau2 * pi * tau3,
// recomposes to the classical explicit component formulas (pinned by test).

#include <variant>
#include <vector>

#include "rxy/bipoly.hpp"

namespace rxy {

template <class C>
struct PlaneMap {
    BiPoly<C> f1, f2;  // images of x and y

    PlaneMap(BiPoly<C> x_image, BiPoly<C> y_image) : f1(std::move(x_image)), f2(std::move(y_image)) {
        if (f1.ring() != f2.ring()) throw DomainMismatch("plane map components over different rings");
    }
    Ring ring() const { return f1.ring(); }

    static PlaneMap identity(Ring r) { return {BiPoly<C>::var_x(r), BiPoly<C>::var_y(r)}; }
    static PlaneMap swap(Ring r) { return {BiPoly<C>::var_y(r), BiPoly<C>::var_x(r)}; }

    bool operator==(const PlaneMap& o) const { return f1 == o.f1 && f2 == o.f2; }
    bool operator!=(const PlaneMap& o) const { return !(*this == o); }
    bool is_identity() const { return *this == identity(ring()); }
};

using PlaneMapR = PlaneMap<RingElem>;
using PlaneMapQ = PlaneMap<FracElem>;

// sigma acting on a polynomial: sigma(F) = F(sigma.f1, sigma.f2)
template <class C>
BiPoly<C> apply(const PlaneMap<C>& sigma, const BiPoly<C>& F) {
    return substitute(F, sigma.f1, sigma.f2);
}

template <class C>
PlaneMap<C> compose(const PlaneMap<C>& a, const PlaneMap<C>& b) {
    if (a.ring() != b.ring()) throw DomainMismatch("composing maps over different rings");
    return {substitute(b.f1, a.f1, a.f2), substitute(b.f2, a.f1, a.f2)};
}

template <class C>
BiPoly<C> jacobian_det(const PlaneMap<C>& s) {
    return partial(s.f1, Var::X) * partial(s.f2, Var::Y) - partial(s.f2, Var::X) * partial(s.f1, Var::Y);
}

inline PlaneMapQ promote(const PlaneMapR& s) { return {promote(s.f1), promote(s.f2)}; }
inline PlaneMapR to_integral(const PlaneMapQ& s) { return {to_integral(s.f1), to_integral(s.f2)}; }

// ---------------------------------------------------------------------------
// Words of factors over qt(R)
// ---------------------------------------------------------------------------

// (p*x + q(y), y) with p nonzero and q univariate in y
struct Triangular {
    FracElem p;
    PolyQ q;
};

struct Swap {};

// (a*x + b*y + e, c*x + d*y + f) with invertible linear part
struct Affine2 {
    FracElem a, b, e;
    FracElem c, d, f;
};

using Factor = std::variant<Triangular, Swap, Affine2>;

struct Word {
    Ring ring;
    std::vector<Factor> factors;
};

PlaneMapQ to_map(const Factor& f, Ring r);
PlaneMapQ recompose(const Word& w);
Affine2 to_affine(const PlaneMapQ& s);  // requires an affine map
Affine2 affine_inverse(const Affine2& a);

// merge adjacent triangular factors, cancel double swaps, absorb affine
// factors adjacent to the tail; recomposition is preserved exactly
Word free_reduce(const Word& w);

// number of swap factors of a reduced word; rejects non-reduced input
int rational_length(const Word& w);

struct NotAnAutomorphism : Error {
    int deg1, deg2;
    NotAnAutomorphism(const std::string& what, int d1, int d2)
        : Error("not an automorphism: " + what), deg1(d1), deg2(d2) {}
};

// Jung-van der Kulk factorization over the fraction field by iterated
// elementary degree reduction; on success recompose(word) == sigma exactly.
Word decompose_over_field(const PlaneMapQ& sigma);

// exact inverse over the fraction field
PlaneMapQ invert_over_field(const PlaneMapQ& sigma);

// GA_2(R) membership: det(J sigma)(0,0) a unit of R and sigma invertible
// over qt(R)
bool vde_check(const PlaneMapR& sigma);

// syntactic shape tests; over Ring::PolyZ these are the K[x,y,z] notions for
// the z-automorphism (f1, f2, z)
bool is_triangular(const PlaneMapR& s);  // f1 in R*x + R[y], f2 in R*y + R
bool is_affine(const PlaneMapR& s);      // degree <= 1 with invertible linear part
bool is_parabolic_3d(const PlaneMapR& s);  // f2 (and the fixed z) free of x
bool is_affine_q(const PlaneMapQ& s);

}  // namespace rxy
