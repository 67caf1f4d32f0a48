#pragma once

// Quadruplet algebra for rational length 2 polynomials: reduction to the
// unique canonical form, the d/q1/q2 decomposition, and the classification
// into tame / mate-of-length-1 / length-"1+1" with explicit witnesses.

#include <optional>

#include "rxy/construct.hpp"

namespace rxy {

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& what) : Error("expansion is not integral: " + what) {}
};

// (p1, p2, Q1, Q2) with deg Q1 >= 1, deg Q2 >= 2 and integral expansion
struct Quadruplet {
    Quadruplet(FracElem p1, FracElem p2, PolyQ Q1, PolyQ Q2);
    FracElem p1, p2;
    PolyQ Q1, Q2;
    Ring ring() const { return p1.ring(); }
};

// F = p2*y + Q2(p1*x + Q1(y)), guaranteed integral
PolyR expand(const Quadruplet& q);

// Q1(0) = Q2(0) = 0, p1 in U(R), Q1 in R[y], gcd(p1, content Q1) a unit
class ReducedQuadruplet {
  public:
    const Quadruplet& get() const { return q_; }
    const FracElem& p1() const { return q_.p1; }
    const FracElem& p2() const { return q_.p2; }
    const PolyQ& Q1() const { return q_.Q1; }
    const PolyQ& Q2() const { return q_.Q2; }
    Ring ring() const { return q_.ring(); }
    bool operator==(const ReducedQuadruplet& o) const {
        return q_.p1 == o.q_.p1 && q_.p2 == o.q_.p2 && q_.Q1 == o.q_.Q1 && q_.Q2 == o.q_.Q2;
    }

  private:
    friend ReducedQuadruplet reduce(const Quadruplet&);
    explicit ReducedQuadruplet(Quadruplet q) : q_(std::move(q)) {}
    Quadruplet q_;
};

// four-step reduction; the result is the unique reduced representative of
// the equivalence class (equal expansions up to an additive constant)
ReducedQuadruplet reduce(const Quadruplet& q);

struct DqDecomposition {
    RingElem d;        // in U(R)
    RingElem q1, q2;   // p1 = d*q1, p2 = q2/d, gcd(d, q2) a unit
    PolyR Q2_tilde;    // d*Q2, integral
};
DqDecomposition dq_decompose(const ReducedQuadruplet& q);

enum class TameVerdict { Tame, NotTame, Undetermined };

struct TamePairWitness {
    PlaneMapR sigma, tau;  // all four components in B^1(R), sigma(tau(y)) = F
};

struct ClassificationReport {
    bool mate_length1 = false;
    std::optional<PlaneMapR> mate;  // (F, G) with G in B^1(R)

    bool length_1plus1 = false;
    std::optional<PlaneMapR> one_plus_one_sigma;  // sigma(y) in B^1(R)
    std::optional<PlaneMapR> one_plus_one_tau;    // tau(y) in B^1(R), sigma(tau(y)) = F

    TameVerdict tame = TameVerdict::Undetermined;
    std::optional<TamePairWitness> tame_pair;
    std::optional<Word> tame_word;  // integral factorization when one was found
    std::string tame_reason;        // justification / failure reason

    std::optional<std::string> wild_3d_note;  // only for R = K[z] and NotTame
};

// requires expand(q) in VA_2(R); throws NotCoordinate otherwise
ClassificationReport classify(const ReducedQuadruplet& q, unsigned long budget = 200);

}  // namespace rxy
