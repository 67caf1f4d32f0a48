#pragma once

// Co-tameness certificates for non-affine z-automorphisms of K[x,y,z].
// A certificate is a replayable tree: conjugations by the unit translation
// t = (x+1, y, z), degree-reducing recursion on the middle factor, and base
// cases that cite the Bodnarchuk / Derksen results as axioms.

#include <memory>
#include <optional>

#include "rxy/construct.hpp"

namespace rxy {

struct NotAutomorphism3 : Error {
    NotAutomorphism3() : Error("the base plane map is not in GA_2(K[z])") {}
};
struct AffineInput : Error {
    AffineInput() : Error("affine automorphisms are not co-tame") {}
};
struct NotR2Presentation : Error {
    explicit NotR2Presentation(const std::string& s) : Error("not a usable R^2 presentation: " + s) {}
};
struct CotameSearchFailed : Error {
    explicit CotameSearchFailed(const std::string& s) : Error("certificate search failed: " + s) {}
};

// z-automorphism (f1, f2, z) of K[x,y,z], identified with its plane part
struct ThreeMap {
    explicit ThreeMap(PlaneMapR base_);
    PlaneMapR base;
};

// tau = sigma . t . sigma^-1 with t = (x+1, y, z), computed exactly
ThreeMap conjugate_by_translation(const ThreeMap& sigma);

struct CotameCertificate {
    enum class Kind {
        BaseTriangular,    // tau = sigma t sigma^-1 sits in B \ A
        BaseBAB,           // sigma = b1 . a . b2 exhibited and replayed
        BaseParabolic,     // alpha . sigma . beta sits in P \ A
        BaseDerksen,       // sigma = (x + y^2, y, z)
        RecurseConjugate,  // continue on tau = sigma t sigma^-1 (middle degree drops)
        CollapseToR1,      // middle factor affine: sigma(y) is a length 1 coordinate
        Sandwich,          // sigma = alpha . inner . beta with affine alpha, beta
    };
    Kind kind;
    PlaneMapR sigma;  // the map this node certifies

    std::optional<PlaneMapR> tau;                  // BaseTriangular / RecurseConjugate
    std::optional<PlaneMapR> b1, a, b2;            // BaseBAB
    std::optional<PlaneMapR> alpha, beta, theta;   // BaseParabolic / Sandwich
    int middle_degree = -1;                        // deg_y(Q2) at recursion nodes
    std::string axiom;                             // citation recorded at base cases
    std::unique_ptr<CotameCertificate> child;
};

// the rational length 1 case: sigma built from (p1, Q1, u) as in the
// length-1 construction; rejects affine input
CotameCertificate certify_cotame_r1(const RingElem& p1, const PolyR& Q1, const RingElem& u);

// same analysis applied to a given sigma with sigma(y) = p1*x + Q1(y)
CotameCertificate certify_cotame_r1_map(const PlaneMapR& sigma);

// the rational length 2 case: word is a presentation of sigma with factors
// [tau1, pi, tau2, pi, tau3] (identity affine tails tolerated); recursion on
// the middle degree, delegating to the length 1 case at the bottom
CotameCertificate certify_cotame_r2(const Word& word, const ThreeMap& sigma);

// orbit step: alpha . inner . beta is co-tame whenever inner is
CotameCertificate sandwich_certificate(const PlaneMapR& alpha, const PlaneMapR& beta,
                                       CotameCertificate inner);

struct ReplayResult {
    bool ok = true;
    std::string failed_step;
};
ReplayResult verify_certificate(const CotameCertificate& cert, const ThreeMap& sigma);

}  // namespace rxy
