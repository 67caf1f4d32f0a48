#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rxy/cotame.hpp"
#include "rxy/parse.hpp"

using namespace rxy;

namespace {

PolyQ pq(const std::string& s) { return parse_poly(s, Ring::PolyZ); }
PolyR pr(const std::string& s) { return parse_poly_integral(s, Ring::PolyZ); }
RingElem re(const std::string& s) { return parse_ring_elem(s, Ring::PolyZ); }
FracElem fe(const std::string& s) { return parse_frac_elem(s, Ring::PolyZ); }

ThreeMap nagata_map() {
    return ThreeMap(construct_rs(re("z^2"), pr("y + z y^2"), re("-1")).sigma);
}

}  // namespace

TEST_CASE("conjugation by the unit translation") {
    const Ring r = Ring::PolyZ;
    // identity conjugates to t itself
    const ThreeMap id(PlaneMapR::identity(r));
    const ThreeMap t = conjugate_by_translation(id);
    CHECK(t.base == PlaneMapR{pr("x + 1"), pr("y")});

    // the classical map conjugates to (x + 2zy + 1 - z^3, y - z^2, z)
    const ThreeMap tau = conjugate_by_translation(nagata_map());
    CHECK(tau.base == PlaneMapR{pr("x + 2zy + 1 - z^3"), pr("y - z^2")});

    // triangular maps conjugate to triangular maps
    const ThreeMap tri(PlaneMapR{pr("x + z y^3"), pr("y")});
    CHECK(is_triangular(conjugate_by_translation(tri).base));
}

TEST_CASE("length 1 certificate for the classical wild map") {
    const CotameCertificate cert = certify_cotame_r1(re("z^2"), pr("y + z y^2"), re("-1"));
    CHECK(cert.kind == CotameCertificate::Kind::BaseTriangular);
    REQUIRE(cert.tau.has_value());
    CHECK(*cert.tau == PlaneMapR{pr("x + 2zy + 1 - z^3"), pr("y - z^2")});
    CHECK(verify_certificate(cert, nagata_map()).ok);
}

TEST_CASE("length 1 certificate, high degree branch") {
    const CotameCertificate cert = certify_cotame_r1(re("1"), pr("y^3"), re("1"));
    CHECK(cert.kind == CotameCertificate::Kind::BaseTriangular);
    const ThreeMap sigma(construct_rs(re("1"), pr("y^3"), re("1")).sigma);
    CHECK(verify_certificate(cert, sigma).ok);
}

TEST_CASE("length 1 certificate, bi-triangular branch") {
    // p1 in K*, quadratic coefficient in K: conjugate is affine, sigma = b1 a b2
    const CotameCertificate cert = certify_cotame_r1(re("1"), pr("y + y^2"), re("1"));
    CHECK(cert.kind == CotameCertificate::Kind::BaseBAB);
    const ThreeMap sigma(construct_rs(re("1"), pr("y + y^2"), re("1")).sigma);
    CHECK(verify_certificate(cert, sigma).ok);
}

TEST_CASE("length 1 certificate, parabolic branch") {
    // c = 0 with non-constant p1: sigma is z-affine, certified via a parabolic
    // sandwich
    const CotameCertificate cert = certify_cotame_r1(re("z"), pr("y"), re("-1"));
    CHECK(cert.kind == CotameCertificate::Kind::BaseParabolic);
    const ThreeMap sigma(construct_rs(re("z"), pr("y"), re("-1")).sigma);
    CHECK(verify_certificate(cert, sigma).ok);
}

TEST_CASE("affine input is rejected") {
    CHECK_THROWS_AS(certify_cotame_r1(re("1"), pr("y"), re("1")), AffineInput);
}

TEST_CASE("length 2 certificate for the classical presentation") {
    const Rl2Data data(re("z^2"), re("1"), re("-1"), pr("y + z y^2"), pr("y - z y^2"));
    const CoordinateWitness w = construct_rl2(data);
    const ThreeMap sigma(w.sigma);
    const CotameCertificate cert = certify_cotame_r2(rl2_word(w), sigma);
    // deg Q2 = 2: exactly one conjugation step before the length 1 base
    CHECK(cert.kind == CotameCertificate::Kind::RecurseConjugate);
    CHECK(cert.middle_degree == 2);
    REQUIRE(cert.child);
    CHECK(cert.child->kind == CotameCertificate::Kind::CollapseToR1);
    CHECK(verify_certificate(cert, sigma).ok);
}

TEST_CASE("length 2 certificate recursion strictly decreases the middle degree") {
    const Ring r = Ring::PolyZ;
    // synthetic degree 4 presentation with unit multipliers
    const Triangular t1{fe("1"), pq("z y^2")};
    const Triangular t2{fe("1"), pq("y^4 + z y")};
    const Triangular t3{fe("1"), pq("y^2 - z^3 y")};
    const Word word{r, {t1, Swap{}, t2, Swap{}, t3}};
    const PlaneMapQ sq = recompose(word);
    REQUIRE(is_integral(sq.f1));
    REQUIRE(is_integral(sq.f2));
    const ThreeMap sigma(to_integral(sq));
    const CotameCertificate cert = certify_cotame_r2(word, sigma);
    CHECK(verify_certificate(cert, sigma).ok);
    // walk the chain: middle degrees 4 > 3 > 2 > collapse
    std::vector<int> degs;
    for (const CotameCertificate* c = &cert; c; c = c->child.get())
        if (c->middle_degree >= 0) degs.push_back(c->middle_degree);
    REQUIRE(degs.size() >= 3);
    for (size_t i = 0; i + 1 < degs.size(); ++i) CHECK(degs[i] > degs[i + 1]);
    CHECK(degs.front() == 4);
}

TEST_CASE("degree <= 1 middle factors delegate immediately") {
    const Ring r = Ring::PolyZ;
    const Triangular t1{fe("1"), pq("z y^3")};
    const Triangular t2{fe("1"), pq("2y")};
    const Triangular t3{fe("1"), pq("y^2")};
    const Word word{r, {t1, Swap{}, t2, Swap{}, t3}};
    const PlaneMapQ sq = recompose(word);
    REQUIRE(is_integral(sq.f1));
    REQUIRE(is_integral(sq.f2));
    const ThreeMap sigma(to_integral(sq));
    const CotameCertificate cert = certify_cotame_r2(word, sigma);
    CHECK(cert.kind == CotameCertificate::Kind::CollapseToR1);
    CHECK(verify_certificate(cert, sigma).ok);
}

TEST_CASE("tampered certificates fail replay at the conjugation step") {
    const CotameCertificate good = certify_cotame_r1(re("z^2"), pr("y + z y^2"), re("-1"));
    CotameCertificate bad{good.kind, good.sigma, good.tau, {}, {}, {}, {}, {}, {}, -1, good.axiom,
                          nullptr};
    bad.tau = PlaneMapR{pr("x + 2zy + 1"), pr("y - z^2")};  // wrong constant
    const ReplayResult rr = verify_certificate(bad, nagata_map());
    CHECK_FALSE(rr.ok);
    CHECK(rr.failed_step.find("conjugate") != std::string::npos);
}

TEST_CASE("the Derksen base case replays") {
    const Ring r = Ring::PolyZ;
    const PlaneMapR derksen{pr("x + y^2"), pr("y")};
    CotameCertificate cert{CotameCertificate::Kind::BaseDerksen, derksen, {}, {}, {}, {}, {}, {},
                           {}, -1, "Derksen: (x + y^2, y, z) is co-tame", nullptr};
    CHECK(verify_certificate(cert, ThreeMap(derksen)).ok);
    CotameCertificate wrong{CotameCertificate::Kind::BaseDerksen, PlaneMapR::identity(r), {}, {},
                            {}, {}, {}, {}, {}, -1, "", nullptr};
    CHECK_FALSE(verify_certificate(wrong, ThreeMap(PlaneMapR::identity(r))).ok);
}

TEST_CASE("orbit stability under affine sandwiching") {
    const Ring r = Ring::PolyZ;
    const PlaneMapR alpha{pr("y + 1"), pr("-x + 2y")};
    const PlaneMapR beta{pr("x - y"), pr("y + z - 3")};
    REQUIRE(is_affine(alpha));
    REQUIRE(is_affine(beta));
    CotameCertificate inner = certify_cotame_r1(re("z^2"), pr("y + z y^2"), re("-1"));
    const PlaneMapR inner_sigma = inner.sigma;
    const CotameCertificate outer = sandwich_certificate(alpha, beta, std::move(inner));
    const PlaneMapR expected = compose(compose(alpha, inner_sigma), beta);
    CHECK(outer.sigma == expected);
    CHECK(verify_certificate(outer, ThreeMap(expected)).ok);
}
