#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rxy/equivalence.hpp"
#include "rxy/parse.hpp"

using namespace rxy;

namespace {

PolyQ pq(const std::string& s, Ring r = Ring::PolyZ) { return parse_poly(s, r); }
PolyR pr(const std::string& s, Ring r = Ring::PolyZ) { return parse_poly_integral(s, r); }
RingElem re(const std::string& s, Ring r = Ring::PolyZ) { return parse_ring_elem(s, r); }

// q(y) with q(0) = 0, z-free, degree <= maxdeg
PolyR random_q(std::mt19937_64& g, int maxdeg) {
    std::uniform_int_distribution<long> dc(-10, 10);
    std::uniform_int_distribution<int> dd(1, maxdeg);
    PolyR out(Ring::PolyZ);
    const int d = dd(g);
    for (int k = 1; k <= d; ++k)
        out.add_term({0, k}, RingElem(UniPoly(mpq_class(dc(g)))));
    return out;
}

PolyR poloni_Q(const PolyR& q) {
    // Q(y) = -y^2 - z q(y)
    return -pr("y^2") - q.scaled(re("z"));
}

}  // namespace

TEST_CASE("witness verification on the worked pair") {
    // p1 = p2 = z^2, Q1 = -y^2 - z y^3, Q2 = -y^2 + z y^3, u = 1, Q3 = z y
    const EquivWitness w = check_witness(re("z^2"), pr("-y^2 - z y^3"), re("z^2"),
                                         pr("-y^2 + z y^3"), re("1"), pr("z y"));
    CHECK(apply(w.sigma, pr("z^2 x - y^2 - z y^3")) == pr("z^2 x - y^2 + z y^3"));
    CHECK(vde_check(w.sigma));
}

TEST_CASE("identity witness") {
    const EquivWitness w = check_witness(re("z^2"), pr("-y^2"), re("z^2"), pr("-y^2"), re("1"),
                                         PolyR(Ring::PolyZ));
    CHECK(w.sigma == PlaneMapR::identity(Ring::PolyZ));
}

TEST_CASE("the parity obstruction shows up as a failed congruence") {
    // q1 = y^2, q2 = 0: even parts differ, no (u, Q3) can work; a concrete
    // candidate fails (**)
    CHECK_THROWS_AS(check_witness(re("z^2"), pr("-y^2 - z y^2"), re("z^2"), pr("-y^2"), re("1"),
                                  pr("z y")),
                    StarStarFailed);
    CHECK_THROWS_AS(check_witness(re("z^2"), pr("-y^2 - z y^2"), re("z^2"), pr("-y^2"), re("-1"),
                                  PolyR(Ring::PolyZ)),
                    StarStarFailed);
}

TEST_CASE("star failure is reported separately") {
    // Y = z^-1 { y + Q3(z^2 x + y^3) } fails integrality for Q3 = y
    CHECK_THROWS_AS(check_witness(re("z"), pr("y^3"), re("z^2"), pr("y^3"), re("1"),
                                  pr("y")),
                    StarFailed);
}

TEST_CASE("necessary condition") {
    // coprime multipliers with both sides coordinates
    CHECK(necessary_va2(re("z^2"), pr("y + z y^2"), re("z-1"), pr("y")));
    // y^2 is not a VA_1 residue mod z^2
    CHECK_FALSE(necessary_va2(re("z^2"), pr("y"), re("z^2"), pr("y^2")));
    // equal multipliers reduce to p' = 1: always true
    CHECK(necessary_va2(re("z^2"), pr("y^2 + y"), re("z^2"), pr("y^5 + y")));
}

TEST_CASE("same-p decision: fixtures") {
    // Poloni family, equivalent pair
    const SamePResult r1 =
        decide_same_p(re("z^2"), poloni_Q(pr("y^3")), poloni_Q(pr("-y^3")));
    REQUIRE(r1.witness.has_value());
    CHECK(apply(r1.witness->sigma, pr("z^2 x") + poloni_Q(pr("y^3"))) ==
          pr("z^2 x") + poloni_Q(pr("-y^3")));

    // identical inputs
    const SamePResult r2 = decide_same_p(re("z^2"), poloni_Q(pr("y^2")), poloni_Q(pr("y^2")));
    REQUIRE(r2.witness.has_value());
    CHECK(r2.witness->u.is_one());
    CHECK(r2.witness->Q3.is_zero());

    // parity-refuted pair
    const SamePResult r3 = decide_same_p(re("z^2"), poloni_Q(pr("y^2")), poloni_Q(PolyR(Ring::PolyZ)));
    CHECK_FALSE(r3.witness.has_value());
}

TEST_CASE("same-p decision over Z") {
    const Ring ri = Ring::Int;
    const SamePResult r1 = decide_same_p(re("4", ri), pr("y + 2y^2", ri), pr("3y + 2y^2", ri));
    if (r1.witness) {
        CHECK(apply(r1.witness->sigma, pr("4x + y + 2y^2", ri)) == pr("4x + 3y + 2y^2", ri));
    }
    // a pair with no equivalence: y vs y^3-heavy tail that is not VA_1-shaped
    const SamePResult r2 = decide_same_p(re("4", ri), pr("y", ri), pr("y + y^2", ri));
    CHECK_FALSE(r2.witness.has_value());
}

TEST_CASE("poloni closed form") {
    CHECK(poloni_decide(pq("y^3"), pq("-y^3")));
    CHECK(poloni_decide(pq("y^5 - 2y^3 + y"), pq("y^5 - 2y^3 + y")));
    CHECK_FALSE(poloni_decide(pq("y^2"), PolyQ(Ring::PolyZ)));
    CHECK_THROWS_AS(poloni_decide(pq("1 + y"), pq("y")), Error);
}

TEST_CASE("poloni closed form agrees with the lifting decision") {
    std::mt19937_64 g(2024);
    int checked = 0;
    while (checked < 40) {
        const PolyR q1 = random_q(g, 5), q2 = random_q(g, 5);
        const PolyR Q1 = poloni_Q(q1), Q2 = poloni_Q(q2);
        const bool closed = poloni_decide(promote(q1), promote(q2));
        const SamePResult full = decide_same_p(re("z^2"), Q1, Q2);
        CHECK(closed == full.witness.has_value());
        if (full.witness)
            CHECK(apply(full.witness->sigma, pr("z^2 x") + Q1) == pr("z^2 x") + Q2);
        ++checked;
    }
}

TEST_CASE("witnesses are symmetric under inversion") {
    const EquivWitness w = check_witness(re("z^2"), pr("-y^2 - z y^3"), re("z^2"),
                                         pr("-y^2 + z y^3"), re("1"), pr("z y"));
    const PlaneMapR inv = to_integral(invert_over_field(promote(w.sigma)));
    CHECK(apply(inv, pr("z^2 x - y^2 + z y^3")) == pr("z^2 x - y^2 - z y^3"));
    CHECK(vde_check(inv));
}
