#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rxy/rings.hpp"

using namespace rxy;

namespace {
RingElem zi(long n) { return RingElem(mpz_class(n)); }
RingElem zp(std::vector<mpq_class> cs) { return RingElem(UniPoly::from_coeffs(std::move(cs))); }
}  // namespace

TEST_CASE("unit normalization over Z") {
    auto [u, w] = normalize_unit(zi(-6));
    CHECK(u == zi(-1));
    CHECK(w == zi(6));
    auto [u1, w1] = normalize_unit(zi(1));
    CHECK(u1 == zi(1));
    CHECK(w1 == zi(1));
    CHECK_THROWS_AS(normalize_unit(zi(0)), Error);
}

TEST_CASE("unit normalization over Q[z]") {
    // 2z^2 + 4z -> (2, z^2 + 2z)
    auto [u, w] = normalize_unit(zp({0, 4, 2}));
    CHECK(u == zp({2}));
    CHECK(w == zp({0, 2, 1}));
}

TEST_CASE("normalize_unit is idempotent and multiplicative") {
    for (long a : {-12L, -5L, 3L, 7L, 30L}) {
        const RingElem w = normalize_unit(zi(a)).canonical;
        CHECK(normalize_unit(w).canonical == w);
        for (long b : {-4L, 9L}) {
            CHECK(normalize_unit(zi(a * b)).canonical ==
                  normalize_unit(zi(a)).canonical * normalize_unit(zi(b)).canonical);
        }
    }
    const RingElem a = zp({1, -3, 2}), b = zp({0, 0, 5});
    CHECK(normalize_unit(a * b).canonical ==
          normalize_unit(a).canonical * normalize_unit(b).canonical);
}

TEST_CASE("gcd_bezout fixtures") {
    // 3*2 + 5*(-1) = 1
    auto bz = gcd_bezout(zi(3), zi(5));
    CHECK(bz.g == zi(1));
    CHECK(bz.s == zi(2));
    CHECK(bz.t == zi(-1));

    // one-sided case
    auto bz2 = gcd_bezout(zi(-6), zi(0));
    CHECK(bz2.g == zi(6));
    CHECK(bz2.s == zi(-1));
    CHECK(bz2.t == zi(0));

    // (z^2, z^2(z-1)) -> z^2
    const RingElem z2 = zp({0, 0, 1});
    const RingElem z2zm1 = zp({0, 0, -1, 1});
    auto bz3 = gcd_bezout(z2, z2zm1);
    CHECK(bz3.g == z2);
    CHECK(bz3.s * z2 + bz3.t * z2zm1 == z2);
}

TEST_CASE("gcd_bezout identity and order-independence of the canonical gcd") {
    for (long a : {-30L, -7L, 4L, 9L, 25L})
        for (long b : {-12L, 6L, 35L}) {
            auto f = gcd_bezout(zi(a), zi(b));
            auto g = gcd_bezout(zi(b), zi(a));
            CHECK(f.g == g.g);
            CHECK(f.s * zi(a) + f.t * zi(b) == f.g);
            CHECK(g.s * zi(b) + g.t * zi(a) == g.g);
        }
    CHECK_THROWS_AS(gcd_bezout(zi(0), zi(0)), Error);
}

TEST_CASE("nilpotency modulo p") {
    const RingElem z = zp({0, 1}), z2 = zp({0, 0, 1});
    CHECK(is_nilpotent_mod(z, z2));
    CHECK(is_nilpotent_mod(RingElem::zero(Ring::PolyZ), z2));
    // z mod z^2(z-1) is not nilpotent (Example 1's obstruction)
    CHECK_FALSE(is_nilpotent_mod(z, zp({0, 0, -1, 1})));
    CHECK_THROWS_AS(is_nilpotent_mod(z, RingElem::zero(Ring::PolyZ)), ZeroModulus);
}

TEST_CASE("nilpotency agrees with the direct minimal-power search for |p| <= 64") {
    for (long p = 2; p <= 64; ++p) {
        for (long a = 0; a < p; ++a) {
            bool direct = false;
            RingElem acc = RingElem::one(Ring::Int);
            for (unsigned k = 1; k <= nilpotency_bound(zi(p)); ++k) {
                acc = canonical_rem(acc * zi(a), zi(p));
                if (acc.is_zero()) {
                    direct = true;
                    break;
                }
            }
            CHECK(is_nilpotent_mod(zi(a), zi(p)) == direct);
        }
    }
}

TEST_CASE("units modulo p") {
    CHECK(is_unit_mod(zi(25), zi(3)));
    CHECK(is_unit_mod(zi(1), zi(12)));
    CHECK_FALSE(is_unit_mod(zp({0, 1}), zp({0, 0, 1})));
    // unit and nilpotent are mutually exclusive when p is not a unit
    for (long p : {4L, 9L, 12L})
        for (long a = 0; a < p; ++a)
            CHECK_FALSE((is_unit_mod(zi(a), zi(p)) && is_nilpotent_mod(zi(a), zi(p))));
}

TEST_CASE("inverse_mod") {
    const RingElem inv = inverse_mod(zi(25), zi(3));
    CHECK(canonical_rem(inv * zi(25), zi(3)).is_one());
    const RingElem b = zp({1, 1});  // 1 + z mod z^2
    const RingElem binv = inverse_mod(b, zp({0, 0, 1}));
    CHECK(canonical_rem(binv * b, zp({0, 0, 1})).is_one());
}

TEST_CASE("fractions canonicalize") {
    const FracElem f(zi(4), zi(-6));
    CHECK(f.num() == zi(-2));
    CHECK(f.den() == zi(3));
    const FracElem g(zp({0, 0, 2}), zp({0, 4}));  // 2z^2 / 4z = z/2
    CHECK(g.num() == zp({mpq_class(0), mpq_class(1, 2)}));
    CHECK(g.den() == zp({1}));
    CHECK((f * f.inverse()) == FracElem::one(Ring::Int));
    CHECK_THROWS_AS(FracElem(zi(1), zi(0)), DivisionError);
}

TEST_CASE("quotient canonical representatives") {
    CHECK(QuotElem(zi(-1), zi(5)).rep() == zi(4));
    CHECK(QuotElem(zp({0, 0, 0, 1}), zp({0, 0, 1})).rep().is_zero());  // z^3 mod z^2
    QuotElem a(zi(7), zi(5)), b(zi(4), zi(5));
    CHECK((a * b).rep() == zi(3));
    CHECK_THROWS_AS(QuotElem(zi(1), zi(0)), ZeroModulus);
}

TEST_CASE("radical") {
    CHECK(*radical(zi(12)) == zi(6));
    CHECK(*radical(zi(8)) == zi(2));
    CHECK(*radical(zp({0, 0, 0, -1, 1})) == zp({0, -1, 1}));  // z^3(z-1) -> z(z-1)
}

TEST_CASE("exact division and mixed-ring rejection") {
    CHECK(exact_div(zi(12), zi(-4)) == zi(-3));
    CHECK_THROWS_AS(exact_div(zi(7), zi(2)), DivisionError);
    CHECK_THROWS_AS(zi(1) + zp({1}), DomainMismatch);
}
