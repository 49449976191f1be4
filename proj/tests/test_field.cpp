#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "univoq/field.hpp"

using namespace univoq;

namespace {

NumberField golden_field() {
    IntPoly p = IntPoly::parse("x^2-x-1");
    return NumberField(p, isolate_roots(p, 1, 2).at(0));
}

NumberField tribonacci_field() {
    IntPoly p = IntPoly::parse("x^3-x^2-x-1");
    return NumberField(p, isolate_roots(p, 1, 2).at(0));
}

}  // namespace

TEST_CASE("golden ratio arithmetic") {
    NumberField F = golden_field();
    FieldElement b = F.beta();

    // beta^2 = beta + 1
    CHECK(b * b == b + F.one());
    CHECK((b * b).coords() == std::vector<Rat>{1, 1});
    // beta^3 = 2 beta + 1
    CHECK(b * b * b == b * Rat(2) + Rat(1));

    // 1/beta = beta - 1
    CHECK(b.inverse() == b - Rat(1));
    CHECK(b * b.inverse() == F.one());

    CHECK(b.floor() == 1);
    CHECK((b * b).floor() == 2);       // 2.618...
    CHECK((b * b * b).floor() == 4);   // 4.236...
    CHECK(b.ceil() == 2);
    CHECK((-b).floor() == -2);
    CHECK((-b).ceil() == -1);

    // element that is exactly an integer
    FieldElement one = b * b - b;
    CHECK(one == F.one());
    CHECK(one.floor() == 1);
    CHECK(one.ceil() == 1);

    // sign against Fibonacci convergents straddling the root
    CHECK(b.compare(Rat(8, 5)) == 1);    // 1.6 < beta
    CHECK(b.compare(Rat(13, 8)) == -1);  // beta < 1.625
    CHECK(b.sign() == 1);
    CHECK((-b).sign() == -1);
    CHECK(F.zero().sign() == 0);
    CHECK(F.zero().is_zero());

    CHECK(b.key() == "0,1");
    CHECK((b - Rat(1)).key() == "-1,1");
}

TEST_CASE("cubic field arithmetic") {
    NumberField F = tribonacci_field();
    FieldElement b = F.beta();

    // beta^3 = beta^2 + beta + 1
    CHECK(b * b * b == b * b + b + F.one());
    CHECK(b * b.inverse() == F.one());
    CHECK(b.floor() == 1);
    CHECK((b * b).floor() == 3);  // 3.38...

    // (beta - 1)^(-1) * (beta - 1) = 1
    FieldElement g = b - Rat(1);
    CHECK(g * g.inverse() == F.one());

    // enclosure brackets the true value
    auto [lo, hi] = (b * b).enclosure(Rat(1, 1000));
    CHECK(hi - lo <= Rat(1, 1000));
    double v = F.root().approx();
    CHECK(lo.get_d() <= v * v);
    CHECK(v * v <= hi.get_d());
}

TEST_CASE("degenerate rational field") {
    IntPoly p = IntPoly::parse("x-2");
    NumberField F(p, isolate_roots(p, 1, 3).at(0));
    CHECK(F.degree() == 1);
    FieldElement b = F.beta();
    CHECK(b.floor() == 2);
    CHECK(b.inverse() == F.from_rat(Rat(1, 2)));
    CHECK(F.from_rat(Rat(1, 2)).ceil() == 1);
    CHECK(F.from_rat(Rat(1, 2)).floor() == 0);
    CHECK((b * b).floor() == 4);
}

TEST_CASE("adjoin_root picks the right factor") {
    // (x-1)(x^2-x-1): unique root in (1.2, 2) is the golden ratio
    NumberField F = NumberField::adjoin_root(IntPoly::parse("x^3-2x^2+1"),
                                             Rat(6, 5), 2);
    CHECK(F.minpoly() == IntPoly::parse("x^2-x-1"));
    CHECK(F.root().decimal(10) == "1.618033989");

    // two roots in the window is ambiguous
    IntPoly two = IntPoly::parse("x^2-x-1") * IntPoly::parse("x^2-3x+1");
    CHECK_THROWS_AS(NumberField::adjoin_root(two, 1, 3), std::invalid_argument);

    // reducible defining polynomial with the root on a degree-1 factor
    NumberField G = NumberField::adjoin_root(IntPoly::parse("x^2-4x+4"), 1, 3);
    CHECK(G.degree() == 1);
    CHECK(G.beta().floor() == 2);
}

TEST_CASE("errors") {
    IntPoly p = IntPoly::parse("x^2-x-1");
    auto root = isolate_roots(p, 1, 2).at(0);
    CHECK_THROWS_AS(NumberField(IntPoly::parse("x^2-1"), root),
                    std::invalid_argument);  // reducible
    CHECK_THROWS_AS(NumberField(IntPoly::parse("2x^2-x-1"), root),
                    std::invalid_argument);  // not monic
    NumberField F(p, root);
    CHECK_THROWS_AS(F.zero().inverse(), std::domain_error);
}

TEST_CASE("random floor values against a floating cross-check") {
    NumberField F = tribonacci_field();
    FieldElement b = F.beta();
    double bv = F.root().approx();
    std::mt19937 rng(13579);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        Rat c0(num(rng), den(rng)), c1(num(rng), den(rng)), c2(num(rng), den(rng));
        c0.canonicalize();
        c1.canonicalize();
        c2.canonicalize();
        FieldElement e = b * b * c2 + b * c1 + c0;
        double approx = c2.get_d() * bv * bv + c1.get_d() * bv + c0.get_d();
        // skip cases too close to an integer for the float check to be sound
        if (std::abs(approx - std::round(approx)) < 1e-6) continue;
        CHECK(e.floor() == Int(static_cast<long>(std::floor(approx))));
    }
}
