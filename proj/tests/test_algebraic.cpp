#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "univoq/algebraic.hpp"

using namespace univoq;

TEST_CASE("isolation in a window") {
    auto roots = isolate_roots(IntPoly::parse("x^2-x-1"), Rat(1), Rat(2));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].decimal(10) == "1.618033989");
    CHECK(isolate_roots(IntPoly::parse("x^2-2"), Rat(2), Rat(3)).empty());
    auto r2 = isolate_roots(IntPoly::parse("x^3-x-1"), Rat(1), Rat(2));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].decimal(5) == "1.3247");
}

TEST_CASE("refine keeps the certificate and only shrinks") {
    auto r = isolate_roots(IntPoly::parse("x^4-x^3-2*x^2+1"), Rat(1), Rat(2))[0];
    auto [lo0, hi0] = r.interval();
    auto [lo1, hi1] = r.refine(Rat(Int(1), Int(1000000000)));
    CHECK(hi1 - lo1 <= Rat(Int(1), Int(1000000000)));
    CHECK(lo1 >= lo0);
    CHECK(hi1 <= hi0);
    SturmChain ch(r.defining());
    CHECK(ch.count(lo1, hi1) == 1);
    // requesting a width coarser than the current one changes nothing
    auto [lo2, hi2] = r.refine(Rat(1));
    CHECK(lo2 == lo1);
    CHECK(hi2 == hi1);
    CHECK(r.decimal(10) == "1.905166168");
}

TEST_CASE("exact comparisons") {
    auto g = isolate_roots(IntPoly::parse("x^2-x-1"), Rat(1), Rat(2))[0];
    CHECK(g.compare(Rat(1)) == 1);
    CHECK(g.compare(Rat(2)) == -1);
    CHECK(g.compare(Rat(1618, 1000)) == 1);
    CHECK(g.compare(Rat(1619, 1000)) == -1);
    // sign_of decides polynomial relations exactly
    CHECK(g.sign_of(IntPoly::parse("x^2-x-1")) == 0);
    CHECK(g.sign_of(IntPoly::parse("x^2-x-2")) < 0);
    CHECK(g.sign_of(IntPoly::parse("x^3-2")) > 0);  // g^3 ~ 4.236 > 2
    auto c = isolate_roots(IntPoly::parse("x^3-x-1"), Rat(1), Rat(2))[0];
    CHECK(g.compare(c) == 1);
    CHECK(c.compare(g) == -1);
    CHECK(g.compare(g) == 0);
    // same number reached through different defining polynomials
    IntPoly prod = IntPoly::parse("x^2-x-1") * IntPoly::parse("x^2+1");
    auto g2 = isolate_roots(prod, Rat(1), Rat(2))[0];
    CHECK(g.compare(g2) == 0);
}

TEST_CASE("decimal rounding") {
    auto s = isolate_roots(IntPoly::parse("x^2-2"), Rat(1), Rat(2))[0];
    CHECK(s.decimal(10) == "1.414213562");
    CHECK(s.decimal(4) == "1.414");
    CHECK(s.decimal(1) == "1");
    auto big = isolate_roots(IntPoly::parse("x^2-200"), Rat(14), Rat(15))[0];
    CHECK(big.decimal(4) == "14.14");
    CHECK(big.approx() == doctest::Approx(14.1421356).epsilon(1e-6));
}

TEST_CASE("rational-root polynomials still isolate correctly") {
    // x^2-1 in (0, 2) has the rational root 1; bisection must cope with
    // midpoints landing exactly on it
    auto r = isolate_roots(IntPoly::parse("x^2-1"), Rat(0), Rat(2));
    REQUIRE(r.size() == 1);
    CHECK(r[0].compare(Rat(1)) == 0);
    CHECK(r[0].decimal(6) == "1.00000");
    auto [lo, hi] = r[0].refine(Rat(Int(1), Int(1000000)));
    CHECK(hi - lo <= Rat(Int(1), Int(1000000)));
}
