#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jumplab/dyadic.hpp>
#include <jumplab/errors.hpp>
#include <jumplab/grid.hpp>
#include <jumplab/interval_union.hpp>
#include <jumplab/rational.hpp>
#include <jumplab/rng.hpp>

#include <set>

using namespace jumplab;

TEST_CASE("dyadic parse, canonical form, printing") {
    CHECK(Dyadic::parse("5/16").str() == "5/16");
    CHECK(Dyadic::parse("0").str() == "0");
    CHECK(Dyadic::parse("1").str() == "1");
    CHECK(Dyadic::parse("-3/8").str() == "-3/8");
    CHECK(Dyadic::parse("1365/4096").str() == "1365/4096");
    // 6/16 reduces
    CHECK(Dyadic(mpz_class(6), 4).str() == "3/8");
    CHECK(Dyadic(mpz_class(6), 4).exponent() == 3);
    CHECK(Dyadic(mpz_class(4), 2).str() == "1");
    CHECK_THROWS_AS(Dyadic::parse("1/3"), precondition_error);
    CHECK_THROWS_AS(Dyadic::parse("1/0"), precondition_error);
    CHECK_THROWS_AS(Dyadic::parse("abc"), precondition_error);
}

TEST_CASE("dyadic arithmetic") {
    const Dyadic q = Dyadic::parse("1/4");
    const Dyadic e = Dyadic::parse("1/8");
    CHECK((q + e).str() == "3/8");
    CHECK((Dyadic::parse("1/2") - Dyadic::parse("5/8")).str() == "-1/8");
    CHECK((Dyadic::parse("3/8") * Dyadic::parse("1/2")).str() == "3/16");
    CHECK(Dyadic::parse("3/8").scaled_pow2(-1).str() == "3/16");
    CHECK(Dyadic::parse("3/8").scaled_pow2(2).str() == "3/2");
    CHECK(abs(Dyadic::parse("-3/8")).str() == "3/8");
    CHECK(unit_pow2(6).str() == "1/64");
    CHECK(Dyadic::parse("5/16").to_double() == 0.3125);
}

TEST_CASE("dyadic floor and ceil against a scaled grid") {
    const Dyadic t = Dyadic::parse("5/16");
    CHECK(t.floor_scaled(2) == 1);  // floor(5/4)
    CHECK(t.ceil_scaled(2) == 2);
    CHECK(Dyadic::parse("1/4").floor_scaled(2) == 1);
    CHECK(Dyadic::parse("1/4").ceil_scaled(2) == 1);
    CHECK(Dyadic::parse("1/4").is_integer_scaled(2));
    CHECK_FALSE(Dyadic::parse("5/16").is_integer_scaled(2));
}

TEST_CASE("dyadic min and max survive temporary arguments") {
    // Regression: these used to return references into destroyed
    // temporaries when the chosen side was constructed inline.
    const Dyadic a = Dyadic::parse("3/8");
    const Dyadic lo = max(a - Dyadic(1), Dyadic(0));
    const Dyadic hi = min(a + Dyadic(1), Dyadic(1));
    CHECK(lo.str() == "0");
    CHECK(hi.str() == "1");
    CHECK(min(Dyadic::parse("1/4"), Dyadic::parse("3/4")).str() == "1/4");
    CHECK(max(Dyadic::parse("1/4"), Dyadic::parse("3/4")).str() == "3/4");
}

TEST_CASE("rational parse, arithmetic, printing") {
    CHECK(BigRational::parse("140/3").str() == "140/3");
    CHECK(BigRational::parse("-2/7").str() == "-2/7");
    CHECK(BigRational::parse("6/4").str() == "3/2");
    CHECK(BigRational::inverse_factorial(3).str() == "1/6");
    CHECK(BigRational::inverse_factorial(0).str() == "1");
    CHECK((BigRational::parse("1/6") * BigRational(4)).str() == "2/3");
    CHECK((BigRational::parse("5/16") / BigRational::parse("1/48")).str() == "15");
    CHECK(BigRational(Dyadic::parse("5/16")).str() == "5/16");
    CHECK_THROWS_AS(BigRational::parse("1/0"), precondition_error);
}

TEST_CASE("doubles convert to exact rationals") {
    CHECK(rational_from_double(0.3125).str() == "5/16");
    CHECK(rational_from_double(1.0).str() == "1");
    CHECK(rational_from_double(-0.5).str() == "-1/2");
    // 0.1 is not 1/10 in binary64; the conversion must not pretend it is.
    CHECK(rational_from_double(0.1).str() == "3602879701896397/36028797018963968");
    CHECK_THROWS_AS(rational_from_double(1.0 / 0.0), precondition_error);
}

TEST_CASE("interval unions merge, sum, and reject degenerates") {
    IntervalUnion u;
    u.insert(Dyadic(0), Dyadic::parse("1/2"));
    u.insert(Dyadic::parse("1/4"), Dyadic::parse("3/4"));
    CHECK(u.total_length().str() == "3/4");
    CHECK(u.size() == 1);

    IntervalUnion v;
    CHECK(v.total_length().str() == "0");
    CHECK(v.empty());

    IntervalUnion w;
    w.insert(Dyadic(0), Dyadic::parse("1/4"));
    w.insert(Dyadic::parse("1/2"), Dyadic::parse("5/8"));
    CHECK(w.total_length().str() == "3/8");
    CHECK(w.size() == 2);

    CHECK_THROWS_AS(w.insert(Dyadic::parse("1/2"), Dyadic::parse("1/2")), precondition_error);
    CHECK_THROWS_AS(w.insert(Dyadic::parse("1/2"), Dyadic::parse("1/4")), precondition_error);
}

TEST_CASE("interval union membership and intersection") {
    IntervalUnion u;
    u.insert(Dyadic(0), Dyadic::parse("1/4"));
    u.insert(Dyadic::parse("1/2"), Dyadic::parse("5/8"));
    CHECK(u.contains(Dyadic::parse("1/8")));
    CHECK_FALSE(u.contains(Dyadic::parse("1/4")));  // open at endpoints
    CHECK_FALSE(u.contains(Dyadic::parse("3/8")));
    CHECK(u.covers(Dyadic::parse("1/16"), Dyadic::parse("3/16")));
    CHECK_FALSE(u.covers(Dyadic::parse("1/8"), Dyadic::parse("9/16")));
    IntervalUnion probe;
    probe.insert(Dyadic::parse("1/8"), Dyadic::parse("9/16"));
    CHECK(u.intersection_length(probe).str() == "3/16");

    const IntervalUnion cut = u.intersect(Dyadic::parse("1/8"), Dyadic::parse("9/16"));
    CHECK(cut.size() == 2);
    CHECK(cut.total_length().str() == "3/16");
}

TEST_CASE("clipping to the unit interval") {
    const auto a = clip_to_unit(Dyadic::parse("-1/4"), Dyadic::parse("1/8"));
    REQUIRE(a.has_value());
    CHECK(a->first.str() == "0");
    CHECK(a->second.str() == "1/8");
    const auto b = clip_to_unit(Dyadic::parse("7/8"), Dyadic::parse("9/8"));
    REQUIRE(b.has_value());
    CHECK(b->first.str() == "7/8");
    CHECK(b->second.str() == "1");
    CHECK_FALSE(clip_to_unit(Dyadic::parse("9/8"), Dyadic(2)).has_value());
    CHECK_FALSE(clip_to_unit(Dyadic::parse("-1/2"), Dyadic(0)).has_value());
}

TEST_CASE("nearest grid point and distance") {
    const auto a = grid_distance(Dyadic::parse("3/8"), 1);
    CHECK(a.distance.str() == "1/8");
    CHECK(a.nearest.str() == "1/2");

    const auto b = grid_distance(Dyadic::parse("1/2"), 3);
    CHECK(b.distance.str() == "0");
    CHECK(b.nearest.str() == "1/2");

    const auto c = grid_distance(Dyadic::parse("11/64"), 4);
    CHECK(c.distance.str() == "1/64");
    CHECK(c.nearest.str() == "3/16");

    // Ties resolve toward the smaller grid point.
    const auto tie = grid_distance(Dyadic::parse("1/4"), 1);
    CHECK(tie.distance.str() == "1/4");
    CHECK(tie.nearest.str() == "0");

    CHECK_THROWS_AS(grid_distance(Dyadic::parse("-1/8"), 1), precondition_error);
    CHECK_THROWS_AS(grid_distance(Dyadic::parse("9/8"), 1), precondition_error);
}

TEST_CASE("grid windows are strict and ascending") {
    const auto a = grid_window(1, Dyadic::parse("3/8"), Dyadic::parse("1/4"));
    REQUIRE(a.size() == 1);
    CHECK(a[0].str() == "1/2");

    const auto b = grid_window(0, Dyadic::parse("1/2"), Dyadic(1));
    REQUIRE(b.size() == 2);
    CHECK(b[0].str() == "0");
    CHECK(b[1].str() == "1");

    CHECK(grid_window(2, Dyadic::parse("5/16"), Dyadic::parse("1/32")).empty());

    // Strictness: a point at distance exactly r stays out.
    CHECK(grid_window(1, Dyadic::parse("3/8"), Dyadic::parse("1/8")).empty());
}

TEST_CASE("reduced level reads off the exponent") {
    CHECK(reduced_level(Dyadic::parse("5/16")) == 4);
    CHECK(reduced_level(Dyadic::parse("1/2")) == 1);
    CHECK(reduced_level(Dyadic(0)) == 0);
    CHECK(reduced_level(Dyadic(1)) == 0);
    CHECK(distance_to_grid(Dyadic::parse("11/64"), 4).str() == "1/64");
}

TEST_CASE("random streams are deterministic and bounded") {
    Rng a(42), b(42);
    for (int i = 0; i < 5; ++i) CHECK(a.next() == b.next());

    Rng r(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t v = r.below(10);
        CHECK(v < 10);
        seen.insert(v);
    }
    CHECK(seen.size() == 10);  // all residues show up

    CHECK(r.range(3, 3) == 3);
    const mpz_class bound = mpz_class("1000000000000000000000000000000");
    for (int i = 0; i < 20; ++i) {
        const mpz_class v = r.below_big(bound);
        CHECK(v >= 0);
        CHECK(v < bound);
    }

    Rng s1(9), s2(9);
    Rng c1 = s1.split(3), c2 = s2.split(3);
    for (int i = 0; i < 5; ++i) CHECK(c1.next() == c2.next());
    CHECK_THROWS_AS(r.below(0), precondition_error);
}
