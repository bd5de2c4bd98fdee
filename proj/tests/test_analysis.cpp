#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jumplab/analysis.hpp>
#include <jumplab/errors.hpp>
#include <jumplab/fields.hpp>
#include <jumplab/grid.hpp>

#include <cmath>
#include <vector>

using namespace jumplab;

namespace {

PointM ones(unsigned depth) {
    return PointM{std::vector<std::uint32_t>(depth, 1)};
}

SpacePoint at(unsigned depth, const char* height) {
    return SpacePoint{ones(depth), Dyadic::parse(height)};
}

} // namespace

TEST_CASE("grid-avoiding height sets use a non-strict threshold") {
    // dist(11/64, level-4 grid) = 1/64, exactly the 1/2^6 threshold.
    CHECK(is_in_Ek(Dyadic::parse("11/64"), 4));
    CHECK(is_in_Ek(Dyadic::parse("3/8"), 1));
    // 1/2 sits on every grid.
    for (unsigned k = 1; k <= 8; ++k) CHECK_FALSE(is_in_Ek(Dyadic::parse("1/2"), k));
    // 11/64 is itself a level-6 grid point.
    CHECK_FALSE(is_in_Ek(Dyadic::parse("11/64"), 6));
}

TEST_CASE("doubling ratio is exact and equals one at growth factor one") {
    const SpacePoint c = at(3, "5/16");
    CHECK(doubling_ratio(c, Dyadic::parse("1/16"), Dyadic(1)) == BigRational(1));
    // ball(1/4) / ball(1/16) = (5/16) / (1/48).
    CHECK(doubling_ratio(c, Dyadic::parse("1/16"), Dyadic(4)) == BigRational(15));

    CHECK_THROWS_AS(doubling_ratio(c, Dyadic::parse("1/16"), Dyadic::parse("1/2")),
                    precondition_error);
    CHECK_THROWS_AS(doubling_ratio(c, Dyadic(0), Dyadic(4)), precondition_error);
}

TEST_CASE("non-doubling scan reports exact ratios and skips grid hits") {
    const std::vector<NonDoublingRow> rows =
        non_doubling_scan(ones(12), Dyadic::parse("11/64"), {3, 4, 5, 6, 7, 8});
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].level == 3);
    CHECK(rows[0].valid);
    CHECK(rows[0].ratio == BigRational::parse("140/3"));
    CHECK(rows[0].lower_bound == BigRational(8));
    CHECK(rows[0].bound_satisfied);

    CHECK(rows[1].valid);
    CHECK(rows[1].ratio == BigRational(210));
    CHECK(rows[1].lower_bound == BigRational(10));
    CHECK(rows[1].bound_satisfied);

    CHECK(rows[2].valid);
    CHECK(rows[2].ratio == BigRational(72));
    CHECK(rows[2].lower_bound == BigRational(12));
    CHECK(rows[2].bound_satisfied);

    // 11/64 lies on the level-6 grid, hence within 1/2^(k+2) of levels 6..8.
    for (std::size_t i = 3; i < rows.size(); ++i) {
        CHECK(rows[i].level == 3 + static_cast<unsigned>(i));
        CHECK_FALSE(rows[i].valid);
        CHECK(!rows[i].skip_reason.empty());
    }

    CHECK(non_doubling_scan(ones(12), Dyadic::parse("11/64"), {}).empty());
}

TEST_CASE("vertical derivative of the height coordinate is one") {
    const BigRational tol(1, 1000000000);
    CHECK(vertical_derivative(LipschitzField::height(), at(4, "11/64"), tol) == 1.0);
    CHECK(vertical_derivative(LipschitzField::constant(BigRational(3, 4)), at(4, "11/64"), tol) ==
          0.0);
}

TEST_CASE("vertical derivative of a distance field sees the sign of the move") {
    const BigRational tol(1, 1000000000);
    const SpacePoint p = at(4, "11/64");
    CHECK(vertical_derivative(LipschitzField::distance_to(at(4, "1/64")), p, tol) == 1.0);
    CHECK(vertical_derivative(LipschitzField::distance_to(at(4, "1/2")), p, tol) == -1.0);
    // At the anchor itself the symmetric quotient of the kink cancels.
    CHECK(vertical_derivative(LipschitzField::distance_to(p), p, tol) == 0.0);
}

TEST_CASE("vertical derivative failure modes") {
    const BigRational tol(1, 1000000000);
    const SpacePoint p = at(4, "11/64");
    // Budget ends right after the first quotient: nothing to compare.
    CHECK_THROWS_AS(vertical_derivative(LipschitzField::height(), p, tol, 3), no_stable_limit);
    // Budget ends while still looking for headroom below min(t, 1-t).
    CHECK_THROWS_AS(vertical_derivative(LipschitzField::height(), p, tol, 2), precondition_error);
    CHECK_THROWS_AS(vertical_derivative(LipschitzField::height(), p, BigRational(0)),
                    precondition_error);
    CHECK_THROWS_AS(vertical_derivative(LipschitzField::height(),
                                        SpacePoint{ones(4), Dyadic(0)}, tol),
                    precondition_error);
    CHECK_THROWS_AS(vertical_derivative(LipschitzField::height(),
                                        SpacePoint{ones(4), Dyadic(1)}, tol),
                    precondition_error);
}

TEST_CASE("defect of the height field vanishes under the correct slope") {
    const SpacePoint p = at(4, "11/64");
    Rng rng(7);
    const DefectEstimate est = approx_diff_defect(LipschitzField::height(), p, 1.0,
                                                  BigRational(1, 10), Dyadic::parse("1/16"),
                                                  2000, rng);
    CHECK(est.samples == 2000);
    CHECK(est.exceed_count == 0);
    CHECK(est.fraction == 0.0);
    CHECK(est.ci_low < 1e-12);
    CHECK(est.ci_high > 0.0);
    CHECK(est.ci_high < 0.01);
}

TEST_CASE("defect of the height field is total under slope zero") {
    // |height(q) - height(p)| > d(p,q)/10 for every drawn sample: the
    // pseudodistance never stretches a height gap by a factor of ten here.
    const SpacePoint p = at(4, "11/64");
    Rng rng(7);
    const DefectEstimate est = approx_diff_defect(LipschitzField::height(), p, 0.0,
                                                  BigRational(1, 10), Dyadic::parse("1/16"),
                                                  2000, rng);
    CHECK(est.exceed_count == 2000);
    CHECK(est.fraction == 1.0);
    CHECK(est.ci_low > 0.99);
    CHECK(est.ci_low <= est.fraction);
    CHECK(est.ci_high >= 0.999);
    CHECK(est.ci_high <= 1.0 + 1e-12);
}

TEST_CASE("defect of a far-away cone is zero") {
    // The cone's support ball (radius 3/16 around height 7/8) misses
    // B(p, 1/16) entirely, so the field is identically zero there.
    const SpacePoint p = at(4, "11/64");
    const LipschitzField f =
        LipschitzField::cone(at(4, "7/8"), SetDescriptor{JumpLevel{Dyadic::parse("1/2")}});
    Rng rng(7);
    const DefectEstimate est =
        approx_diff_defect(f, p, 0.0, BigRational(1, 10), Dyadic::parse("1/16"), 500, rng);
    CHECK(est.exceed_count == 0);
    CHECK(est.fraction == 0.0);
}

TEST_CASE("defect estimate rejects bad parameters") {
    const SpacePoint p = at(4, "11/64");
    Rng rng(7);
    CHECK_THROWS_AS(approx_diff_defect(LipschitzField::height(), p, 1.0, BigRational(0),
                                       Dyadic::parse("1/16"), 10, rng),
                    precondition_error);
    CHECK_THROWS_AS(approx_diff_defect(LipschitzField::height(), p, 1.0, BigRational(1, 10),
                                       Dyadic(0), 10, rng),
                    precondition_error);
    CHECK_THROWS_AS(approx_diff_defect(LipschitzField::height(), p, 1.0, BigRational(1, 10),
                                       Dyadic::parse("1/16"), 0, rng),
                    precondition_error);
}

TEST_CASE("chart uniqueness in dimension one is the last increment's exact ratio") {
    using CI = ChartIncrement;
    CHECK(chart_uniqueness_lambda({CI{{0.5}, 0.25}}, 1) == 2.0);
    // Three one-dimensional blocks: only the last one counts.
    CHECK(chart_uniqueness_lambda({CI{{2.0}, 1.0}, CI{{0.0}, 1.0}, CI{{3.0}, 2.0}}, 1) == 1.5);
}

TEST_CASE("chart uniqueness in dimension two scans directions") {
    using CI = ChartIncrement;
    // Orthogonal unit increments: min over directions of the larger
    // projection is 1/sqrt(2), attained on the grid.
    const double orth = chart_uniqueness_lambda({CI{{1.0, 0.0}, 1.0}, CI{{0.0, 1.0}, 1.0}}, 2);
    CHECK(std::abs(orth - 1.0 / std::sqrt(2.0)) < 1e-3);

    // Parallel increments cannot pin the direction they are blind to.
    CHECK(chart_uniqueness_lambda({CI{{1.0, 0.0}, 1.0}, CI{{2.0, 0.0}, 1.0}}, 2) < 1e-9);

    // Scaling increments and distances by a power of two changes nothing,
    // exactly.
    const double scaled = chart_uniqueness_lambda({CI{{4.0, 0.0}, 4.0}, CI{{0.0, 4.0}, 4.0}}, 2);
    CHECK(orth == scaled);

    // Block selection: an incomplete trailing block is ignored, and the
    // last complete block wins otherwise.
    CHECK(chart_uniqueness_lambda({CI{{1.0, 0.0}, 1.0}, CI{{0.0, 1.0}, 1.0}, CI{{9.0, 9.0}, 1.0}},
                                  2) == orth);
    CHECK(chart_uniqueness_lambda({CI{{9.0, 9.0}, 1.0}, CI{{9.0, 9.0}, 1.0}, CI{{1.0, 0.0}, 1.0},
                                   CI{{0.0, 1.0}, 1.0}},
                                  2) == orth);
}

TEST_CASE("chart uniqueness rejects bad input") {
    using CI = ChartIncrement;
    CHECK_THROWS_AS(chart_uniqueness_lambda({}, 1), precondition_error);
    CHECK_THROWS_AS(chart_uniqueness_lambda({CI{{1.0}, 1.0}}, 3), precondition_error);
    CHECK_THROWS_AS(chart_uniqueness_lambda({CI{{1.0, 0.0}, 1.0}}, 2), precondition_error);
    CHECK_THROWS_AS(chart_uniqueness_lambda({CI{{1.0}, 0.0}}, 1), precondition_error);
    CHECK_THROWS_AS(chart_uniqueness_lambda({CI{{1.0, 2.0}, 1.0}}, 1), precondition_error);
}

TEST_CASE("level sets are porous with ratio exactly one") {
    // The first vertical candidate (height + r/2) already attains the
    // ceiling d(c, S) = d(c, subject), and ties never displace it.
    const SetDescriptor s{JumpLevel{Dyadic::parse("1/2")}};
    const SpacePoint subject = at(4, "1/2");
    Rng rng(5);
    const PorosityScanResult scan =
        porosity_scan(s, subject, {Dyadic::parse("1/8"), Dyadic::parse("1/32")}, 16, rng);

    REQUIRE(scan.rows.size() == 2);
    REQUIRE(scan.certificates.size() == 2);
    CHECK(scan.rows[0].best_ratio == BigRational(1));
    REQUIRE(scan.rows[0].best.has_value());
    CHECK(scan.rows[0].best->witness == at(4, "9/16"));
    CHECK(scan.rows[1].best_ratio == BigRational(1));
    CHECK(scan.rows[1].best->witness == at(4, "33/64"));

    for (const WitnessCertificate& cert : scan.certificates) {
        CHECK(cert.verify(s));
        CHECK(cert.dist_to_subject.sign() > 0);
        CHECK(cert.dist_to_subject < Dyadic::parse("1/8"));
    }

    // Tampered certificates fail to re-verify.
    WitnessCertificate bad = scan.certificates[0];
    bad.ratio = BigRational(2);
    CHECK_FALSE(bad.verify(s));
    bad = scan.certificates[0];
    bad.dist_to_set = bad.dist_to_set + Dyadic::parse("1/64");
    CHECK_FALSE(bad.verify(s));
}

TEST_CASE("a singleton point set is porous at its point with ratio one") {
    const SpacePoint q = at(4, "1/2");
    const SetDescriptor s{FinitePointSet{{q}}};
    Rng rng(5);
    const PorosityScanResult scan = porosity_scan(s, q, {Dyadic::parse("1/8")}, 8, rng);
    REQUIRE(scan.rows.size() == 1);
    // Every admissible candidate has d(c, S) = d(c, q) on the nose.
    CHECK(scan.rows[0].best_ratio == BigRational(1));
    CHECK(scan.rows[0].best->verify(s));
}

TEST_CASE("porosity scan preconditions") {
    const SetDescriptor s{JumpLevel{Dyadic::parse("1/2")}};
    Rng rng(5);
    CHECK_THROWS_AS(porosity_scan(s, at(4, "1/4"), {Dyadic::parse("1/8")}, 4, rng),
                    precondition_error);
    CHECK_THROWS_AS(porosity_scan(s, at(4, "1/2"), {Dyadic(0)}, 4, rng), precondition_error);
}

TEST_CASE("nondifferentiability score against porosity witnesses") {
    const SetDescriptor s{JumpLevel{Dyadic::parse("1/2")}};
    const SpacePoint subject = at(4, "1/2");
    Rng rng(5);
    const PorosityScanResult scan =
        porosity_scan(s, subject, {Dyadic::parse("1/8"), Dyadic::parse("1/32")}, 16, rng);

    CHECK(nondiff_score(LipschitzField::constant(BigRational(1)), subject, scan.certificates) ==
          BigRational(0));
    // Ratio-one witnesses move exactly vertically in value.
    CHECK(nondiff_score(LipschitzField::height(), subject, scan.certificates) == BigRational(1));

    // Cones erected over the witnesses: the subject sits at value zero,
    // each witness at d(witness, S)/2, so the score reaches ratio/2.
    std::vector<ConeSpec> cones;
    for (const WitnessCertificate& cert : scan.certificates) {
        cones.push_back(ConeSpec{cert.witness, s});
    }
    const LipschitzField f = LipschitzField::sup_of_cones(cones);
    CHECK(f.eval(subject) == BigRational(0));
    CHECK(nondiff_score(f, subject, scan.certificates) == BigRational(1, 2));
    CHECK(nondiff_score(f, subject, scan.certificates) >=
          scan.rows[0].best_ratio / BigRational(2));

    CHECK_THROWS_AS(nondiff_score(LipschitzField::height(), subject, {}), precondition_error);
}

TEST_CASE("measure porosity gamma reaches the full radius when delta is one") {
    const SpacePoint x = at(4, "11/64");
    const Dyadic r = Dyadic::parse("1/16");
    Rng rng(11);
    const GammaResult g = measure_porosity_gamma(x, r, BigRational(1), 4, rng);
    CHECK(g.found);
    // With the whole measure allowed, the hole is the ball itself.
    CHECK(g.gamma == r);
    CHECK(g.hole_center == x);
    CHECK(g.hole_radius == r);
    CHECK(g.hole_measure == g.ambient_measure);
    CHECK(g.ambient_measure == ball_measure(x, r));
}

TEST_CASE("measure porosity gamma certificates verify exactly") {
    const SpacePoint x = at(4, "11/64");
    const Dyadic r = Dyadic::parse("1/16");
    const BigRational delta(1, 24);
    Rng rng(11);
    const GammaResult g = measure_porosity_gamma(x, r, delta, 8, rng);
    REQUIRE(g.found);
    CHECK(g.gamma == Dyadic::parse("40017712075/8796093022208"));
    CHECK(g.hole_center.str() == "1,1,1,3@8243787533/68719476736");
    CHECK(g.hole_measure == BigRational::parse("40017712075/105553116266496"));
    CHECK(g.ambient_measure == BigRational::parse("7/768"));

    // Re-verify the certificate from scratch.
    CHECK(g.gamma == g.hole_radius);
    CHECK(g.gamma <= r);
    CHECK(jump_distance(x, g.hole_center) + g.hole_radius <= r);
    CHECK(ball_measure(g.hole_center, g.hole_radius) == g.hole_measure);
    CHECK(g.hole_measure <= delta * g.ambient_measure);
}

TEST_CASE("measure porosity gamma rejects bad parameters") {
    const SpacePoint x = at(4, "11/64");
    Rng rng(11);
    CHECK_THROWS_AS(measure_porosity_gamma(x, Dyadic(0), BigRational(1), 4, rng),
                    precondition_error);
    CHECK_THROWS_AS(measure_porosity_gamma(x, Dyadic::parse("1/16"), BigRational(0), 4, rng),
                    precondition_error);
    CHECK_THROWS_AS(measure_porosity_gamma(x, Dyadic::parse("1/16"), BigRational(1), 4, rng, 0),
                    precondition_error);
    CHECK_THROWS_AS(measure_porosity_gamma(x, Dyadic::parse("1/16"), BigRational(1), 4, rng, 25),
                    precondition_error);
}
