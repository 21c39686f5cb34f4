#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "gradindex/errors.hpp"
#include "gradindex/homog.hpp"
#include "gradindex/poly2.hpp"
#include "gradindex/puiseux.hpp"
#include "test_util.hpp"

using namespace gradindex;
using testutil::expected;
using testutil::rat;

namespace {

Poly2 P(const std::string& s) { return parsePoly2(s); }

// Frozen oracle polynomials use "**" for powers.
Poly2 fromOracle(const std::string& s) {
    std::string t;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '*' && i + 1 < s.size() && s[i + 1] == '*') {
            t += '^';
            ++i;
        } else {
            t += s[i];
        }
    }
    return parsePoly2(t);
}

APoly2 germQ(const std::string& s) {
    return APoly2::fromPoly2(fieldQ(), P(s));
}

PointAtInfinity slope0() { return PointAtInfinity::ofSlope(RealValue(Rat(0))); }

bool coeffIs(const Alg& a, const Rat& q) {
    auto r = a.asRational();
    return r && *r == q;
}

}  // namespace

// ---------------------------------------------------------------------------
// APoly2

TEST_CASE("bivariate polynomials over a field: arithmetic and views") {
    APoly2 f = germQ("x^2 - y^3");  // u^2 - v^3
    CHECK(f.degU() == 2);
    CHECK(f.degV() == 3);
    CHECK(coeffIs(f.coeff(2, 0), Rat(1)));
    CHECK(coeffIs(f.coeff(0, 3), Rat(-1)));
    CHECK(f.coeff(1, 1).isZero());

    APoly2 g = germQ("x*y + 1");
    APoly2 s = f + g;
    CHECK(coeffIs(s.coeff(1, 1), Rat(1)));
    CHECK(coeffIs(s.coeff(0, 0), Rat(1)));
    CHECK((s - g) == f);
    CHECK((f * g).degU() == 3);
    CHECK((f * g).degV() == 4);
    CHECK((-f + f).isZero());

    CHECK(f.dU() == germQ("2*x"));
    CHECK(f.dV() == germQ("-3*y^2"));
    CHECK(f.swappedUV() == germQ("y^2 - x^3"));
    CHECK(f.withNegatedV() == germQ("x^2 + y^3"));

    // Sections.
    APoly su = f.sectionV(Rat(2));  // u^2 - 8
    CHECK(su.deg() == 2);
    CHECK(coeffIs(su.coeff(0), Rat(-8)));
    APoly sv = f.sectionU(Rat(3));  // 9 - v^3
    CHECK(sv.deg() == 3);
    CHECK(coeffIs(sv.coeff(0), Rat(9)));
    CHECK(f.eval(Alg(f.field(), Rat(3)), Alg(f.field(), Rat(2))).asRational().value() ==
          Rat(1));

    // Shifts: f(u+1, v) and f(u, v+1).
    CHECK(f.shiftedU(Alg(f.field(), Rat(1))) == germQ("x^2 + 2*x + 1 - y^3"));
    CHECK(f.shiftedV(Alg(f.field(), Rat(1))) ==
          germQ("x^2 - y^3 - 3*y^2 - 3*y - 1"));
}

TEST_CASE("bivariate factor orders and division") {
    APoly2 f = germQ("x^2*y + x^3*y^2");  // u^2 v (1 + u v)
    CHECK(f.uFactorOrder() == 2);
    CHECK(f.vFactorOrder() == 1);
    CHECK(f.divByU(2) == germQ("y + x*y^2"));
    CHECK(f.divByV(1) == germQ("x^2 + x^3*y"));
    CHECK_THROWS_AS(germQ("x + y").divByU(1), InternalError);
}

TEST_CASE("content, squarefree part and radical in u") {
    // (u^2 - v)^2 * (u + v) * v  -- content v, square factor u^2 - v.
    APoly2 sq = germQ("(x^2 - y)^2 * (x + y) * y");
    APoly ct = sq.contentU();
    CHECK(ct.deg() == 1);  // content = v (monic)
    CHECK(ct.coeff(0).isZero());

    APoly2 rad = sq.radical();
    // radical = v * (u^2 - v) * (u + v), up to a constant.
    APoly2 want = germQ("(x^2 - y) * (x + y) * y");
    // Compare up to normalization: rad should divide want and vice versa in
    // the simplest sense -- equal degrees and proportional.
    CHECK(rad.degU() == want.degU());
    CHECK(rad.degV() == want.degV());
    Alg lead = rad.coeff(3, 1);
    REQUIRE(!lead.isZero());
    CHECK((rad * lead.inverse()) == (want * want.coeff(3, 1).inverse()));

    APoly2 g = APoly2::gcdU(sq, sq.dU());
    CHECK(g.degU() == 2);  // gcd carries the repeated factor u^2 - v
}

TEST_CASE("resultant in u matches the rational bivariate resultant") {
    Poly2 a = P("x^2*y - x + y^2 - 3");
    Poly2 b = P("x^3 + 2*x*y - 1");
    QPoly rx = resX(a, b);  // eliminate x, result in y
    APoly ru = resultantU(APoly2::fromPoly2(fieldQ(), a),
                          APoly2::fromPoly2(fieldQ(), b));
    REQUIRE(ru.deg() == rx.deg());
    for (int k = 0; k <= rx.deg(); ++k) CHECK(coeffIs(ru.coeff(k), rx.coeff(k)));

    CHECK(resultantU(germQ("x"), germQ("0")).isZero());
    // deg_u 0 on one side: res = a0^deg(b).
    APoly r2 = resultantU(germQ("y - 2"), germQ("x^2 - y"));
    REQUIRE(r2.deg() == 2);  // (v-2)^2
    CHECK(coeffIs(r2.coeff(0), Rat(4)));
    CHECK(coeffIs(r2.coeff(1), Rat(-4)));
}

// ---------------------------------------------------------------------------
// Series enumeration at the origin

TEST_CASE("cusp germ: two real series on one side only") {
    APoly2 f = germQ("x^2 - y^3");  // u^2 = v^3
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    GermSideSeries minus = germSeriesAtOrigin(f, -1);

    CHECK(plus.totalWithMultiplicity == 2);
    CHECK(minus.totalWithMultiplicity == 2);
    CHECK(plus.zeroMultiplicity == 0);
    CHECK(plus.vFactorOrder == 0);
    REQUIRE(plus.series.size() == 2);
    CHECK(minus.series.empty());

    for (const GermSeries& s : plus.series) {
        CHECK(s.ramification() == 2);
        CHECK(s.separationTerms() == 1);
        s.extend(3);
        CHECK(s.finite());  // u = +-v^{3/2} exactly
        REQUIRE(s.terms().size() == 1);
        CHECK(s.terms()[0].exp == Rat(3, 2));
    }
    // Sorted by value near 0+: the -1 series first.
    CHECK(coeffIs(plus.series[0].leadingCoeff(), Rat(-1)));
    CHECK(coeffIs(plus.series[1].leadingCoeff(), Rat(1)));
}

TEST_CASE("triple-line germ: zero series, algebraic leads, half-branches") {
    APoly2 f = germQ("x^3 - 3*x*y^2");  // u (u^2 - 3 v^2)
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    CHECK(plus.totalWithMultiplicity == 3);
    CHECK(plus.zeroMultiplicity == 1);
    REQUIRE(plus.series.size() == 3);

    // Order near 0+: -sqrt3 v < 0 < +sqrt3 v.
    CHECK(plus.series[0].leadingCoeff().sign() == -1);
    CHECK(plus.series[1].isZeroSeries());
    CHECK(plus.series[2].leadingCoeff().sign() == 1);
    const Alg& c = plus.series[2].leadingCoeff();
    CHECK((c * c + Rat(-3)).isZero());  // c^2 = 3
    CHECK(plus.series[2].leadingExp() == Rat(1));
    CHECK(plus.series[2].ramification() == 1);

    CHECK(realHalfBranchesAtOrigin(f) == 6);

    // No real branches: u^2 (1+v)^3 + v^2.
    APoly2 g = germQ("x^2*(1+y)^3 + y^2");
    CHECK(realHalfBranchesAtOrigin(g) == 0);
    GermSideSeries gp = germSeriesAtOrigin(g, +1);
    CHECK(gp.series.empty());
    CHECK(gp.totalWithMultiplicity == 2);

    // Curve containing the v = 0 line: v * (u - v).
    APoly2 h = germQ("y*(x - y)");
    GermSideSeries hp = germSeriesAtOrigin(h, +1);
    CHECK(hp.vFactorOrder == 1);
    CHECK(hp.series.size() == 1);
    CHECK(realHalfBranchesAtOrigin(h) == 4);  // the line counts two halves
}

TEST_CASE("separation of series agreeing to first order") {
    // (u - v)(u - v - v^2): both series start with v.
    APoly2 f = germQ("(x - y)*(x - y - y^2)");
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    REQUIRE(plus.series.size() == 2);
    const GermSeries& a = plus.series[0];  // u = v
    const GermSeries& b = plus.series[1];  // u = v + v^2
    a.extend(4);
    b.extend(4);
    CHECK(a.finite());
    REQUIRE(a.terms().size() == 1);
    CHECK(a.terms()[0].exp == Rat(1));
    CHECK(coeffIs(a.terms()[0].coeff, Rat(1)));
    CHECK(a.separationTerms() == 1);

    CHECK(b.finite());
    REQUIRE(b.terms().size() == 2);
    CHECK(b.terms()[1].exp == Rat(2));
    CHECK(coeffIs(b.terms()[1].coeff, Rat(1)));
    CHECK(b.separationTerms() == 2);

    // Mirror side: u = -v and u = -v + v^2.
    GermSideSeries minus = germSeriesAtOrigin(f, -1);
    REQUIRE(minus.series.size() == 2);
    minus.series[0].extend(4);
    minus.series[1].extend(4);
    CHECK(coeffIs(minus.series[0].terms()[0].coeff, Rat(-1)));
    REQUIRE(minus.series[1].terms().size() == 2);
    CHECK(coeffIs(minus.series[1].terms()[1].coeff, Rat(1)));
}

TEST_CASE("infinite series extend on demand with rising tail bounds") {
    // u (1 + v) - v = 0  =>  u = v - v^2 + v^3 - ...
    APoly2 f = germQ("x*(1 + y) - y");
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    REQUIRE(plus.series.size() == 1);
    const GermSeries& s = plus.series[0];
    CHECK(s.ramification() == 1);
    CHECK(!s.finite());
    Rat bound0 = s.tailExpBound().value();
    s.extend(3);
    CHECK(!s.finite());
    REQUIRE(s.terms().size() >= 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(s.terms()[k].exp == Rat(k + 1));
        CHECK(coeffIs(s.terms()[k].coeff, k % 2 == 0 ? Rat(1) : Rat(-1)));
    }
    CHECK(s.tailExpBound().value() > bound0);
}

TEST_CASE("composition along a series and exact order decisions") {
    APoly2 f = germQ("x^2 - y^3");
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    const GermSeries& s = plus.series[1];  // u = +v^{3/2}

    // Composing the curve itself gives the zero function.
    EndCompositionOrder z = ordAlongSeries(f, s, Rat(40));
    CHECK(z.identicallyZero);

    // g = v: order 1 in w (z^2 with ramification 2).
    EndCompositionOrder ov = ordAlongSeries(germQ("y"), s, Rat(40));
    CHECK(!ov.identicallyZero);
    CHECK(ov.ordW == Rat(1));
    CHECK(coeffIs(ov.leadCoeff, Rat(1)));

    // g = u: order 3/2.
    EndCompositionOrder ou = ordAlongSeries(germQ("x"), s, Rat(40));
    CHECK(ou.ordW == Rat(3, 2));
    CHECK(coeffIs(ou.leadCoeff, Rat(1)));

    // g = u^2 + v^3 picks up the non-cancelling part: 2 v^3.
    EndCompositionOrder op = ordAlongSeries(germQ("x^2 + y^3"), s, Rat(40));
    CHECK(op.ordW == Rat(3));
    CHECK(coeffIs(op.leadCoeff, Rat(2)));

    ComposedSeries cs = composeWithSeries(germQ("y"), s);
    CHECK(!cs.certifiedOrdZ.has_value());  // finite series: composition exact
    CHECK(cs.trunc.lowestNonzero() == 2);
}

// ---------------------------------------------------------------------------
// Certified sampling

TEST_CASE("certified radius isolates each series as a section root") {
    APoly2 f = germQ("x^3 - 3*x*y^2");
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    GermSectionMatch m = locateSeriesAt(f, +1, plus);
    CHECK(m.radius > 0);
    CHECK(m.window > 0);
    REQUIRE(m.roots.size() == 3);
    // Roots increasing; middle one is the exact 0 of the zero series.
    CHECK(m.roots[1].isExact());
    CHECK(m.roots[1].lo == 0);
    CHECK(m.roots[0].hi < m.roots[1].lo);
    CHECK(m.roots[1].hi < m.roots[2].lo);
    // The k-th root lies in the enclosure of the k-th series value.
    for (size_t k = 0; k < 3; ++k) {
        IntervalQ val = plus.series[k].isZeroSeries()
                            ? IntervalQ(Rat(0))
                            : plus.series[k].partialSumAt(m.radius);
        CHECK(val.lo <= m.roots[k].hi);
        CHECK(m.roots[k].lo <= val.hi);
    }

    // Re-sampling at a smaller radius keeps the correspondence.
    GermSectionMatch m2 = locateSeriesAtRadius(f, +1, plus, m.radius / 2);
    CHECK(m2.roots.size() == 3);

    // Radius cap is honored.
    GermSectionMatch m3 = locateSeriesAt(f, +1, plus, Rat(1, 1000));
    CHECK(m3.radius <= Rat(1, 1000));

    // Side with no series: empty match.
    APoly2 g = germQ("x^2*(1+y)^3 + y^2");
    GermSideSeries gp = germSeriesAtOrigin(g, +1);
    GermSectionMatch mg = locateSeriesAt(g, +1, gp);
    CHECK(mg.roots.empty());
}

TEST_CASE("certified radius for the cusp separates the two determinations") {
    APoly2 f = germQ("x^2 - y^3");
    GermSideSeries plus = germSeriesAtOrigin(f, +1);
    GermSectionMatch m = locateSeriesAt(f, +1, plus);
    REQUIRE(m.roots.size() == 2);
    // section(u) = u^2 - rho^3 up to normalization: roots +-rho^{3/2}.
    CHECK(m.roots[0].hi < Rat(0));
    CHECK(m.roots[1].lo > Rat(0));
}

// ---------------------------------------------------------------------------
// Points at infinity (top-form analysis)

TEST_CASE("real points at infinity of curves") {
    auto pts = curvePointsAtInfinity(P("x*y^2 - y"));
    REQUIRE(pts.size() == 2);
    CHECK(!pts[0].point.vertical);
    CHECK(pts[0].point.slope == RealValue(Rat(0)));
    CHECK(pts[0].multiplicity == 2);
    CHECK(pts[1].point.vertical);
    CHECK(pts[1].multiplicity == 1);

    CHECK(curvePointsAtInfinity(P("x^2 + y^2")).empty());

    auto pp = curvePointsAtInfinity(P("y^2 - x"));
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].point.slope == RealValue(Rat(0)));
    CHECK(pp[0].multiplicity == 2);

    // Irrational slopes: y^2 - 2x^2 has directions +-sqrt2.
    auto irr = curvePointsAtInfinity(P("y^2 - 2*x^2"));
    REQUIRE(irr.size() == 2);
    CHECK(irr[0].point.slope < irr[1].point.slope);
    CHECK(!irr[0].point.slope.isRational());
    CHECK(multiplicityAtInfinity(P("y^2 - 2*x^2"), irr[0].point) == 1);
    CHECK(multiplicityAtInfinity(P("y^2 - 2*x^2"), slope0()) == 0);
}

// ---------------------------------------------------------------------------
// Branches at infinity

TEST_CASE("square-root level curve at infinity: two even determinations") {
    BranchesAtInfinity ba = puiseuxAtInfinity(P("y^2 - x"), slope0());
    CHECK(ba.complexSeriesWithMultiplicity == 2);
    REQUIRE(ba.branches.size() == 2);
    for (const PuiseuxBranch& b : ba.branches) {
        CHECK(b.ramification == 2);
        CHECK(b.realDirections == 1);
        CHECK(b.ends.size() == 1);
        CHECK(b.ends[0].side() == 1);  // both reached as x -> +inf
        CHECK(b.finiteSeries);
        REQUIRE(b.series.size() == 1);
        CHECK(b.series[0].exp == Rat(1, 2));
        // Leading exponent < 1: tangent to the line at infinity.
        CHECK(b.ends[0].leadingExp() < Rat(1));
    }
    CHECK(coeffIs(ba.branches[0].series[0].coeff, Rat(-1)));
    CHECK(coeffIs(ba.branches[1].series[0].coeff, Rat(1)));
}

TEST_CASE("line-plus-hyperbola at infinity: odd branches pair across sides") {
    Poly2 C = P("x*y^2 - y");  // y (x y - 1)
    BranchesAtInfinity ba = puiseuxAtInfinity(C, slope0());
    CHECK(ba.complexSeriesWithMultiplicity == 2);
    REQUIRE(ba.branches.size() == 2);

    const PuiseuxBranch* lineB = nullptr;
    const PuiseuxBranch* hypB = nullptr;
    for (const PuiseuxBranch& b : ba.branches) {
        if (b.ends[0].isZeroSeries())
            lineB = &b;
        else
            hypB = &b;
    }
    REQUIRE(lineB != nullptr);
    REQUIRE(hypB != nullptr);
    CHECK(lineB->realDirections == 2);
    CHECK(lineB->ramification == 1);
    REQUIRE(lineB->ends.size() == 2);
    CHECK(lineB->ends[1].side() == -1);

    CHECK(hypB->realDirections == 2);
    CHECK(hypB->ramification == 1);
    REQUIRE(hypB->series.size() >= 1);
    CHECK(hypB->series[0].exp == Rat(2));  // u = w^2: transverse to L
    CHECK(coeffIs(hypB->series[0].coeff, Rat(1)));
    CHECK(hypB->ends[0].leadingExp() > Rat(1));

    // Vertical point: y(xy-1) also meets [0:1].
    BranchesAtInfinity bv = puiseuxAtInfinity(C, PointAtInfinity::verticalPoint());
    CHECK(bv.complexSeriesWithMultiplicity == 1);
    REQUIRE(bv.branches.size() == 1);
    CHECK(bv.branches[0].realDirections == 2);
    CHECK(bv.branches[0].chart == 1);

    CHECK_THROWS_AS(puiseuxAtInfinity(P("y^2 - x"),
                                      PointAtInfinity::verticalPoint()),
                    PointNotOnCurve);
}

TEST_CASE("half-integer branches with continuation terms") {
    // x y^2 - y - 1 at [1:0]: u = +-w^{3/2} + w^2/2 + ...
    BranchesAtInfinity ba = puiseuxAtInfinity(P("x*y^2 - y - 1"), slope0());
    CHECK(ba.complexSeriesWithMultiplicity == 2);
    REQUIRE(ba.branches.size() == 2);
    for (const PuiseuxBranch& b : ba.branches) {
        CHECK(b.ramification == 2);
        CHECK(b.realDirections == 1);
        CHECK(!b.finiteSeries);
        REQUIRE(b.series.size() >= 2);
        CHECK(b.series[0].exp == Rat(3, 2));
        CHECK(b.series[1].exp == Rat(2));
        CHECK(coeffIs(b.series[1].coeff, Rat(1, 2)));
        CHECK(b.separationTerms == 1);
        CHECK(b.truncationOrder > b.series.back().exp);
    }
}

TEST_CASE("branches over an irrational direction field") {
    Poly2 C = P("y^2 - 2*x^2");
    auto pts = curvePointsAtInfinity(C);
    REQUIRE(pts.size() == 2);
    BranchesAtInfinity ba = puiseuxAtInfinity(C, pts[1].point);  // slope +sqrt2
    CHECK(ba.complexSeriesWithMultiplicity == 1);
    REQUIRE(ba.branches.size() == 1);
    CHECK(ba.branches[0].realDirections == 2);
    CHECK(ba.branches[0].ends[0].isZeroSeries());  // the exact line y = sqrt2 x

    // f = y^2 - 2x^2 vanishes along it; f = x escapes.
    BranchLimit lz = limitAlongEnd(C, ba.branches[0], 0);
    CHECK(lz.kind == LimitKind::Finite);
    CHECK(lz.value == RealValue(Rat(0)));
    CHECK(!lz.monotone);

    BranchLimit lx = limitAlongEnd(P("x"), ba.branches[0], 0);
    CHECK(lx.kind == LimitKind::PlusInfinity);
    BranchLimit lx2 = limitAlongEnd(P("x"), ba.branches[0], 1);
    CHECK(lx2.kind == LimitKind::MinusInfinity);
}

// ---------------------------------------------------------------------------
// Limits along ends

TEST_CASE("limits along the axis branch of a tangency curve") {
    // Tangency curve of y^2 - x is -y(1+2x); its branch at [1:0] is y = 0.
    Poly2 tau = fromOracle(expected()["tangency"]["parabola"].get<std::string>());
    BranchesAtInfinity ba = puiseuxAtInfinity(tau, slope0());
    REQUIRE(ba.branches.size() == 1);
    const PuiseuxBranch& b = ba.branches[0];
    CHECK(b.realDirections == 2);
    CHECK(b.ends[0].isZeroSeries());

    // f(x, 0) = -x: limit -inf as x -> +inf, +inf as x -> -inf.
    BranchLimit l0 = limitAlongEnd(P("y^2 - x"), b, 0);
    CHECK(l0.kind == LimitKind::MinusInfinity);
    CHECK(l0.monotone);
    BranchLimit l1 = limitAlongEnd(P("y^2 - x"), b, 1);
    CHECK(l1.kind == LimitKind::PlusInfinity);

    // f = y is exactly 0 along the branch.
    BranchLimit ly = limitAlongEnd(P("y"), b, 0);
    CHECK(ly.kind == LimitKind::Finite);
    CHECK(ly.value == RealValue(Rat(0)));
    CHECK(!ly.monotone);

    // A constant function is constant along any end.
    BranchLimit lc = limitAlongEnd(P("5"), b, 0);
    CHECK(lc.kind == LimitKind::Finite);
    CHECK(lc.value == RealValue(Rat(5)));
    CHECK(!lc.monotone);
}

TEST_CASE("finite limits along hyperbola-type tangency branches") {
    // Tangency curve of y(xy-1): y^3 - 2x^2 y + x; its non-axis branch at
    // [1:0] carries the finite limit 0 of f.
    Poly2 f = P("x*y^2 - y");
    Poly2 tau = fromOracle(expected()["tangency"]["hyper"].get<std::string>());
    BranchesAtInfinity ba = puiseuxAtInfinity(tau, slope0());
    REQUIRE(ba.branches.size() == 1);
    const PuiseuxBranch& b = ba.branches[0];
    CHECK(b.realDirections == 2);
    CHECK(!b.ends[0].isZeroSeries());  // u = w^2/2 + ...
    b.ends[0].extend(1);
    CHECK(b.series[0].exp == Rat(2));
    CHECK(coeffIs(b.series[0].coeff, Rat(1, 2)));

    for (int e = 0; e < 2; ++e) {
        BranchLimit l = limitAlongEnd(f, b, e);
        CHECK(l.kind == LimitKind::Finite);
        CHECK(l.value == RealValue(Rat(0)));
        CHECK(l.monotone);
    }
}

TEST_CASE("algebraic finite limits: squares summing to 1 at infinity") {
    // f = (x y^2 - y - 1)^2 + (y^2 - 1)^2 along the branches of
    // x y^2 - y - 1 = 0 at [1:0]: y -> 0, so f -> 1 on both.
    Poly2 f = P("(x*y^2 - y - 1)^2 + (y^2 - 1)^2");
    BranchesAtInfinity ba = puiseuxAtInfinity(P("x*y^2 - y - 1"), slope0());
    REQUIRE(ba.branches.size() == 2);
    for (const PuiseuxBranch& b : ba.branches) {
        BranchLimit l = limitAlongEnd(f, b, 0);
        CHECK(l.kind == LimitKind::Finite);
        CHECK(l.value == RealValue(Rat(1)));
        CHECK(l.monotone);
    }
}

// ---------------------------------------------------------------------------
// Intersection multiplicity with the line at infinity

TEST_CASE("chart-local intersection numbers match the frozen values") {
    const auto& ords = expected()["germ_ords"];
    auto tau = [](const char* key) {
        return fromOracle(expected()["tangency"][key].get<std::string>());
    };
    CHECK(intersectionMultiplicityAtInfinity(tau("hyper"), slope0()) ==
          ords["hyper_tau_at_100"].get<int>());
    CHECK(intersectionMultiplicityAtInfinity(tau("parabola"), slope0()) ==
          ords["parabola_tau_at_100"].get<int>());
    CHECK(intersectionMultiplicityAtInfinity(tau("quintic"), slope0()) ==
          ords["quintic_tau_at_100"].get<int>());

    // Not on the curve: 0.
    CHECK(intersectionMultiplicityAtInfinity(
              P("y^2 - x"), PointAtInfinity::verticalPoint()) == 0);
}

TEST_CASE("tangency-curve intersection numbers equal local degree minus one") {
    const char* fs[] = {"x*y^2 - y", "y^2 - x", "y^5 + x^2*y^3 - y"};
    const char* taus[] = {"hyper", "parabola", "quintic"};
    for (int k = 0; k < 3; ++k) {
        Poly2 f = P(fs[k]);
        Poly2 tau = fromOracle(expected()["tangency"][taus[k]].get<std::string>());
        int dp = multiplicityAtInfinity(f, slope0());
        REQUIRE(dp > 0);
        CHECK(intersectionMultiplicityAtInfinity(tau, slope0()) == dp - 1);
    }
}

TEST_CASE("complex branch counts are bounded by intersection multiplicity") {
    struct Case {
        const char* curve;
        bool vertical;
    } cases[] = {
        {"x*y^2 - y", false},      {"x*y^2 - y", true},
        {"y^2 - x", false},        {"x*y^2 - y - 1", false},
        {"y^3 - x", false},        {"y^5 + x^2*y^3 - y", false},
    };
    for (const auto& c : cases) {
        Poly2 C = P(c.curve);
        PointAtInfinity p =
            c.vertical ? PointAtInfinity::verticalPoint() : slope0();
        BranchesAtInfinity ba = puiseuxAtInfinity(C, p);
        int im = intersectionMultiplicityAtInfinity(C, p);
        CHECK(ba.complexSeriesWithMultiplicity == im);
        int realEnds = 0;
        for (const PuiseuxBranch& b : ba.branches) {
            realEnds += b.realDirections;
            CHECK((int)b.ends.size() == b.realDirections);
        }
        CHECK((int)ba.branches.size() <= im);
        CHECK(realEnds >= 0);
    }
}

TEST_CASE("cube-root branch covers both directions with ramification 3") {
    BranchesAtInfinity ba = puiseuxAtInfinity(P("y^3 - x"), slope0());
    REQUIRE(ba.branches.size() == 1);
    const PuiseuxBranch& b = ba.branches[0];
    CHECK(b.ramification == 3);
    CHECK(b.realDirections == 2);
    REQUIRE(b.series.size() == 1);
    CHECK(b.series[0].exp == Rat(2, 3));
    CHECK(coeffIs(b.series[0].coeff, Rat(1)));
    // The w < 0 end has the same (even-index) coefficient.
    CHECK(coeffIs(b.ends[1].terms()[0].coeff, Rat(1)));
    CHECK(b.finiteSeries);
}
