#include "gradindex/winding.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gradindex/critical.hpp"
#include "gradindex/errors.hpp"

namespace gradindex {

namespace {

// p with all factors (t - a) removed (a rational, exact).
QPoly dropRootAt(QPoly p, const Rat& a) {
    QPoly lin({-a, Rat(1)});
    while (p.deg() > 0 && p.eval(a) == 0) p = p.exactDiv(lin);
    return p;
}

int quadrantOf(int sx, int sy) {
    if (sx > 0 && sy > 0) return 0;
    if (sx < 0 && sy > 0) return 1;
    if (sx < 0 && sy < 0) return 2;
    if (sx > 0 && sy < 0) return 3;
    throw InternalError("sign pair with a zero component has no quadrant");
}

// Quadrant steps between consecutive arcs, summed around the circle.  A jump
// by two quadrants would mean both gradient components changed sign across a
// single root, which the common-root certificate excludes.
int degreeFromQuadrants(const std::vector<WindingArc>& arcs) {
    int total = 0;
    const std::size_t n = arcs.size();
    for (std::size_t k = 0; k < n; ++k) {
        int q1 = quadrantOf(arcs[k].sx, arcs[k].sy);
        int q2 = quadrantOf(arcs[(k + 1) % n].sx, arcs[(k + 1) % n].sy);
        int d = ((q2 - q1) % 4 + 4) % 4;
        if (d == 2)
            throw InternalError("both gradient components changed sign across one root");
        total += (d == 3) ? -1 : d;
    }
    if (total % 4 != 0) throw InternalError("quadrant walk did not close up");
    return total / 4;
}

struct ChartCuts {
    QPoly P, Q;                      // exact chart numerators (original signs)
    std::vector<IsolatedRoot> cuts;  // separated root positions in (-1, 1)
};

// Chart numerators of the gradient plus all their roots strictly inside
// (-1, 1), isolated by pairwise disjoint intervals that avoid the seams.
// The arcs between consecutive cut intervals are then sign-constant in both
// components.
ChartCuts buildChart(const Poly2& fx, const Poly2& fy, const Rat& R, int chart) {
    ChartCuts c;
    c.P = circleChartNumerator(fx, R, chart);
    c.Q = circleChartNumerator(fy, R, chart);
    QPoly Ps = c.P.isZero() ? QPoly() : c.P.squarefreePart();
    QPoly Qs = c.Q.isZero() ? QPoly() : c.Q.squarefreePart();
    if (Ps.isZero() || Qs.isZero()) {
        if (Ps.isZero() && Qs.isZero())
            throw CertificationFailure("gradient vanishes identically");
        return c;  // axis-parallel gradient: handled by the caller
    }
    QPoly G = QPoly::gcd(Ps, Qs);
    if (G.deg() > 0) {
        if (G.eval(Rat(-1)) == 0 || G.eval(Rat(1)) == 0 ||
            SturmChain::of(G).countRoots(Rat(-1), Rat(1)) > 0)
            throw CertificationFailure("gradient vanishes on the circle");
    }
    // Roots at the chart seams t = +-1 are the circle points (0, +-R); they
    // are crossed between charts, not inside one, so remove them before
    // isolating the interior cut positions.
    Ps = dropRootAt(dropRootAt(Ps, Rat(1)), Rat(-1));
    Qs = dropRootAt(dropRootAt(Qs, Rat(1)), Rat(-1));
    std::vector<IsolatedRoot> roots;
    for (QPoly* s : {&Ps, &Qs}) {
        if (s->deg() < 1) continue;
        for (IsolatedRoot r : isolateRealRoots(*s)) {
            // Shrink brackets that straddle a seam, then keep only roots
            // strictly inside (-1, 1), with strictly interior intervals.
            while ((r.lo < Rat(-1) && Rat(-1) < r.hi) ||
                   (r.lo < Rat(1) && Rat(1) < r.hi))
                refineRoot(r, (r.hi - r.lo) / 2);
            if (r.hi <= Rat(-1) || Rat(1) <= r.lo) continue;
            while (!r.isExact() && (r.lo == Rat(-1) || r.hi == Rat(1)))
                refineRoot(r, (r.hi - r.lo) / 2);
            roots.push_back(std::move(r));
        }
    }
    // Separate all isolating intervals strictly.  The roots are pairwise
    // distinct (each polynomial was made squarefree and the two share no
    // root inside (-1,1)), so bisection terminates.  Overlapping intervals
    // can be sorted against the order of their roots, so re-sort by left
    // endpoint after every refinement pass.
    for (bool again = true; again;) {
        again = false;
        std::sort(roots.begin(), roots.end(),
                  [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
        for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
            if (roots[k].hi < roots[k + 1].lo) continue;
            if (roots[k].isExact() && roots[k + 1].isExact())
                throw InternalError("coincident cut roots despite the gcd certificate");
            for (IsolatedRoot* r : {&roots[k], &roots[k + 1]})
                if (!r->isExact()) refineRoot(*r, (r->hi - r->lo) / 2);
            again = true;
        }
    }
    c.cuts = std::move(roots);
    return c;
}

// Positive-width arc brackets between consecutive cuts, covering [-1, 1].
std::vector<std::pair<Rat, Rat>> arcBrackets(const ChartCuts& c) {
    std::vector<std::pair<Rat, Rat>> out;
    Rat prev(-1);
    for (const IsolatedRoot& r : c.cuts) {
        out.emplace_back(prev, r.lo);
        prev = r.hi;
    }
    out.emplace_back(prev, Rat(1));
    return out;
}

std::vector<std::pair<int, int>> arcSigns(const QPoly& P, const QPoly& Q,
                                          const std::vector<Rat>& samples) {
#ifdef _OPENMP
    return arcSignsParallel(P, Q, samples);
#else
    return arcSignsSerial(P, Q, samples);
#endif
}

}  // namespace

std::vector<std::pair<int, int>> arcSignsSerial(const QPoly& P, const QPoly& Q,
                                                const std::vector<Rat>& samples) {
    std::vector<std::pair<int, int>> out(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        out[k].first = P.isZero() ? 0 : sgn(P.eval(samples[k]));
        out[k].second = Q.isZero() ? 0 : sgn(Q.eval(samples[k]));
    }
    return out;
}

std::vector<std::pair<int, int>> arcSignsParallel(const QPoly& P, const QPoly& Q,
                                                  const std::vector<Rat>& samples) {
    std::vector<std::pair<int, int>> out(samples.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const auto u = static_cast<std::size_t>(k);
        out[u].first = P.isZero() ? 0 : sgn(P.eval(samples[u]));
        out[u].second = Q.isZero() ? 0 : sgn(Q.eval(samples[u]));
    }
    return out;
}

QPoly circleChartNumerator(const Poly2& g, const Rat& radius, int chart) {
    if (chart != 0 && chart != 1) throw InternalError("chart must be 0 or 1");
    if (g.isZero()) return QPoly();
    const auto m = static_cast<std::size_t>(g.totalDeg());
    // Power tables for the chart's x-numerator, y-numerator, and denominator.
    QPoly xb = chart == 0 ? QPoly({Rat(1), Rat(0), Rat(-1)})    // 1 - t^2
                          : QPoly({Rat(-1), Rat(0), Rat(1)});   // t^2 - 1
    QPoly yb({Rat(0), Rat(2)});                                 // 2t
    QPoly db({Rat(1), Rat(0), Rat(1)});                         // 1 + t^2
    std::vector<QPoly> xp(m + 1), yp(m + 1), dpw(m + 1);
    std::vector<Rat> rp(m + 1);
    xp[0] = yp[0] = dpw[0] = QPoly(Rat(1));
    rp[0] = Rat(1);
    for (std::size_t k = 1; k <= m; ++k) {
        xp[k] = xp[k - 1] * xb;
        yp[k] = yp[k - 1] * yb;
        dpw[k] = dpw[k - 1] * db;
        rp[k] = rp[k - 1] * radius;
    }
    QPoly out;
    for (int j = 0; j <= g.degY(); ++j) {
        const QPoly cx = g.yCoeff(j);
        for (int i = 0; i <= cx.deg(); ++i) {
            const Rat cij = cx.coeff(i);
            if (cij == 0) continue;
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            out = out + xp[ui] * yp[uj] * dpw[m - ui - uj] * (cij * rp[ui + uj]);
        }
    }
    return out;
}

Rat stabilityRadius(const Poly2& f) {
    Rat bound(0);
    for (const CriticalPoint& q : findCriticalPoints(f)) {
        // |x| + |y| bounds the distance from the origin, so radius
        // max over points of |x| + |y|, plus 1, puts every critical point
        // strictly inside the disk.
        IntervalQ ix = q.xv.interval(), iy = q.yv.interval();
        Rat ax = std::max(ix.lo < 0 ? -ix.lo : ix.lo, ix.hi < 0 ? -ix.hi : ix.hi);
        Rat ay = std::max(iy.lo < 0 ? -iy.lo : iy.lo, iy.hi < 0 ? -iy.hi : iy.hi);
        if (bound < ax + ay) bound = ax + ay;
    }
    return bound + 1;
}

WindingResult windingIndex(const Poly2& f, const std::optional<Rat>& radius) {
    Rat R = radius ? *radius : stabilityRadius(f);
    if (!(R > 0)) throw InternalError("winding radius must be positive");
    Poly2 fx = f.dx(), fy = f.dy();
    if (fx.isZero() && fy.isZero())
        throw CertificationFailure("gradient vanishes identically");
    ChartCuts chartA = buildChart(fx, fy, R, 0);
    ChartCuts chartB = buildChart(fx, fy, R, 1);
    // Axis-parallel gradient (f univariate): degree 0 once the nonzero
    // component is certified rootless on the whole circle.
    if (fx.isZero() || fy.isZero()) {
        const QPoly& pa = fx.isZero() ? chartA.Q : chartA.P;
        const QPoly& pb = fx.isZero() ? chartB.Q : chartB.P;
        for (const QPoly* p : {&pa, &pb}) {
            if (p->isZero() || p->eval(Rat(-1)) == 0 || p->eval(Rat(1)) == 0 ||
                SturmChain::of(p->squarefreePart()).countRoots(Rat(-1), Rat(1)) > 0)
                throw CertificationFailure("gradient vanishes on the circle");
        }
        int sa = sgn(pa.eval(Rat(0))), sb = sgn(pb.eval(Rat(0)));
        WindingCertificate cert{R, {}, 0};
        cert.arcs.push_back(WindingArc{0, Rat(-1), Rat(1), fy.isZero() ? sa : 0,
                                       fx.isZero() ? sa : 0});
        cert.arcs.push_back(WindingArc{1, Rat(-1), Rat(1), fy.isZero() ? sb : 0,
                                       fx.isZero() ? sb : 0});
        return WindingResult{0, cert};
    }
    WindingCertificate cert{R, {}, 0};
    // Chart 0 ascending, then chart 1 descending: one counterclockwise loop.
    auto bracketsA = arcBrackets(chartA);
    auto bracketsB = arcBrackets(chartB);
    std::vector<Rat> midsA, midsB;
    for (const auto& [lo, hi] : bracketsA) midsA.push_back((lo + hi) / 2);
    for (const auto& [lo, hi] : bracketsB) midsB.push_back((lo + hi) / 2);
    std::vector<std::pair<int, int>> signsA = arcSigns(chartA.P, chartA.Q, midsA);
    std::vector<std::pair<int, int>> signsB = arcSigns(chartB.P, chartB.Q, midsB);
    for (std::size_t k = 0; k < bracketsA.size(); ++k) {
        if (signsA[k].first == 0 || signsA[k].second == 0)
            throw InternalError("gradient component vanished at an arc sample");
        cert.arcs.push_back(WindingArc{0, bracketsA[k].first, bracketsA[k].second,
                                       signsA[k].first, signsA[k].second});
    }
    for (std::size_t k = bracketsB.size(); k-- > 0;) {
        if (signsB[k].first == 0 || signsB[k].second == 0)
            throw InternalError("gradient component vanished at an arc sample");
        cert.arcs.push_back(WindingArc{1, bracketsB[k].first, bracketsB[k].second,
                                       signsB[k].first, signsB[k].second});
    }
    cert.degree = degreeFromQuadrants(cert.arcs);
    return WindingResult{cert.degree, cert};
}

void verifyWindingCertificate(const Poly2& f, const WindingCertificate& cert) {
    Poly2 fx = f.dx(), fy = f.dy();
    const QPoly byChart[2][2] = {
        {circleChartNumerator(fx, cert.radius, 0), circleChartNumerator(fy, cert.radius, 0)},
        {circleChartNumerator(fx, cert.radius, 1), circleChartNumerator(fy, cert.radius, 1)},
    };
    // Gradient nonvanishing on the circle (including the seam points).
    for (const auto& chart : byChart) {
        const QPoly &P = chart[0], &Q = chart[1];
        if (P.isZero() && Q.isZero())
            throw CertificationFailure("gradient vanishes identically");
        QPoly G = P.isZero() ? Q.squarefreePart()
                             : (Q.isZero() ? P.squarefreePart()
                                           : QPoly::gcd(P.squarefreePart(), Q.squarefreePart()));
        if (G.deg() > 0 &&
            (G.eval(Rat(-1)) == 0 || G.eval(Rat(1)) == 0 ||
             SturmChain::of(G).countRoots(Rat(-1), Rat(1)) > 0))
            throw CertificationFailure("gradient vanishes on the certified circle");
    }
    // Shape: a chart-0 block with ascending parameter ranges, then a chart-1
    // block with descending ranges, each tiling [-1, 1] from seam to seam.
    std::size_t split = 0;
    while (split < cert.arcs.size() && cert.arcs[split].chart == 0) ++split;
    if (split == 0 || split == cert.arcs.size())
        throw CertificationFailure("certificate does not cover both half circles");
    std::vector<const WindingArc*> ordered[2];
    for (std::size_t k = 0; k < split; ++k) ordered[0].push_back(&cert.arcs[k]);
    for (std::size_t k = cert.arcs.size(); k-- > split;) {
        if (cert.arcs[k].chart != 1)
            throw CertificationFailure("certificate arcs out of traversal order");
        ordered[1].push_back(&cert.arcs[k]);
    }
    for (int chart = 0; chart < 2; ++chart) {
        const QPoly &P = byChart[chart][0], &Q = byChart[chart][1];
        const WindingArc* prev = nullptr;
        for (const WindingArc* a : ordered[chart]) {
            if (a->hi < a->lo || (prev && a->lo < prev->hi))
                throw CertificationFailure("certificate arcs out of traversal order");
            // Stored signs match a sample inside the arc.
            Rat mid = (a->lo + a->hi) / 2;
            int sx = P.isZero() ? 0 : sgn(P.eval(mid));
            int sy = Q.isZero() ? 0 : sgn(Q.eval(mid));
            if (sx != a->sx || sy != a->sy)
                throw CertificationFailure("stored arc signs disagree with a sample");
            // No sign-determining root strictly inside the arc.
            for (const QPoly* p : {&P, &Q}) {
                if (p->isZero() || a->lo == a->hi) continue;
                QPoly s = dropRootAt(dropRootAt(p->squarefreePart(), a->lo), a->hi);
                if (s.deg() >= 1 && SturmChain::of(s).countRoots(a->lo, a->hi) > 0)
                    throw CertificationFailure("a gradient component changes sign inside an arc");
            }
            // The gap skipped between consecutive arcs must hide exactly one
            // root of exactly one component: that pins the rotation across
            // every transition to the value the sign walk assigns it.
            if (prev) {
                const Rat &u = prev->hi, &v = a->lo;
                int roots = 0;
                for (const QPoly* p : {&P, &Q}) {
                    if (p->isZero()) continue;
                    if (p->eval(u) == 0) ++roots;
                    if (v != u && p->eval(v) == 0) ++roots;
                    if (u < v) {
                        QPoly s = dropRootAt(dropRootAt(p->squarefreePart(), u), v);
                        if (s.deg() >= 1) roots += SturmChain::of(s).countRoots(u, v);
                    }
                }
                if (roots != 1)
                    throw CertificationFailure("an arc gap does not isolate a single root");
            }
            prev = a;
        }
        if (ordered[chart].front()->lo != Rat(-1) || prev->hi != Rat(1))
            throw CertificationFailure("certificate arcs do not reach the seams");
    }
    bool axisParallel = fx.isZero() || fy.isZero();
    if (!axisParallel) {
        int walked = 0;
        try {
            walked = degreeFromQuadrants(cert.arcs);
        } catch (const InternalError&) {
            throw CertificationFailure("certificate arcs admit no consistent quadrant walk");
        }
        if (walked != cert.degree)
            throw CertificationFailure("stored degree disagrees with the quadrant walk");
    } else if (cert.degree != 0) {
        throw CertificationFailure("axis-parallel gradient must have degree zero");
    }
}

}  // namespace gradindex
