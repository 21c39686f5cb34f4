#include "gradindex/critical.hpp"

#include <algorithm>
#include <utility>

#include "gradindex/puiseux.hpp"

namespace gradindex {

namespace {

int countRealRootsOf(const QPoly& p) {
    if (p.isZero()) throw InternalError("root count of the zero polynomial");
    return static_cast<int>(isolateRealRoots(p).size());
}

// One rational sample from each connected component of {W != 0}.
std::vector<Rat> samplesAvoiding(const QPoly& W) {
    std::vector<IsolatedRoot> roots = isolateRealRoots(W);
    if (roots.empty()) return {Rat(0)};
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    // Shrink until consecutive isolating intervals are disjoint, so that a
    // midpoint between them cannot touch a root.
    for (bool again = true; again;) {
        again = false;
        for (std::size_t k = 0; k + 1 < roots.size(); ++k)
            if (!(roots[k].hi < roots[k + 1].lo) &&
                !(roots[k].isExact() && roots[k + 1].isExact())) {
                refineRoot(roots[k], (roots[k].hi - roots[k].lo) / 2 + Rat(1, 16));
                refineRoot(roots[k + 1], (roots[k + 1].hi - roots[k + 1].lo) / 2 + Rat(1, 16));
                again = true;
            }
    }
    std::vector<Rat> out;
    out.push_back(roots.front().lo - 1);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
        Rat m = (roots[k].hi + roots[k + 1].lo) / 2;
        if (W.eval(m) == 0) throw InternalError("sample hit a root after separation");
        out.push_back(m);
    }
    out.push_back(roots.back().hi + 1);
    return out;
}

// a(x, y) as a polynomial in y over Q(xi).
APoly fiberAt(const Poly2& a, const Field& F, const Alg& xi) {
    std::vector<Alg> cs;
    cs.reserve(static_cast<std::size_t>(a.degY()) + 1);
    for (int k = 0; k <= a.degY(); ++k)
        cs.push_back(APoly::fromQPoly(F, a.yCoeff(k)).eval(xi));
    return APoly(F, std::move(cs));
}

Alg evalAt(const Poly2& p, const Field& F, const Alg& x0, const Alg& y0) {
    return APoly2::fromPoly2(F, p).eval(x0, y0);
}

}  // namespace

const char* criticalTypeName(CriticalType t) {
    switch (t) {
        case CriticalType::Min: return "Min";
        case CriticalType::Max: return "Max";
        case CriticalType::Saddle: return "Saddle";
        case CriticalType::Degenerate: return "Degenerate";
    }
    throw InternalError("unknown critical type");
}

Poly2 poly2ExactDiv(const Poly2& f, const Poly2& g) {
    if (g.isZero()) throw InternalError("exact division by zero polynomial");
    if (f.isZero()) return Poly2();
    Poly2 rem = f;
    std::vector<QPoly> qc(static_cast<std::size_t>(
        std::max(0, f.degY() - g.degY()) + 1));
    const QPoly glead = g.yCoeff(g.degY());
    while (!rem.isZero() && rem.degY() >= g.degY()) {
        auto dr = rem.yCoeff(rem.degY()).divRem(glead);
        if (!dr.r.isZero())
            throw InternalError("exact bivariate division: leading coefficient remainder");
        int shift = rem.degY() - g.degY();
        qc[static_cast<std::size_t>(shift)] = dr.q;
        Poly2 term = Poly2(dr.q) * Poly2::y().pow(shift) * g;
        Poly2 next = rem - term;
        if (!next.isZero() && next.degY() >= rem.degY() &&
            !next.yCoeff(rem.degY()).isZero())
            throw InternalError("exact bivariate division: degree did not drop");
        rem = next;
    }
    if (!rem.isZero()) throw InternalError("exact bivariate division: nonzero remainder");
    return Poly2::fromYCoeffs(qc);
}

bool hasInfiniteRealZeroSet(const Poly2& g) {
    if (g.isZero()) throw InternalError("zero set query for the zero polynomial");
    Poly2 gs = g.squarefreePart();
    if (gs.totalDeg() == 0) return false;
    // Vertical-line factors (pure-x content of gs viewed in Q[x][y]).
    QPoly cx = gs.contentY();
    if (cx.deg() >= 1 && countRealRootsOf(cx) > 0) return true;
    Poly2 h = gs.primitivePartY();
    if (h.degY() == 0) return false;  // gs was purely a function of x
    // Horizontal-line factors (pure-y content).
    QPoly cy = h.swapXY().contentY();
    if (cy.deg() >= 1 && countRealRootsOf(cy) > 0) return true;
    Poly2 h2 = h.swapXY().primitivePartY().swapXY();
    if (h2.degY() == 0) return false;
    if (h2.totalDeg() == 0) return false;
    // h2 is squarefree with no line factors, so only a one-dimensional real
    // branch over some open x-interval can make the zero set infinite.  The
    // fiberwise real root count is constant between the critical x-values
    // (roots of lc_y * disc_y), so sampling one x per interval decides.
    QPoly disc = resY(h2, h2.dy());
    if (disc.isZero()) throw InternalError("squarefree primitive part with zero discriminant");
    QPoly W = h2.yCoeff(h2.degY()) * disc;
    for (const Rat& x0 : samplesAvoiding(W)) {
        QPoly fiber = h2.evalX(x0);
        if (fiber.isZero()) throw InternalError("fiber vanished at a regular sample");
        if (fiber.deg() >= 1 && countRealRootsOf(fiber) > 0) return true;
    }
    return false;
}

std::vector<AlgPoint> coprimeSystemSolve(const Poly2& a, const Poly2& b) {
    if (a.isZero() || b.isZero())
        throw InternalError("coprime system with a zero polynomial");
    if (a.totalDeg() == 0 || b.totalDeg() == 0) return {};
    if (a.degY() == 0 && b.degY() == 0) return {};  // coprime pure-x pair
    QPoly Rx = resY(a, b);
    if (Rx.isZero()) throw InternalError("coprime system with vanishing resultant");
    std::vector<AlgPoint> out;
    for (const IsolatedRoot& r : isolateRealRoots(Rx)) {
        Field F = FieldRep::ofRoot(r);
        Alg xi = Alg::gen(F);
        APoly aY = fiberAt(a, F, xi);
        APoly bY = fiberAt(b, F, xi);
        APoly gy(F);
        if (aY.isZero() && bY.isZero())
            throw InternalError("coprime system with a common vertical fiber");
        else if (aY.isZero())
            gy = bY;
        else if (bY.isZero())
            gy = aY;
        else
            gy = APoly::gcd(aY, bY);
        if (gy.deg() <= 0) continue;  // no common point over this x (complex or spurious)
        APoly gys = gy.squarefreePart();
        for (const AIsolatedRoot& yr : isolateRealRootsA(gys)) {
            AdjoinResult adj = adjoinRoot(gys, yr);
            out.push_back(AlgPoint{adj.field, adj.oldGen, adj.newRoot});
        }
    }
    return out;
}

std::vector<AlgPoint> isolatedRealZeros(const Poly2& g) {
    if (g.isZero()) throw InternalError("isolated zeros of the zero polynomial");
    Poly2 gs = g.squarefreePart();
    if (gs.totalDeg() == 0) return {};
    Poly2 gx = gs.dx(), gy = gs.dy();
    if (gx.isZero() || gy.isZero()) {
        // gs depends on one variable only; its zero set is a union of lines,
        // so it has no isolated real zeros (real lines were caught upstream,
        // complex-located lines have no real points at all).
        return {};
    }
    // Isolated zeros are critical points of gs on {gs = 0}; catch them all
    // with one generic combination of the partials that is coprime to gs.
    std::vector<AlgPoint> candidates;
    bool found = false;
    for (int lambda = 0; lambda <= gs.totalDeg() + 1; ++lambda) {
        Poly2 h = gx + gy * Rat(lambda);
        if (h.isZero()) continue;
        if (Poly2::gcd(gs, h).totalDeg() != 0) continue;
        candidates = coprimeSystemSolve(gs, h);
        found = true;
        break;
    }
    if (!found)
        throw InternalError("no coprime partial combination for a squarefree polynomial");
    std::vector<AlgPoint> out;
    for (const AlgPoint& q : candidates) {
        if (!evalAt(gs, q.field, q.x, q.y).isZero()) continue;
        APoly2 germ = APoly2::fromPoly2(q.field, gs).shiftedU(q.x).shiftedV(q.y);
        if (realHalfBranchesAtOrigin(germ) == 0) out.push_back(q);
    }
    return out;
}

int arnoldIndexAt(const Poly2& f, const Field& field, const Alg& x0, const Alg& y0) {
    APoly2 germ = APoly2::fromPoly2(field, f).shiftedU(x0).shiftedV(y0);
    Alg c0 = germ.coeff(0, 0);
    if (!c0.isZero()) {
        APoly2 cpoly(field);
        cpoly.setCoeff(0, 0, c0);
        germ = germ - cpoly;
    }
    int halves = realHalfBranchesAtOrigin(germ);
    if (halves % 2 != 0) throw InternalError("odd number of real level half-branches");
    return 1 - halves / 2;
}

namespace {

CriticalPoint classifyPoint(const Poly2& f, const Poly2& fxx, const Poly2& fxy,
                            const Poly2& fyy, AlgPoint q) {
    Alg value = evalAt(f, q.field, q.x, q.y);
    Alg hxx = evalAt(fxx, q.field, q.x, q.y);
    Alg hxy = evalAt(fxy, q.field, q.x, q.y);
    Alg hyy = evalAt(fyy, q.field, q.x, q.y);
    Alg det = hxx * hyy - hxy * hxy;
    int s = det.sign();
    CriticalType type;
    int index;
    if (s > 0) {
        type = hxx.sign() > 0 ? CriticalType::Min : CriticalType::Max;
        index = 1;
    } else if (s < 0) {
        type = CriticalType::Saddle;
        index = -1;
    } else {
        type = CriticalType::Degenerate;
        index = arnoldIndexAt(f, q.field, q.x, q.y);
    }
    return CriticalPoint{q.field, q.x,          q.y,  value, RealValue(q.x),
                         RealValue(q.y), RealValue(value), type, index};
}

}  // namespace

std::vector<CriticalPoint> findCriticalPoints(const Poly2& f) {
    Poly2 fx = f.dx(), fy = f.dy();
    if (fx.isZero() && fy.isZero())
        throw NonIsolatedCriticalLocus("constant polynomial: every point is critical");
    if (fx.isZero() || fy.isZero()) {
        // f depends on one variable only; any critical point extends to a line.
        const Poly2& nz = fx.isZero() ? fy : fx;
        if (hasInfiniteRealZeroSet(nz))
            throw NonIsolatedCriticalLocus(
                "univariate gradient with a real zero line");
        return {};
    }
    Poly2 g = Poly2::gcd(fx, fy);
    std::vector<AlgPoint> raw;
    if (g.totalDeg() > 0) {
        if (hasInfiniteRealZeroSet(g))
            throw NonIsolatedCriticalLocus(
                "gcd(f_x, f_y) has a one-dimensional real zero set");
        raw = isolatedRealZeros(g);
        Poly2 a = poly2ExactDiv(fx, g);
        Poly2 b = poly2ExactDiv(fy, g);
        std::vector<AlgPoint> extra = coprimeSystemSolve(a, b);
        raw.insert(raw.end(), extra.begin(), extra.end());
    } else {
        raw = coprimeSystemSolve(fx, fy);
    }
    Poly2 fxx = fx.dx(), fxy = fx.dy(), fyy = fy.dy();
    std::vector<CriticalPoint> pts;
    pts.reserve(raw.size());
    for (AlgPoint& q : raw)
        pts.push_back(classifyPoint(f, fxx, fxy, fyy, std::move(q)));
    std::sort(pts.begin(), pts.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        int c = a.xv.compare(b.xv);
        if (c != 0) return c < 0;
        return a.yv.compare(b.yv) < 0;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const CriticalPoint& a, const CriticalPoint& b) {
                              return a.xv == b.xv && a.yv == b.yv;
                          }),
              pts.end());
    return pts;
}

int indexSum(const std::vector<CriticalPoint>& pts) {
    int s = 0;
    for (const CriticalPoint& p : pts) s += p.localIndex;
    return s;
}

int indexSum(const Poly2& f) { return indexSum(findCriticalPoints(f)); }

}  // namespace gradindex
