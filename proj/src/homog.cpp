#include "gradindex/homog.hpp"

#include <sstream>

#include "gradindex/errors.hpp"

namespace gradindex {

PointAtInfinity PointAtInfinity::verticalPoint() {
    PointAtInfinity p;
    p.vertical = true;
    return p;
}

PointAtInfinity PointAtInfinity::ofSlope(RealValue s) {
    PointAtInfinity p;
    p.slope = std::move(s);
    return p;
}

bool PointAtInfinity::operator==(const PointAtInfinity& o) const {
    if (vertical != o.vertical) return false;
    if (vertical) return true;
    return slope == o.slope;
}

std::string PointAtInfinity::str() const {
    if (vertical) return "[0 : 1]";
    std::ostringstream os;
    if (slope.isRational()) {
        os << "[1 : " << ratStr(*slope.rational()) << "]";
    } else {
        os << "[1 : " << slope.approx() << "]";
    }
    return os.str();
}

QPoly homogeneousOnSlopeLine(const Poly2& C, int k) {
    Poly2 top = C.homogeneousPart(k);
    QPoly q;
    for (int i = 0; i <= k; ++i) q.setCoeff(i, top.coeff(k - i, i));
    return q;
}

std::vector<InfinityPoint> curvePointsAtInfinity(const Poly2& C) {
    const int d = C.totalDeg();
    if (d <= 0) throw InternalError("curvePointsAtInfinity: constant curve");
    // q(t) = C_d(1, t); the vertical point [0 : 1] absorbs the degree drop.
    QPoly q = homogeneousOnSlopeLine(C, d);
    std::vector<InfinityPoint> out;
    for (const IsolatedRoot& r : isolateRealRoots(q)) {
        InfinityPoint ip;
        if (r.isExact()) {
            ip.point = PointAtInfinity::ofSlope(RealValue(r.lo));
        } else {
            Field k = FieldRep::ofRoot(r);
            ip.point = PointAtInfinity::ofSlope(RealValue(Alg::gen(k)));
        }
        ip.multiplicity = r.mult;
        out.push_back(std::move(ip));
    }
    if (q.isZero())
        throw InternalError("curvePointsAtInfinity: zero top form");
    const int verticalMult = d - q.deg();
    if (verticalMult > 0) {
        InfinityPoint ip;
        ip.point = PointAtInfinity::verticalPoint();
        ip.multiplicity = verticalMult;
        out.push_back(std::move(ip));
    }
    return out;
}

int multiplicityAtInfinity(const Poly2& C, const PointAtInfinity& p) {
    for (const InfinityPoint& ip : curvePointsAtInfinity(C))
        if (ip.point == p) return ip.multiplicity;
    return 0;
}

}  // namespace gradindex
