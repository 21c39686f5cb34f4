#pragma once
// Top-form analysis of plane curves: the real points at infinity of a curve
// (real projective zeros of its highest homogeneous part) together with
// their multiplicities.  For the analyzed polynomial f these are the points
// of L' and the local degrees d_p.

#include <string>
#include <utility>
#include <vector>

#include "gradindex/poly2.hpp"
#include "gradindex/realalg.hpp"

namespace gradindex {

// A real point on the line at infinity, i.e. an unoriented direction
// [a : b].  Non-vertical points are stored by their slope t = b/a (the
// point [1 : t]); the vertical direction [0 : 1] is flagged separately.
struct PointAtInfinity {
    bool vertical = false;
    RealValue slope;  // meaningful iff !vertical

    static PointAtInfinity verticalPoint();
    static PointAtInfinity ofSlope(RealValue s);

    bool operator==(const PointAtInfinity& o) const;
    bool operator!=(const PointAtInfinity& o) const { return !(*this == o); }
    std::string str() const;  // "[1 : t]" or "[0 : 1]"
};

// One real projective zero of the top form, with its multiplicity as a
// linear factor of the top form.
struct InfinityPoint {
    PointAtInfinity point;
    int multiplicity = 0;  // d_p when the curve is the analyzed polynomial
};

// Real projective zeros of the top form of C with multiplicities,
// non-vertical points in increasing slope order, the vertical point (if
// present) last.  C must be nonconstant.
std::vector<InfinityPoint> curvePointsAtInfinity(const Poly2& C);

// Multiplicity of p in the top form of C (0 when p is not a zero).
int multiplicityAtInfinity(const Poly2& C, const PointAtInfinity& p);

// Restriction of the degree-k homogeneous part to the affine line x = 1,
// i.e. q(t) = C_k(1, t).
QPoly homogeneousOnSlopeLine(const Poly2& C, int k);

}  // namespace gradindex
