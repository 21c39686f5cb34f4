// Exact computation of the isolated real critical points of a bivariate
// rational polynomial: locations as real algebraic numbers, critical values,
// nondegenerate classification via the Hessian, and local gradient indices
// (degenerate points via the level-branch count 1 - r/2, where r is the
// number of real half-branches of {f = f(q)} at q).
#pragma once

#include <vector>

#include "gradindex/errors.hpp"
#include "gradindex/poly2.hpp"
#include "gradindex/realalg.hpp"

namespace gradindex {

enum class CriticalType { Min, Max, Saddle, Degenerate };

const char* criticalTypeName(CriticalType t);

// An isolated real critical point of f.  The coordinates and critical value
// live in one common real algebraic number field; xv/yv/vv are the
// field-independent canonical forms used for ordering and cross-module
// value matching.
struct CriticalPoint {
    Field field;
    Alg x, y, value;
    RealValue xv, yv, vv;
    CriticalType type;
    int localIndex;  // gradient index of f at the point
};

// All isolated real critical points of f, sorted by (x, y).
// Throws NonIsolatedCriticalLocus if the real critical set of f has a
// one-dimensional component (then every invariant downstream is undefined).
std::vector<CriticalPoint> findCriticalPoints(const Poly2& f);

// Local gradient index of f at (x0, y0) via the level-branch count: the
// number r of real half-branches of {f = f(q)} at q is even, and the index
// equals 1 - r/2.  The point need not be critical for the formula to be
// evaluated, but it is only meaningful at isolated critical points.
int arnoldIndexAt(const Poly2& f, const Field& field, const Alg& x0, const Alg& y0);

// Sum of the local indices of all critical points (the total gradient index
// over any disc containing them all).
int indexSum(const Poly2& f);
int indexSum(const std::vector<CriticalPoint>& pts);

// Exact division in Q[x,y]: returns f/g, throws InternalError when g does
// not divide f.
Poly2 poly2ExactDiv(const Poly2& f, const Poly2& g);

// True iff the real zero set of g (nonzero) is infinite, i.e. g has a real
// one-dimensional zero component (a line factor with a real location or a
// factor carrying a real curve branch).
bool hasInfiniteRealZeroSet(const Poly2& g);

// Common real zeros of a coprime pair (finite; no multiplicity data).
struct AlgPoint {
    Field field;
    Alg x, y;
};
std::vector<AlgPoint> coprimeSystemSolve(const Poly2& a, const Poly2& b);

// The isolated points of the real zero set of a nonzero polynomial (zeros
// through which no real branch of the zero set passes).
std::vector<AlgPoint> isolatedRealZeros(const Poly2& g);

}  // namespace gradindex
