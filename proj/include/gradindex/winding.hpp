// Certified topological degree of the gradient map on an origin-centered
// circle.  The circle is parametrized by two rational half-circle charts;
// on each chart the gradient components become exact univariate polynomials,
// and the degree is recovered from the cyclic sequence of their sign
// quadrants between isolated roots.  Everything is exact: no floating point
// enters the computation or the certificate.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gradindex/poly2.hpp"
#include "gradindex/qpoly.hpp"

namespace gradindex {

// One arc of the subdivided circle with certified gradient-component signs.
// Chart 0 covers the right half circle, (x, y) = R((1-t^2), 2t)/(1+t^2) for
// t in [-1, 1] (counterclockwise from (0,-R) to (0,R)); chart 1 covers the
// left half, (x, y) = R((t^2-1), 2t)/(1+t^2), traversed from t = 1 down to
// t = -1 (counterclockwise from (0,R) to (0,-R)).  Arcs are stored in cyclic
// traversal order.  Signs refer to the open arc; a 0 entry means the
// corresponding gradient component is identically zero on the whole circle.
struct WindingArc {
    int chart;
    Rat lo, hi;
    int sx, sy;
};

struct WindingCertificate {
    Rat radius;
    std::vector<WindingArc> arcs;
    int degree;
};

struct WindingResult {
    int degree;
    WindingCertificate certificate;
};

// A certified radius R such that every critical point of f lies strictly
// inside the circle of any radius >= R.  The gradient then has no zero on
// or outside such circles, so the winding number is the same for all of
// them (it equals the sum of the local indices of the enclosed zeros).
// Throws NonIsolatedCriticalLocus for inputs without isolated critical
// points (inherited from the critical-point solver).
Rat stabilityRadius(const Poly2& f);

// Winding number (degree) of grad f / |grad f| along the circle of radius R
// (default: stabilityRadius(f)), counterclockwise.  Throws
// CertificationFailure if the gradient vanishes somewhere on that circle.
WindingResult windingIndex(const Poly2& f, const std::optional<Rat>& radius = std::nullopt);

// Independent re-validation of a certificate: no sign-determining root lies
// inside any arc (Sturm counts), midpoint signs match, the transition walk
// re-derives the stored degree, and the gradient is nonvanishing on the
// circle.  Throws CertificationFailure on any discrepancy.
void verifyWindingCertificate(const Poly2& f, const WindingCertificate& cert);

// The gradient components f_x, f_y composed with a half-circle chart and
// cleared of the denominator (1+t^2)^deg: exact polynomials in the chart
// parameter whose signs on [-1, 1] equal the signs of the components on the
// half circle.
QPoly circleChartNumerator(const Poly2& g, const Rat& radius, int chart);

// Batch sign evaluation of (P(m), Q(m)) over sample points: the hot kernel
// of the walk.  The parallel version distributes samples across OpenMP
// threads; the serial version is the reference implementation used by tests
// and the benchmark.  Results are bitwise identical.
std::vector<std::pair<int, int>> arcSignsSerial(const QPoly& P, const QPoly& Q,
                                                const std::vector<Rat>& samples);
std::vector<std::pair<int, int>> arcSignsParallel(const QPoly& P, const QPoly& Q,
                                                  const std::vector<Rat>& samples);

}  // namespace gradindex
