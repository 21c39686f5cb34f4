#pragma once
// Newton–Puiseux expansion of plane-curve germs over real algebraic
// coefficient fields:
//   * bivariate polynomials over a field tower (APoly2),
//   * per-side enumeration of the real Puiseux series at the origin with
//     exact algebraic coefficients and on-demand extension,
//   * certified small radii at which series values become isolated roots
//     of the section polynomial (exact branch sampling),
//   * branches of a curve's projective completion at a point at infinity,
//   * limits of a polynomial along such ends,
//   * local intersection numbers with the line at infinity.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradindex/homog.hpp"
#include "gradindex/poly2.hpp"
#include "gradindex/realalg.hpp"

namespace gradindex {

// ---------------------------------------------------------------------------
// Bivariate polynomial over a real algebraic field K:  F = sum c_ij u^i v^j.
class APoly2 {
   public:
    explicit APoly2(Field f) : f_(std::move(f)) {}
    // x -> u, y -> v, coefficients lifted into K.
    static APoly2 fromPoly2(const Field& f, const Poly2& p);
    static APoly2 fromVCoeffs(Field f, std::vector<APoly> vc);

    const Field& field() const { return f_; }
    bool isZero() const { return vc_.empty(); }
    int degV() const { return static_cast<int>(vc_.size()) - 1; }
    int degU() const;
    const APoly& vCoeff(int j) const;  // coefficient of v^j (a poly in u)
    APoly uCoeff(int i) const;         // coefficient of u^i (a poly in v)
    Alg coeff(int i, int j) const;
    void setCoeff(int i, int j, const Alg& c);

    APoly2 operator+(const APoly2& o) const;
    APoly2 operator-(const APoly2& o) const;
    APoly2 operator-() const;
    APoly2 operator*(const APoly2& o) const;
    APoly2 operator*(const Alg& k) const;
    bool operator==(const APoly2& o) const;

    APoly2 dU() const;
    APoly2 dV() const;
    APoly sectionV(const Rat& v0) const;  // F(u, v0), a poly in u
    APoly sectionU(const Rat& u0) const;  // F(u0, v), a poly in v
    Alg eval(const Alg& u0, const Alg& v0) const;
    APoly2 withNegatedV() const;          // F(u, -v)
    APoly2 shiftedU(const Alg& a) const;  // F(u + a, v)
    APoly2 shiftedV(const Alg& b) const;  // F(u, v + b)
    APoly2 swappedUV() const;

    int uFactorOrder() const;  // largest m with u^m | F (F nonzero)
    int vFactorOrder() const;
    APoly2 divByU(int m) const;
    APoly2 divByV(int m) const;

    // Re-express over adj.field (coefficient-wise embedding).
    APoly2 embedded(const AdjoinResult& adj) const;

    // Content/primitive part and gcd with respect to u (coefficients viewed
    // in K[v]); gcd is normalized to have monic content.
    APoly contentU() const;
    APoly2 primitivePartU() const;
    static APoly2 gcdU(const APoly2& a, const APoly2& b);
    APoly2 squarefreePartU() const;
    // Product of the distinct irreducible factors (squarefree content and
    // squarefree primitive part).
    APoly2 radical() const;

    std::string str(const std::string& uname = "u",
                    const std::string& vname = "v") const;

   private:
    Field f_;
    std::vector<APoly> vc_;  // vc_[j] multiplies v^j; top entry nonzero
    void trim();
};

// Resultant with respect to u: a polynomial in v over K.
APoly resultantU(const APoly2& a, const APoly2& b);

// ---------------------------------------------------------------------------
// One term of a Puiseux series.
struct SeriesTerm {
    Rat exp;    // exponent of the local parameter w
    Alg coeff;  // nonzero
};

// A single real Newton–Puiseux series u(w) = sum_k coeff_k w^{exp_k}
// solving F(u, side*w) = 0 for w > 0 (one "end" of a real branch at the
// origin).  Exponents are strictly increasing positive rationals whose
// denominators divide the ramification index.  Terms beyond the ones
// computed so far are produced on demand by extend(); a `finite` series is
// exact (it has no further terms).  Extension state is mutable behind a
// const interface; like field refinement, it is not thread-safe per object.
class GermSeries {
   public:
    const Field& field() const { return field_; }
    // Base field the germ was given over, and the image of its generator
    // inside field() (for lifting further data along the same tower).
    const Field& baseField() const { return base_; }
    const Alg& baseGenImage() const { return baseGen_; }
    int side() const { return side_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    bool finite() const { return finite_; }
    bool isZeroSeries() const { return finite_ && terms_.empty(); }
    int ramification() const { return ram_; }
    // Number of terms that were needed to separate this series from every
    // other series of the same germ (the Newton-polygon certificate).
    int separationTerms() const { return sepTerms_; }

    Rat leadingExp() const;        // requires a nonempty series
    const Alg& leadingCoeff() const;

    // Compute k more terms (no-op once finite).
    void extend(int k = 1) const;
    // Strict lower bound for the exponent of any term not yet computed
    // (empty when the series is finite, i.e. there is no tail at all).
    std::optional<Rat> tailExpBound() const;

    // Lift a value (resp. a germ) given over baseField() into field().
    Alg liftFromBase(const Alg& a) const;
    APoly2 liftGermFromBase(const APoly2& g) const;

    // Interval estimate of the partial sum at w0 > 0 (no tail bound).
    IntervalQ partialSumAt(const Rat& w0) const;

   private:
    Field base_;
    Field field_;
    Alg baseGen_;
    int side_ = 1;
    int ram_ = 1;
    int sepTerms_ = 0;
    mutable std::vector<SeriesTerm> terms_;
    mutable bool finite_ = false;
    // Continuation germ G(u', w') with a unique simple series through the
    // origin; the full series is terms_ + w^{contB_} * u'(w^{contS_}).
    mutable std::optional<APoly2> cont_;
    mutable Rat contB_;
    Rat contS_;

    friend struct SeriesBuilder;
};

// Composition G(u(z), side*z^e) of a germ with the truncated series, as an
// exact polynomial in z where w = z^e.  Terms of z-order < certifiedOrdZ
// are exactly those of the full composition.
struct ComposedSeries {
    APoly trunc;                        // over the series' field
    std::optional<Rat> certifiedOrdZ;   // empty: whole composition exact
};
ComposedSeries composeWithSeries(const APoly2& g, const GermSeries& s);

// Order and leading coefficient of G composed with the (full) series:
// extends the series until the w-order is certified.  `identicallyZero`
// is decided exactly against the supplied cap: ordCapZ must be a strict
// upper bound for the z-order of a nonzero composition (local intersection
// number bound).
struct EndCompositionOrder {
    bool identicallyZero = false;
    Rat ordW;       // meaningful unless identicallyZero
    Alg leadCoeff;  // over the series' field
};
EndCompositionOrder ordAlongSeries(const APoly2& g, const GermSeries& s,
                                   const Rat& ordCapZ);

// ---------------------------------------------------------------------------
// All real Puiseux series of F at the origin on one side.
struct GermSideSeries {
    // Real series, sorted increasingly by their value for small w > 0; the
    // exact u == 0 solution (if the curve contains that line) is included.
    std::vector<GermSeries> series;
    int zeroMultiplicity = 0;      // multiplicity of the u == 0 solution
    int totalWithMultiplicity = 0; // all complex series counted with
                                   // multiplicity (= ord_u F(u,0) after the
                                   // v-power strip)
    int vFactorOrder = 0;          // power of v dividing F
};
GermSideSeries germSeriesAtOrigin(const APoly2& F, int side);

// Number of real half-branches of the curve germ F = 0 at the origin
// (counts both sides and the two half-branches of the v = 0 line if the
// curve contains it).
int realHalfBranchesAtOrigin(const APoly2& F);

// ---------------------------------------------------------------------------
// Certified exact sampling: a radius rho and window eta such that for all
// 0 < w <= rho the real solutions of F(u, side*w) = 0 with |u| < eta are in
// order-preserving bijection with the real series.  roots[k] isolates the
// value of series[k] at w = rho among the roots of `section`.
struct GermSectionMatch {
    Rat radius;
    Rat window;
    APoly section;  // radical of F(u, side*radius) in u, over K
    std::vector<AIsolatedRoot> roots;
};
GermSectionMatch locateSeriesAt(const APoly2& F, int side,
                                const GermSideSeries& sides,
                                const std::optional<Rat>& radiusCap = {});
// Same matching at a caller-chosen radius, which must not exceed a radius
// previously certified by locateSeriesAt for the same germ and side.
GermSectionMatch locateSeriesAtRadius(const APoly2& F, int side,
                                      const GermSideSeries& sides,
                                      const Rat& radius);

// ---------------------------------------------------------------------------
// Branches of the projective completion of a curve at a point at infinity.
//
// Charts: chart 0 is (x, y) = (1/w, (t0+u)/w) around [1 : t0]; chart 1 is
// (x, y) = ((t0+u)/w, 1/w) around [0 : 1] (t0 = 0 there).  w > 0 is the
// direction with x -> +inf (chart 0) resp. y -> +inf (chart 1).
struct InfinityGerm {
    int chart = 0;
    Field field;   // Q(t0)
    Alg t0;
    APoly2 germ;   // centered numerator G(u, w)
    int degree = 0;  // homogenization degree (total degree of the curve)
};
InfinityGerm infinityGerm(const Poly2& C, const PointAtInfinity& p);
// Numerator w^d C(...) of C in the given chart before centering, as a
// polynomial in (transverse coordinate, w) mapped to (x, y).
Poly2 chartNumerator(const Poly2& C, int chart, int degree);

// A real branch of the completion of a curve at a point at infinity.  A
// branch with odd ramification covers two directions on the circle at
// infinity (both signs of w); with even ramification each sign choice is
// its own branch (one direction).
struct PuiseuxBranch {
    PointAtInfinity center;
    int chart = 0;
    int curveDegree = 0;
    int ramification = 1;
    bool real = true;
    int realDirections = 1;
    // Truncated series of ends[0]; exponent denominators divide the
    // ramification index.
    std::vector<SeriesTerm> series;
    bool finiteSeries = false;
    // Strict lower bound for omitted exponents (meaningless when finite).
    Rat truncationOrder;
    int separationTerms = 0;
    // ends[0]: the w > 0 end; ends[1] (iff realDirections == 2): w < 0.
    std::vector<GermSeries> ends;
};

struct BranchesAtInfinity {
    std::vector<PuiseuxBranch> branches;
    // Complex series count with multiplicity on each side of the center
    // (equal to the local intersection number of the completion with the
    // line at infinity).
    int complexSeriesWithMultiplicity = 0;
};
// All branches of the completion of C centered at p (throws PointNotOnCurve
// if p is not a point at infinity of C).
BranchesAtInfinity puiseuxAtInfinity(const Poly2& C, const PointAtInfinity& p);

// Limit of f along one end of a branch as the radius grows without bound.
enum class LimitKind { Finite, PlusInfinity, MinusInfinity };
struct BranchLimit {
    LimitKind kind = LimitKind::Finite;
    RealValue value;       // meaningful iff kind == Finite
    bool monotone = true;  // false iff f is exactly constant along the end
};
BranchLimit limitAlongEnd(const Poly2& f, const PuiseuxBranch& b,
                          int endIndex = 0);

// Local intersection number of the completion of C with the line at
// infinity at p (0 if p is not on the completion; throws
// LineAtInfinityComponent if the line at infinity divides the completion).
int intersectionMultiplicityAtInfinity(const Poly2& C,
                                       const PointAtInfinity& p);

}  // namespace gradindex
