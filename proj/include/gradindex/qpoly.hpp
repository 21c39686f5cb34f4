// Univariate polynomials over the rationals: exact arithmetic, gcd,
// squarefree (Yun) decomposition, Sturm sequences, certified real-root
// isolation, and resultants.
//
// Resultant convention: Res(A, B) is the determinant of the Sylvester matrix
// whose first deg(B) rows hold the coefficients of A and whose remaining
// deg(A) rows hold the coefficients of B.  Documented examples:
//   Res_y(y^2 - x, y)            = -x
//   Res_y(x^2 + y^2 - 1, x^2 - y) = x^4 + x^2 - 1
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradindex/rational.hpp"

namespace gradindex {

struct QPolyDivRem;

class QPoly {
   public:
    QPoly() = default;
    explicit QPoly(const Rat& c0) { c_ = {c0}; trim(); }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly monomial(int k, const Rat& coeff = Rat(1));
    // The variable itself, x.
    static QPoly var() { return monomial(1); }

    bool isZero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& lc() const;
    Rat coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    void setCoeff(int k, const Rat& v);

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& k) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly derivative() const;
    Rat eval(const Rat& x) const;
    IntervalQ eval(const IntervalQ& x) const;
    // p(x + a)
    QPoly shifted(const Rat& a) const;
    // p(k * x)
    QPoly scaledArg(const Rat& k) const;
    // x^deg * p(1/x)
    QPoly reversed() const;
    QPoly compose(const QPoly& inner) const;

    // Exact division: quotient and remainder over Q.
    QPolyDivRem divRem(const QPoly& divisor) const;
    // Throws InternalError unless the division is exact.
    QPoly exactDiv(const QPoly& divisor) const;

    // Divide by the positive rational content: the result has coprime
    // integer coefficients and the same sign pattern as the input.
    QPoly primitivePart() const;

    // gcd, monic over Q (gcd of zero polys is zero).
    static QPoly gcd(QPoly a, QPoly b);
    QPoly squarefreePart() const;
    // Yun decomposition: result[k-1] is the (squarefree) product of the
    // irreducible factors of multiplicity exactly k.
    std::vector<QPoly> yun() const;

    std::string str(const std::string& var = "x") const;

   private:
    std::vector<Rat> c_;  // c_[k] multiplies x^k; highest entry nonzero
    void trim();
};

struct QPolyDivRem {
    QPoly q, r;
};

// --- Sturm machinery -------------------------------------------------------

struct SturmChain {
    std::vector<QPoly> seq;
    static SturmChain of(const QPoly& p);
    // Number of distinct real roots in the open interval (lo, hi); requires
    // p(lo) != 0 and p(hi) != 0.
    int countRoots(const Rat& lo, const Rat& hi) const;
    int countRootsAll() const;  // over all of R
    int variationsAt(const Rat& x) const;
    int variationsAtMinusInf() const;
    int variationsAtPlusInf() const;
};

// One isolated real root of a squarefree factor.  Either lo == hi (the root
// is the rational number lo) or factor(lo) * factor(hi) < 0 with exactly one
// root strictly inside.
struct IsolatedRoot {
    QPoly factor;  // squarefree primitive integer polynomial
    int mult;      // multiplicity in the original polynomial
    Rat lo, hi;
    bool isExact() const { return lo == hi; }
};

// All real roots of p, isolated with multiplicities.  Rational roots get
// degree-1 factors.  Intervals may be refined further with refineRoot.
std::vector<IsolatedRoot> isolateRealRoots(const QPoly& p);

// Shrink the isolating interval below `width` by bisection.
void refineRoot(IsolatedRoot& r, const Rat& width);

// Cauchy bound: all complex roots of p satisfy |z| < bound.
Rat cauchyRootBound(const QPoly& p);

// Resultant of two rational polynomials (see convention above).
Rat resultant(const QPoly& a, const QPoly& b);

// Determinant of a square rational matrix (fraction-free Bareiss after
// clearing denominators).  Exposed for reuse by the bivariate resultant.
Rat rationalDet(std::vector<std::vector<Rat>> m);

}  // namespace gradindex
