// Bivariate polynomials over the rationals, stored densely by y-degree with
// QPoly coefficients in x.  Includes the expression parser and the canonical
// printer (graded-lex, x before y), substitution, bivariate gcd, and
// resultants eliminating either variable.
#pragma once

#include <string>
#include <vector>

#include "gradindex/qpoly.hpp"

namespace gradindex {

class Poly2 {
   public:
    Poly2() = default;
    explicit Poly2(const Rat& c);
    explicit Poly2(const QPoly& xOnly);
    static Poly2 x();
    static Poly2 y();
    static Poly2 fromYCoeffs(std::vector<QPoly> yc);

    bool isZero() const { return yc_.empty(); }
    int degY() const { return static_cast<int>(yc_.size()) - 1; }
    int degX() const;
    int totalDeg() const;
    // Coefficient of y^k as a polynomial in x.
    QPoly yCoeff(int k) const;
    const std::vector<QPoly>& yCoeffs() const { return yc_; }
    Rat coeff(int i, int j) const;  // of x^i y^j
    void setCoeff(int i, int j, const Rat& v);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Rat& k) const;
    bool operator==(const Poly2& o) const { return yc_ == o.yc_; }
    bool operator!=(const Poly2& o) const { return !(yc_ == o.yc_); }

    Poly2 dx() const;
    Poly2 dy() const;
    Rat eval(const Rat& x0, const Rat& y0) const;
    IntervalQ eval(const IntervalQ& x0, const IntervalQ& y0) const;
    QPoly evalX(const Rat& x0) const;  // substitute x = x0, polynomial in y
    QPoly evalY(const Rat& y0) const;  // substitute y = y0, polynomial in x
    Poly2 swapXY() const;
    // Substitute x -> px, y -> py.
    Poly2 compose(const Poly2& px, const Poly2& py) const;
    Poly2 pow(int e) const;

    // Terms of total degree exactly k.
    Poly2 homogeneousPart(int k) const;
    bool isHomogeneous() const;

    // Content / primitive part with y as the main variable.
    QPoly contentY() const;
    Poly2 primitivePartY() const;
    // Divide by the positive rational content of all coefficients: integer
    // coefficients, sign preserved.
    Poly2 primitivePartZ() const;

    static Poly2 gcd(const Poly2& a, const Poly2& b);  // monic-ish: primitive, positive lead
    Poly2 squarefreePart() const;

    // Canonical form: terms in decreasing graded-lex order (x before y),
    // explicit '*' and '^'; parses back to the same polynomial.
    std::string str() const;

   private:
    std::vector<QPoly> yc_;  // yc_[k] multiplies y^k; highest entry nonzero
    void trim();
};

// Substitute the polynomial `inner` for the variable of `p`.
Poly2 composeQ(const QPoly& p, const Poly2& inner);

// Determinant of a square matrix with polynomial entries (fraction-free).
QPoly qpolyMatDet(std::vector<std::vector<QPoly>> m);

// Resultant eliminating y (result is a polynomial in x) or x (in y).
// Row convention matches the univariate resultant: the first deg(B) rows
// carry A's coefficients.
QPoly resY(const Poly2& a, const Poly2& b);
QPoly resX(const Poly2& a, const Poly2& b);

// Parse an expression in x and y: rational literals "p" or "p/q", + - *,
// '^' with a nonnegative integer exponent, parentheses, unary minus.
// Implicit multiplication is rejected.  Throws ParseError with the offending
// offset on malformed input.
Poly2 parsePoly2(const std::string& text);

// One-parameter family f + s*g, parsed from an expression in x, y, s that is
// affine in s.
struct PolyFamily {
    Poly2 base;  // f
    Poly2 dir;   // g
    Poly2 at(const Rat& s) const { return base + dir * s; }
};
PolyFamily parseFamily(const std::string& text);

}  // namespace gradindex
