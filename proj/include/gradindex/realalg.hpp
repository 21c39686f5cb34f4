// Exact real algebraic numbers.
//
// A Field is Q(theta) for a real algebraic theta, described by a squarefree
// primitive integer polynomial T with a rational isolating interval that
// pins down which real root theta is.  An Alg is an element of a Field,
// stored as a polynomial representative evaluated at theta; representatives
// are reduced mod T.  All predicates (zero test, sign, comparison) are
// decided exactly: no floating point is involved anywhere.
//
// APoly is a univariate polynomial with Alg coefficients over a common
// Field: enough machinery (gcd, Sturm sequences, root isolation) to isolate
// real roots over a number field and to adjoin one such root, producing a
// new Field containing both the old generator and the new root (primitive
// element construction).
//
// RealValue is the field-independent exchange form of a real algebraic
// number: a squarefree primitive defining polynomial over Q plus an
// isolating interval.  Values from unrelated fields can be compared and
// ordered through it, and rational values are recognized exactly.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gradindex/qpoly.hpp"

namespace gradindex {

class FieldRep;
using Field = std::shared_ptr<const FieldRep>;

class FieldRep {
   public:
    const QPoly& poly() const { return t_; }
    bool isRational() const { return rational_.has_value(); }
    const Rat& rationalValue() const;
    IntervalQ interval() const { return IntervalQ(lo_, hi_); }
    int degree() const { return t_.deg(); }

    // Halve the isolating interval (no-op for rational generators).  The
    // interval cache is mutable and NOT thread-safe; fields must not be
    // shared across threads while being refined.
    void refine() const;
    void refineBelow(const Rat& width) const;

    // Q itself (theta = r).
    static Field rational(const Rat& r);
    // General constructor: t squarefree with exactly one root in (lo, hi),
    // endpoints not roots.  Detects a rational root exactly and collapses to
    // a rational field when possible.
    static Field make(const QPoly& t, const Rat& lo, const Rat& hi);
    static Field ofRoot(const IsolatedRoot& r);

   private:
    QPoly t_;  // squarefree primitive integer polynomial, positive lead
    mutable Rat lo_, hi_;
    SturmChain chain_;
    std::optional<Rat> rational_;
    FieldRep() = default;
};

class Alg {
   public:
    Alg() = default;  // zero over no field; usable only after assignment
    Alg(Field f, const Rat& value);
    Alg(Field f, QPoly rep);  // value rep(theta); reduced mod T
    static Alg gen(const Field& f);  // theta itself

    const Field& field() const { return f_; }
    const QPoly& rep() const { return rep_; }

    bool isZero() const;
    int sign() const;
    bool operator==(const Alg& o) const { return (*this - o).isZero(); }
    bool operator!=(const Alg& o) const { return !(*this == o); }
    bool operator<(const Alg& o) const { return (*this - o).sign() < 0; }

    Alg operator+(const Alg& o) const;
    Alg operator-(const Alg& o) const;
    Alg operator-() const;
    Alg operator*(const Alg& o) const;
    Alg operator+(const Rat& k) const;
    Alg operator*(const Rat& k) const;
    Alg inverse() const;  // throws InternalError on zero
    Alg pow(int e) const;

    // If the value is rational, return it exactly.
    std::optional<Rat> asRational() const;
    // Certified enclosure of width <= `width`.
    IntervalQ enclosure(const Rat& width) const;
    double approx() const;

   private:
    Field f_;
    QPoly rep_;
    void reduce();
};

class APoly {
   public:
    explicit APoly(Field f) : f_(std::move(f)) {}
    APoly(Field f, std::vector<Alg> coeffs);
    static APoly fromQPoly(const Field& f, const QPoly& p);
    static APoly var(const Field& f);  // the variable itself

    const Field& field() const { return f_; }
    bool isZero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    Alg coeff(int k) const;
    const Alg& lc() const;
    void setCoeff(int k, const Alg& v);
    // Valuation: index of the lowest nonzero coefficient (-1 for zero).
    int lowestNonzero() const;

    APoly operator+(const APoly& o) const;
    APoly operator-(const APoly& o) const;
    APoly operator-() const;
    APoly operator*(const APoly& o) const;
    APoly operator*(const Alg& k) const;
    bool operator==(const APoly& o) const;

    APoly derivative() const;
    Alg eval(const Alg& x) const;
    Alg eval(const Rat& x) const;
    APoly divRem(const APoly& divisor, APoly* remOut) const;  // returns quotient
    static APoly gcd(APoly a, APoly b);  // monic
    APoly squarefreePart() const;
    APoly monic() const;
    APoly shifted(const Alg& a) const;  // p(x + a)

   private:
    Field f_;
    std::vector<Alg> c_;  // c_[k] multiplies x^k, top nonzero (exact tests)
    void trim();
};

// One isolated real root of an APoly.  Exact rational roots use lo == hi.
struct AIsolatedRoot {
    Rat lo, hi;
    bool isExact() const { return lo == hi; }
};

// Distinct real roots of p (multiplicity ignored), in increasing order.
std::vector<AIsolatedRoot> isolateRealRootsA(const APoly& p);
// Number of distinct real roots of p in the open interval; endpoints must
// not be roots.
int countRealRootsA(const APoly& p, const Rat& lo, const Rat& hi);
// Total number of distinct real roots.
int countRealRootsA(const APoly& p);
// Shrink an isolating interval below `width`.
void refineRootA(const APoly& sqfree, AIsolatedRoot& r, const Rat& width);

// Adjoin the real root of `p` isolated by `root` to p's field.  Returns the
// (possibly unchanged) new field together with the images of the old
// generator and of the adjoined root.
struct AdjoinResult {
    Field field;
    Alg oldGen;   // old theta inside the new field
    Alg newRoot;  // the adjoined value inside the new field
};
AdjoinResult adjoinRoot(const APoly& p, const AIsolatedRoot& root);

// Re-express `a` (over the field `adj` was built from) inside `adj.field`.
Alg embed(const Alg& a, const AdjoinResult& adj);

// Process-wide rational base field (single shared instance so that values
// built by unrelated call sites agree under the pointer-identity field check).
Field fieldQ();

// --- field-independent exchange form ----------------------------------------

class RealValue {
   public:
    RealValue();  // zero
    explicit RealValue(const Rat& r);
    explicit RealValue(const Alg& a);

    bool isRational() const { return rational_.has_value(); }
    const std::optional<Rat>& rational() const { return rational_; }
    const QPoly& definingPoly() const { return def_; }
    IntervalQ interval() const { return IntervalQ(lo_, hi_); }
    double approx() const;
    void refineBelow(const Rat& width) const;

    // Total order on the real numbers represented.
    int compare(const RealValue& o) const;
    bool operator<(const RealValue& o) const { return compare(o) < 0; }
    bool operator==(const RealValue& o) const { return compare(o) == 0; }
    bool operator!=(const RealValue& o) const { return compare(o) != 0; }

   private:
    QPoly def_;  // squarefree primitive, positive lead; (q*w - p) if rational
    mutable Rat lo_, hi_;
    std::optional<Rat> rational_;
};

}  // namespace gradindex
