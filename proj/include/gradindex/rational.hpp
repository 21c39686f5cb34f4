// Exact rational arithmetic (GMP) plus closed rational intervals.
// All certified numerics in the library go through these types.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "gradindex/errors.hpp"

namespace gradindex {

using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline Rat ratAbs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat ratPow(const Rat& base, unsigned long e) {
    Rat r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Smallest integer >= q, as a rational.
inline Rat ratCeil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(c);
}

inline Rat ratFloor(const Rat& q) {
    Int c;
    mpz_fdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(c);
}

// Canonical "p/q" (or "p") rendering.
inline std::string ratStr(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parse "p", "-p", or "p/q".  Returns nullopt on malformed input.
std::optional<Rat> ratParse(const std::string& text);

double ratApprox(const Rat& q);

// The unique rational with smallest denominator (then smallest magnitude) in
// the closed interval [lo, hi].
Rat simplestInInterval(const Rat& lo, const Rat& hi);

// Closed interval with exact rational endpoints.  The basic certified
// enclosure type: arithmetic is outward-exact (no rounding happens at all).
struct IntervalQ {
    Rat lo, hi;

    IntervalQ() : lo(0), hi(0) {}
    IntervalQ(const Rat& point) : lo(point), hi(point) {}
    IntervalQ(const Rat& l, const Rat& h) : lo(l), hi(h) {
        if (l > h) throw InternalError("IntervalQ: inverted endpoints");
    }

    bool containsZero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    // +1 / -1 when the sign is certain; 0 when the interval straddles zero.
    int definiteSign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat magUpper() const {  // upper bound for |x|, x in interval
        Rat a = ratAbs(lo), b = ratAbs(hi);
        return a > b ? a : b;
    }

    IntervalQ operator+(const IntervalQ& o) const { return {lo + o.lo, hi + o.hi}; }
    IntervalQ operator-(const IntervalQ& o) const { return {lo - o.hi, hi - o.lo}; }
    IntervalQ operator-() const { return {-hi, -lo}; }
    IntervalQ operator*(const IntervalQ& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }
    IntervalQ operator*(const Rat& k) const {
        return k >= 0 ? IntervalQ(lo * k, hi * k) : IntervalQ(hi * k, lo * k);
    }
    IntervalQ operator+(const Rat& k) const { return {lo + k, hi + k}; }
};

}  // namespace gradindex
