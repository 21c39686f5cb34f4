#include "gradindex/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gradindex/errors.hpp"

namespace gradindex {

// --- Rat helpers declared in rational.hpp ----------------------------------

std::optional<Rat> ratParse(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t numStart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == numStart) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        std::size_t denStart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == denStart || i != s.size()) return std::nullopt;
        if (s.substr(denStart).find_first_not_of('0') == std::string::npos)
            return std::nullopt;  // zero denominator
    }
    Rat q(s[0] == '+' ? s.substr(1) : s);
    q.canonicalize();
    return q;
}

Rat simplestInInterval(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw InternalError("simplestInInterval: inverted endpoints");
    if (lo == hi) return lo;
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
    if (sgn(hi) < 0) return -simplestInInterval(-hi, -lo);
    // 0 < lo < hi: take an integer if one fits, else recurse on the
    // fractional part (classic continued-fraction construction).
    Rat c = ratCeil(lo);
    if (c <= hi) return c;
    Rat n = ratFloor(lo);
    Rat inner = simplestInInterval(Rat(1) / (hi - n), Rat(1) / (lo - n));
    return n + Rat(1) / inner;
}

double ratApprox(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

// --- QPoly basics -----------------------------------------------------------

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int k, const Rat& coeff) {
    QPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, Rat(0));
        p.c_[k] = coeff;
    }
    return p;
}

const Rat& QPoly::lc() const {
    if (c_.empty()) throw InternalError("lc of zero polynomial");
    return c_.back();
}

void QPoly::setCoeff(int k, const Rat& v) {
    if (k < 0) throw InternalError("negative exponent");
    if (k >= (int)c_.size()) {
        if (v == 0) return;
        c_.resize(k + 1, Rat(0));
    }
    c_[k] = v;
    trim();
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        if (k < c_.size()) r.c_[k] += c_[k];
        if (k < o.c_.size()) r.c_[k] += o.c_[k];
    }
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (isZero() || o.isZero()) return QPoly();
    QPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const Rat& k) const {
    QPoly r = *this;
    for (auto& v : r.c_) v *= k;
    r.trim();
    return r;
}

QPoly QPoly::derivative() const {
    QPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * Rat(static_cast<long>(k));
    r.trim();
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntervalQ QPoly::eval(const IntervalQ& x) const {
    IntervalQ acc(Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::shifted(const Rat& a) const {
    QPoly inner;
    inner.c_ = {a, Rat(1)};
    return compose(inner);
}

QPoly QPoly::scaledArg(const Rat& k) const {
    QPoly r = *this;
    Rat pw(1);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= pw;
        pw *= k;
    }
    r.trim();
    return r;
}

QPoly QPoly::reversed() const {
    QPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + QPoly(*it);
    return acc;
}

QPolyDivRem QPoly::divRem(const QPoly& divisor) const {
    if (divisor.isZero()) throw InternalError("division by zero polynomial");
    QPolyDivRem out;
    out.r = *this;
    int dDeg = divisor.deg();
    if (deg() < dDeg) return out;
    out.q.c_.assign(deg() - dDeg + 1, Rat(0));
    while (!out.r.isZero() && out.r.deg() >= dDeg) {
        int k = out.r.deg() - dDeg;
        Rat factor = out.r.lc() / divisor.lc();
        out.q.c_[k] = factor;
        // r -= factor * x^k * divisor
        for (int j = 0; j <= dDeg; ++j) out.r.c_[k + j] -= factor * divisor.c_[j];
        out.r.trim();
    }
    out.q.trim();
    return out;
}

QPoly QPoly::exactDiv(const QPoly& divisor) const {
    QPolyDivRem dr = divRem(divisor);
    if (!dr.r.isZero()) throw InternalError("inexact polynomial division");
    return dr.q;
}

QPoly QPoly::primitivePart() const {
    if (isZero()) return QPoly();
    Int den(1);
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    Int g(0);
    for (const auto& v : c_) {
        Int num = v.get_num() * (den / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rat factor(den, g);
    factor.canonicalize();
    return *this * factor;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    if (a.isZero() && b.isZero()) return QPoly();
    a = a.primitivePart();
    b = b.primitivePart();
    while (!b.isZero()) {
        QPoly r = a.divRem(b).r.primitivePart();
        a = std::move(b);
        b = std::move(r);
    }
    return a * (Rat(1) / a.lc());  // monic
}

QPoly QPoly::squarefreePart() const {
    if (isZero() || deg() == 0) return *this;
    QPoly g = gcd(*this, derivative());
    if (g.deg() == 0) return *this;
    return exactDiv(g);
}

std::vector<QPoly> QPoly::yun() const {
    std::vector<QPoly> out;
    if (isZero() || deg() == 0) return out;
    QPoly p = *this * (Rat(1) / lc());
    QPoly dp = p.derivative();
    QPoly g = gcd(p, dp);
    if (g.deg() == 0) {
        out.push_back(p);
        return out;
    }
    QPoly c = p.exactDiv(g);
    QPoly d = dp.exactDiv(g) - c.derivative();
    while (true) {
        QPoly a = gcd(c, d);
        out.push_back(a);
        c = c.exactDiv(a);
        if (c.deg() == 0) break;
        d = d.exactDiv(a) - c.derivative();
    }
    return out;
}

std::string QPoly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg(); k >= 0; --k) {
        const Rat v = coeff(k);
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Rat av = ratAbs(v);
        if (k == 0) {
            os << ratStr(av);
        } else {
            if (av != 1) os << ratStr(av) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// --- Sturm ------------------------------------------------------------------

SturmChain SturmChain::of(const QPoly& p) {
    SturmChain s;
    if (p.isZero()) return s;
    QPoly a = p.primitivePart();
    s.seq.push_back(a);
    QPoly b = a.derivative().primitivePart();
    while (!b.isZero()) {
        s.seq.push_back(b);
        QPoly r = (-(a.divRem(b).r)).primitivePart();
        a = std::move(b);
        b = std::move(r);
    }
    return s;
}

namespace {
int variationsOf(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int sg : signs) {
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}
}  // namespace

int SturmChain::variationsAt(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(sgn(p.eval(x)));
    return variationsOf(signs);
}

int SturmChain::variationsAtMinusInf() const {
    std::vector<int> signs;
    for (const auto& p : seq) {
        int sg = p.isZero() ? 0 : sgn(p.lc());
        if (p.deg() % 2 == 1) sg = -sg;
        signs.push_back(sg);
    }
    return variationsOf(signs);
}

int SturmChain::variationsAtPlusInf() const {
    std::vector<int> signs;
    for (const auto& p : seq) signs.push_back(p.isZero() ? 0 : sgn(p.lc()));
    return variationsOf(signs);
}

int SturmChain::countRoots(const Rat& lo, const Rat& hi) const {
    if (seq.empty()) throw InternalError("Sturm chain of zero polynomial");
    if (!(lo < hi)) return 0;
    if (seq[0].eval(lo) == 0 || seq[0].eval(hi) == 0)
        throw InternalError("Sturm endpoint is a root");
    return variationsAt(lo) - variationsAt(hi);
}

int SturmChain::countRootsAll() const {
    if (seq.empty()) return 0;
    return variationsAtMinusInf() - variationsAtPlusInf();
}

// --- Root isolation ---------------------------------------------------------

Rat cauchyRootBound(const QPoly& p) {
    if (p.isZero() || p.deg() == 0) return Rat(1);
    Rat m(0);
    for (int k = 0; k < p.deg(); ++k) m = std::max(m, ratAbs(p.coeff(k) / p.lc()));
    return m + 1;
}

namespace {

// Isolate the roots of one squarefree primitive polynomial.
void isolateSquarefree(const QPoly& q, int mult, std::vector<IsolatedRoot>& out) {
    if (q.deg() == 1) {
        Rat root = -q.coeff(0) / q.coeff(1);
        out.push_back({q, mult, root, root});
        return;
    }
    SturmChain chain = SturmChain::of(q);
    Rat bound = cauchyRootBound(q);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work;
    int total = chain.countRoots(-bound, bound);
    if (total != chain.countRootsAll()) throw InternalError("root bound too small");
    work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({q, mult, s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (q.eval(mid) == 0) {
            // Exact rational root at the midpoint: emit it, then carve out a
            // punctured neighbourhood so the flanks have nonzero endpoints.
            out.push_back({q, mult, mid, mid});
            Rat delta = (s.hi - s.lo) / 4;
            while (q.eval(mid - delta) == 0 || q.eval(mid + delta) == 0 ||
                   chain.countRoots(mid - delta, mid + delta) != 1)
                delta /= 2;
            int left = chain.countRoots(s.lo, mid - delta);
            int right = chain.countRoots(mid + delta, s.hi);
            if (left + right + 1 != s.count) throw InternalError("root count mismatch");
            work.push_back({s.lo, mid - delta, left});
            work.push_back({mid + delta, s.hi, right});
        } else {
            int left = chain.countRoots(s.lo, mid);
            work.push_back({s.lo, mid, left});
            work.push_back({mid, s.hi, s.count - left});
        }
    }
}

int cmpRoots(const IsolatedRoot& a, const IsolatedRoot& b) {
    // -1, 0, +1 by the real numbers they isolate; 0 only if same rational.
    if (a.isExact() && b.isExact()) return a.lo < b.lo ? -1 : (a.lo == b.lo ? 0 : 1);
    if (a.hi < b.lo || (a.hi == b.lo && (a.isExact() || b.isExact()))) return -1;
    if (b.hi < a.lo || (b.hi == a.lo && (a.isExact() || b.isExact()))) return 1;
    return 2;  // overlapping, undecided
}

}  // namespace

void refineRoot(IsolatedRoot& r, const Rat& width) {
    while (!r.isExact() && r.hi - r.lo >= width) {
        Rat mid = (r.lo + r.hi) / 2;
        int sm = sgn(r.factor.eval(mid));
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (sm == sgn(r.factor.eval(r.lo)))
            r.lo = mid;
        else
            r.hi = mid;
    }
}

std::vector<IsolatedRoot> isolateRealRoots(const QPoly& p) {
    if (p.isZero()) throw InternalError("cannot isolate roots of the zero polynomial");
    std::vector<IsolatedRoot> out;
    std::vector<QPoly> parts = p.yun();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].deg() < 1) continue;
        isolateSquarefree(parts[k].primitivePart(), static_cast<int>(k) + 1, out);
    }
    // Detect rational roots exactly: any root p/q in lowest terms has
    // q <= |lc|, and two fractions with denominator <= |lc| are at least
    // 1/lc^2 apart, so once the interval is narrower than that the simplest
    // fraction inside is the only candidate.
    for (auto& r : out) {
        if (r.isExact()) continue;
        Rat l = ratAbs(Rat(r.factor.lc()));
        refineRoot(r, Rat(1) / (l * l + 1));
        if (r.isExact()) continue;
        Rat s = simplestInInterval(r.lo, r.hi);
        if (r.factor.eval(s) == 0) r.lo = r.hi = s;
    }
    // Refine until intervals from different factors are pairwise disjoint,
    // then sort into increasing order.
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (cmpRoots(out[i], out[j]) == 2) {
                    Rat w = std::min(out[i].hi - out[i].lo, out[j].hi - out[j].lo);
                    if (w == 0) w = out[i].hi - out[i].lo + out[j].hi - out[j].lo;
                    refineRoot(out[i], w / 2);
                    refineRoot(out[j], w / 2);
                    again = true;
                }
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        int c = cmpRoots(a, b);
        if (c == 2 || c == 0) throw InternalError("unsorted isolated roots");
        return c < 0;
    });
    return out;
}

// --- Determinant and resultant ----------------------------------------------

Rat rationalDet(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    for (const auto& row : m)
        if (row.size() != n) throw InternalError("determinant of non-square matrix");
    // Clear denominators row by row, tracking the accumulated factor.
    Rat denom(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        denom *= Rat(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = m[i][j] * Rat(l);
            if (scaled.get_den() != 1) throw InternalError("denominator clearing failed");
            a[i][j] = scaled.get_num();
        }
    }
    // Fraction-free Bareiss elimination.
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1] * sign);
    return det / denom;
}

Rat resultant(const QPoly& a, const QPoly& b) {
    if (a.isZero() || b.isZero()) return Rat(0);
    const int m = a.deg(), n = b.deg();
    if (m == 0 && n == 0) return Rat(1);
    std::vector<std::vector<Rat>> s(m + n, std::vector<Rat>(m + n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
    return rationalDet(std::move(s));
}

}  // namespace gradindex
