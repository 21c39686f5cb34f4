#include "gradindex/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gradindex/errors.hpp"

namespace gradindex {

namespace {

Alg algZero(const Field& f) { return Alg(f, Rat(0)); }
Alg algOne(const Field& f) { return Alg(f, Rat(1)); }

APoly apolyConst(const Field& f, const Alg& a) {
    return APoly(f, std::vector<Alg>{a});
}

APoly apolyExactDiv(const APoly& a, const APoly& b) {
    APoly r(a.field());
    APoly q = a.divRem(b, &r);
    if (!r.isZero()) throw InternalError("apolyExactDiv: remainder nonzero");
    return q;
}

// p(q(x)) by Horner.
APoly apolyCompose(const APoly& p, const APoly& q) {
    APoly acc(p.field());
    for (int k = p.deg(); k >= 0; --k)
        acc = acc * q + apolyConst(p.field(), p.coeff(k));
    return acc;
}

APoly embedAPoly(const APoly& p, const AdjoinResult& adj) {
    APoly out(adj.field);
    for (int k = 0; k <= p.deg(); ++k)
        out.setCoeff(k, embed(p.coeff(k), adj));
    return out;
}

// Fraction-free Bareiss determinant over K[v].
APoly apolyMatDet(std::vector<std::vector<APoly>> m, const Field& f) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return APoly(f, std::vector<Alg>{algOne(f)});
    int sign = 1;
    APoly prev(f, std::vector<Alg>{algOne(f)});
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].isZero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].isZero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return APoly(f);  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = apolyExactDiv(
                    m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = APoly(f);
        }
        prev = m[k][k];
    }
    APoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

// ---------------------------------------------------------------------------
// APoly2

void APoly2::trim() {
    while (!vc_.empty() && vc_.back().isZero()) vc_.pop_back();
}

APoly2 APoly2::fromPoly2(const Field& f, const Poly2& p) {
    APoly2 out(f);
    for (int j = 0; j <= p.degY(); ++j) {
        const QPoly& q = p.yCoeff(j);
        for (int i = 0; i <= q.deg(); ++i) {
            Rat c = q.coeff(i);
            if (c != 0) out.setCoeff(i, j, Alg(f, c));
        }
    }
    return out;
}

APoly2 APoly2::fromVCoeffs(Field f, std::vector<APoly> vc) {
    APoly2 out(std::move(f));
    out.vc_ = std::move(vc);
    out.trim();
    return out;
}

int APoly2::degU() const {
    int d = -1;
    for (const APoly& c : vc_) d = std::max(d, c.deg());
    return d;
}

const APoly& APoly2::vCoeff(int j) const {
    if (j < 0 || j > degV())
        throw InternalError("APoly2::vCoeff: index out of range");
    return vc_[j];
}

APoly APoly2::uCoeff(int i) const {
    APoly out(f_);
    for (int j = 0; j <= degV(); ++j) out.setCoeff(j, vc_[j].coeff(i));
    return out;
}

Alg APoly2::coeff(int i, int j) const {
    if (j < 0 || j > degV() || i < 0) return algZero(f_);
    return vc_[j].coeff(i);
}

void APoly2::setCoeff(int i, int j, const Alg& c) {
    if (j < 0 || i < 0) throw InternalError("APoly2::setCoeff: bad index");
    if (j > degV()) {
        if (c.isZero()) return;
        vc_.resize(j + 1, APoly(f_));
    }
    vc_[j].setCoeff(i, c);
    trim();
}

APoly2 APoly2::operator+(const APoly2& o) const {
    APoly2 out(f_);
    out.vc_.resize(std::max(vc_.size(), o.vc_.size()), APoly(f_));
    for (size_t j = 0; j < out.vc_.size(); ++j) {
        if (j < vc_.size()) out.vc_[j] = out.vc_[j] + vc_[j];
        if (j < o.vc_.size()) out.vc_[j] = out.vc_[j] + o.vc_[j];
    }
    out.trim();
    return out;
}

APoly2 APoly2::operator-(const APoly2& o) const { return *this + (-o); }

APoly2 APoly2::operator-() const {
    APoly2 out(f_);
    out.vc_.reserve(vc_.size());
    for (const APoly& c : vc_) out.vc_.push_back(-c);
    return out;
}

APoly2 APoly2::operator*(const APoly2& o) const {
    APoly2 out(f_);
    if (isZero() || o.isZero()) return out;
    out.vc_.assign(vc_.size() + o.vc_.size() - 1, APoly(f_));
    for (size_t a = 0; a < vc_.size(); ++a) {
        if (vc_[a].isZero()) continue;
        for (size_t b = 0; b < o.vc_.size(); ++b)
            out.vc_[a + b] = out.vc_[a + b] + vc_[a] * o.vc_[b];
    }
    out.trim();
    return out;
}

APoly2 APoly2::operator*(const Alg& k) const {
    APoly2 out(f_);
    if (k.isZero()) return out;
    out.vc_.reserve(vc_.size());
    for (const APoly& c : vc_) out.vc_.push_back(c * k);
    return out;
}

bool APoly2::operator==(const APoly2& o) const {
    return (*this - o).isZero();
}

APoly2 APoly2::dU() const {
    APoly2 out(f_);
    out.vc_.reserve(vc_.size());
    for (const APoly& c : vc_) out.vc_.push_back(c.derivative());
    out.trim();
    return out;
}

APoly2 APoly2::dV() const {
    APoly2 out(f_);
    for (int j = 1; j <= degV(); ++j)
        out.vc_.push_back(vc_[j] * Alg(f_, Rat(j)));
    out.trim();
    return out;
}

APoly APoly2::sectionV(const Rat& v0) const {
    APoly acc(f_);
    Alg a(f_, v0);
    for (int j = degV(); j >= 0; --j) acc = acc * a + vc_[j];
    return acc;
}

APoly APoly2::sectionU(const Rat& u0) const {
    APoly out(f_);
    for (int j = 0; j <= degV(); ++j) out.setCoeff(j, vc_[j].eval(u0));
    return out;
}

Alg APoly2::eval(const Alg& u0, const Alg& v0) const {
    Alg acc = algZero(f_);
    for (int j = degV(); j >= 0; --j) acc = acc * v0 + vc_[j].eval(u0);
    return acc;
}

APoly2 APoly2::withNegatedV() const {
    APoly2 out = *this;
    for (int j = 1; j <= out.degV(); j += 2) out.vc_[j] = -out.vc_[j];
    return out;
}

APoly2 APoly2::shiftedU(const Alg& a) const {
    APoly2 out(f_);
    out.vc_.reserve(vc_.size());
    for (const APoly& c : vc_) out.vc_.push_back(c.shifted(a));
    out.trim();
    return out;
}

APoly2 APoly2::shiftedV(const Alg& b) const {
    // Horner in v: sum vc_j (v+b)^j.
    APoly2 vb(f_);
    vb.setCoeff(0, 1, algOne(f_));
    vb.setCoeff(0, 0, b);
    APoly2 acc(f_);
    for (int j = degV(); j >= 0; --j) {
        acc = acc * vb;
        APoly2 row(f_);
        row.vc_.push_back(vc_[j]);
        row.trim();
        acc = acc + row;
    }
    return acc;
}

APoly2 APoly2::swappedUV() const {
    APoly2 out(f_);
    for (int j = 0; j <= degV(); ++j)
        for (int i = 0; i <= vc_[j].deg(); ++i) {
            Alg c = vc_[j].coeff(i);
            if (!c.isZero()) out.setCoeff(j, i, c);
        }
    return out;
}

int APoly2::uFactorOrder() const {
    if (isZero()) throw InternalError("APoly2::uFactorOrder: zero polynomial");
    int m = -1;
    for (const APoly& c : vc_) {
        if (c.isZero()) continue;
        int l = c.lowestNonzero();
        m = (m < 0) ? l : std::min(m, l);
    }
    return m;
}

int APoly2::vFactorOrder() const {
    if (isZero()) throw InternalError("APoly2::vFactorOrder: zero polynomial");
    for (int j = 0; j <= degV(); ++j)
        if (!vc_[j].isZero()) return j;
    throw InternalError("APoly2::vFactorOrder: unreachable");
}

APoly2 APoly2::divByU(int m) const {
    if (m == 0) return *this;
    APoly2 out(f_);
    out.vc_.reserve(vc_.size());
    for (const APoly& c : vc_) {
        APoly s(f_);
        for (int k = m; k <= c.deg(); ++k) s.setCoeff(k - m, c.coeff(k));
        if (!c.isZero() && c.lowestNonzero() < m)
            throw InternalError("APoly2::divByU: not divisible");
        out.vc_.push_back(std::move(s));
    }
    out.trim();
    return out;
}

APoly2 APoly2::divByV(int m) const {
    if (m == 0) return *this;
    if (vFactorOrder() < m) throw InternalError("APoly2::divByV: not divisible");
    APoly2 out(f_);
    out.vc_.assign(vc_.begin() + m, vc_.end());
    out.trim();
    return out;
}

APoly2 APoly2::embedded(const AdjoinResult& adj) const {
    APoly2 out(adj.field);
    out.vc_.reserve(vc_.size());
    for (const APoly& c : vc_) out.vc_.push_back(embedAPoly(c, adj));
    out.trim();
    return out;
}

APoly APoly2::contentU() const {
    APoly g(f_);
    for (int i = 0; i <= degU(); ++i) {
        APoly c = uCoeff(i);
        if (c.isZero()) continue;
        g = g.isZero() ? c.monic() : APoly::gcd(g, c);
        if (g.deg() == 0) break;
    }
    return g.isZero() ? g : g.monic();
}

APoly2 APoly2::primitivePartU() const {
    if (isZero()) return *this;
    APoly ct = contentU();
    if (ct.deg() == 0) return *this * ct.coeff(0).inverse();
    APoly2 out(f_);
    for (int i = 0; i <= degU(); ++i) {
        APoly q = apolyExactDiv(uCoeff(i), ct);
        for (int j = 0; j <= q.deg(); ++j) {
            Alg c = q.coeff(j);
            if (!c.isZero()) out.setCoeff(i, j, c);
        }
    }
    return out;
}

namespace {

// u-major view: entry [i] is the coefficient of u^i, a polynomial in v.
std::vector<APoly> toUMajor(const APoly2& p) {
    std::vector<APoly> out;
    for (int i = 0; i <= p.degU(); ++i) out.push_back(p.uCoeff(i));
    while (!out.empty() && out.back().isZero()) out.pop_back();
    return out;
}

APoly2 fromUMajor(const Field& f, const std::vector<APoly>& uc) {
    APoly2 out(f);
    for (size_t i = 0; i < uc.size(); ++i)
        for (int j = 0; j <= uc[i].deg(); ++j) {
            Alg c = uc[i].coeff(j);
            if (!c.isZero()) out.setCoeff(static_cast<int>(i), j, c);
        }
    return out;
}

int umDeg(const std::vector<APoly>& a) { return static_cast<int>(a.size()) - 1; }

void umTrim(std::vector<APoly>& a) {
    while (!a.empty() && a.back().isZero()) a.pop_back();
}

// Pseudo-remainder of a by b in u over K[v].
std::vector<APoly> umPrem(std::vector<APoly> a, const std::vector<APoly>& b,
                          const Field& f) {
    const APoly& lcb = b.back();
    while (umDeg(a) >= umDeg(b) && !a.empty()) {
        int delta = umDeg(a) - umDeg(b);
        APoly lca = a.back();
        std::vector<APoly> next(a.size() - 1, APoly(f));
        // lcb * a  -  u^delta * lca * b, top coefficient cancels.
        for (int i = 0; i + 1 < static_cast<int>(a.size()); ++i)
            next[i] = a[i] * lcb;
        for (int i = 0; i + 1 < static_cast<int>(b.size()); ++i)
            next[delta + i] = next[delta + i] - lca * b[i];
        a = std::move(next);
        umTrim(a);
    }
    return a;
}

APoly umContent(const std::vector<APoly>& a, const Field& f) {
    APoly g(f);
    for (const APoly& c : a) {
        if (c.isZero()) continue;
        g = g.isZero() ? c.monic() : APoly::gcd(g, c);
        if (g.deg() == 0) break;
    }
    return g;
}

void umMakePrimitive(std::vector<APoly>& a, const Field& f) {
    APoly ct = umContent(a, f);
    if (ct.isZero()) return;
    if (ct.deg() == 0) {
        Alg inv = ct.coeff(0).inverse();
        for (APoly& c : a) c = c * inv;
        return;
    }
    for (APoly& c : a) c = c.isZero() ? c : apolyExactDiv(c, ct);
}

// Exact division in u over K[v].
std::vector<APoly> umExactDiv(std::vector<APoly> a, const std::vector<APoly>& b,
                              const Field& f) {
    if (b.empty()) throw InternalError("umExactDiv: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw InternalError("umExactDiv: not divisible");
    std::vector<APoly> q(a.size() - b.size() + 1, APoly(f));
    while (!a.empty() && umDeg(a) >= umDeg(b)) {
        int delta = umDeg(a) - umDeg(b);
        APoly qc = apolyExactDiv(a.back(), b.back());
        q[delta] = qc;
        for (int i = 0; i < static_cast<int>(b.size()); ++i)
            a[delta + i] = a[delta + i] - b[i] * qc;
        umTrim(a);
    }
    if (!a.empty()) throw InternalError("umExactDiv: remainder nonzero");
    return q;
}

}  // namespace

APoly2 APoly2::gcdU(const APoly2& a, const APoly2& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    const Field& f = a.field();
    APoly ct = APoly::gcd(a.contentU(), b.contentU());
    std::vector<APoly> x = toUMajor(a.primitivePartU());
    std::vector<APoly> y = toUMajor(b.primitivePartU());
    if (umDeg(x) < umDeg(y)) std::swap(x, y);
    while (!y.empty()) {
        std::vector<APoly> r = umPrem(x, y, f);
        umMakePrimitive(r, f);
        x = std::move(y);
        y = std::move(r);
    }
    // Normalize: monic content times primitive part with monic leading
    // v-coefficient of the top u-coefficient.
    APoly2 pp = fromUMajor(f, x);
    Alg top = pp.uCoeff(pp.degU()).lc();
    pp = pp * top.inverse();
    if (ct.deg() == 0) return pp;
    APoly2 ctp(f);
    for (int j = 0; j <= ct.deg(); ++j) {
        Alg c = ct.coeff(j);
        if (!c.isZero()) ctp.setCoeff(0, j, c);
    }
    return ctp * pp;
}

APoly2 APoly2::squarefreePartU() const {
    APoly2 pp = primitivePartU();
    if (pp.degU() <= 0) return pp;
    APoly2 g = gcdU(pp, pp.dU());
    if (g.degU() <= 0 && g.degV() <= 0) return pp;
    std::vector<APoly> q =
        umExactDiv(toUMajor(pp), toUMajor(g.primitivePartU()), f_);
    return fromUMajor(f_, q);
}

APoly2 APoly2::radical() const {
    if (isZero()) return *this;
    APoly ct = contentU().squarefreePart().monic();
    APoly2 sf = squarefreePartU();
    APoly2 ctp(f_);
    for (int j = 0; j <= ct.deg(); ++j) {
        Alg c = ct.coeff(j);
        if (!c.isZero()) ctp.setCoeff(0, j, c);
    }
    return ctp * sf;
}

std::string APoly2::str(const std::string& uname, const std::string& vname) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degV(); j >= 0; --j)
        for (int i = vc_[j].deg(); i >= 0; --i) {
            Alg c = vc_[j].coeff(i);
            if (c.isZero()) continue;
            if (!first) os << " + ";
            first = false;
            auto r = c.asRational();
            if (r)
                os << "(" << ratStr(*r) << ")";
            else
                os << "(~" << c.approx() << ")";
            if (i > 0) os << "*" << uname << "^" << i;
            if (j > 0) os << "*" << vname << "^" << j;
        }
    return os.str();
}

APoly resultantU(const APoly2& a, const APoly2& b) {
    const Field& f = a.field();
    if (a.isZero() || b.isZero()) return APoly(f);
    std::vector<APoly> ua = toUMajor(a), ub = toUMajor(b);
    const int m = umDeg(ua), n = umDeg(ub);
    if (m < 0 || n < 0) return APoly(f);
    if (m == 0 && n == 0) return APoly(f, std::vector<Alg>{algOne(f)});
    if (m == 0) {
        // res = a0^n
        APoly out(f, std::vector<Alg>{algOne(f)});
        for (int k = 0; k < n; ++k) out = out * ua[0];
        return out;
    }
    if (n == 0) {
        APoly out(f, std::vector<Alg>{algOne(f)});
        for (int k = 0; k < m; ++k) out = out * ub[0];
        return out;
    }
    std::vector<std::vector<APoly>> s(m + n, std::vector<APoly>(m + n, APoly(f)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = ua[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = ub[n - j];
    return apolyMatDet(std::move(s), f);
}

// ---------------------------------------------------------------------------
// GermSeries

struct SeriesBuilder {
    static GermSeries make(Field base, Field field, Alg baseGen, int side,
                           int ram, std::vector<SeriesTerm> terms, bool finite,
                           std::optional<APoly2> cont, Rat contB, Rat contS) {
        GermSeries s;
        s.base_ = std::move(base);
        s.field_ = std::move(field);
        s.baseGen_ = std::move(baseGen);
        s.side_ = side;
        s.ram_ = ram;
        s.sepTerms_ = static_cast<int>(terms.size());
        s.terms_ = std::move(terms);
        s.finite_ = finite;
        s.cont_ = std::move(cont);
        s.contB_ = std::move(contB);
        s.contS_ = std::move(contS);
        return s;
    }
};

Rat GermSeries::leadingExp() const {
    if (terms_.empty()) throw InternalError("GermSeries::leadingExp: zero series");
    return terms_.front().exp;
}

const Alg& GermSeries::leadingCoeff() const {
    if (terms_.empty())
        throw InternalError("GermSeries::leadingCoeff: zero series");
    return terms_.front().coeff;
}

void GermSeries::extend(int k) const {
    for (; k > 0 && !finite_; --k) {
        if (!cont_) throw InternalError("GermSeries::extend: no continuation");
        const APoly2& g = *cont_;
        int m = g.uFactorOrder();
        if (m >= 1) {
            // The unique series through the origin is u' == 0: done.
            finite_ = true;
            cont_.reset();
            return;
        }
        APoly q0 = g.uCoeff(0);
        int j0 = q0.lowestNonzero();
        if (j0 < 1) throw InternalError("GermSeries::extend: germ not centered");
        Alg a10 = g.coeff(1, 0);
        if (a10.isZero())
            throw InternalError("GermSeries::extend: separated germ not simple");
        Alg c0 = -(q0.coeff(j0) * a10.inverse());
        Rat exp = contB_ + contS_ * Rat(j0);
        // Substitute u' = w^{j0}(c0 + u''), divide by w^{j0}.
        const Field& f = g.field();
        APoly2 next(f);
        std::vector<APoly> pows;
        pows.push_back(APoly(f, std::vector<Alg>{algOne(f)}));
        APoly shift = APoly::var(f) + apolyConst(f, c0);
        for (int i = 1; i <= g.degU(); ++i) pows.push_back(pows.back() * shift);
        for (int j = 0; j <= g.degV(); ++j) {
            const APoly& row = g.vCoeff(j);
            for (int i = 0; i <= row.deg(); ++i) {
                Alg cij = row.coeff(i);
                if (cij.isZero()) continue;
                const APoly& pw = pows[i];
                int wexp = j0 * i + j - j0;
                if (wexp < 0)
                    throw InternalError("GermSeries::extend: negative valuation");
                for (int t = 0; t <= pw.deg(); ++t) {
                    Alg add = pw.coeff(t) * cij;
                    if (!add.isZero())
                        next.setCoeff(t, wexp, next.coeff(t, wexp) + add);
                }
            }
        }
        if (next.isZero() || next.vFactorOrder() != 0)
            throw InternalError("GermSeries::extend: bad substitution");
        terms_.push_back({exp, c0});
        contB_ = exp;
        cont_ = std::move(next);
    }
}

std::optional<Rat> GermSeries::tailExpBound() const {
    if (finite_) return std::nullopt;
    return contB_ + contS_;
}

Alg GermSeries::liftFromBase(const Alg& a) const {
    if (a.field().get() != base_.get())
        throw InternalError("GermSeries::liftFromBase: wrong base field");
    const QPoly& rep = a.rep();
    Alg acc = algZero(field_);
    for (int k = rep.deg(); k >= 0; --k)
        acc = acc * baseGen_ + rep.coeff(k);
    return acc;
}

APoly2 GermSeries::liftGermFromBase(const APoly2& g) const {
    if (g.field().get() != base_.get())
        throw InternalError("GermSeries::liftGermFromBase: wrong base field");
    APoly2 out(field_);
    for (int j = 0; j <= g.degV(); ++j) {
        const APoly& row = g.vCoeff(j);
        for (int i = 0; i <= row.deg(); ++i) {
            Alg c = row.coeff(i);
            if (!c.isZero()) out.setCoeff(i, j, liftFromBase(c));
        }
    }
    return out;
}

namespace {

// Enclosure of w0^(p/q) for rational w0 > 0.
IntervalQ ratPowInterval(const Rat& w0, const Rat& expo, int refineSteps) {
    Int p = expo.get_num(), q = expo.get_den();
    bool neg = p < 0;
    if (neg) p = -p;
    Rat base = ratPow(w0, static_cast<unsigned long>(p.get_ui()));
    // positive root of z^q = base by bisection
    Rat lo(0), hi = base < 1 ? Rat(1) : base + 1;
    unsigned long qq = static_cast<unsigned long>(q.get_ui());
    for (int it = 0; it < refineSteps; ++it) {
        Rat mid = (lo + hi) / 2;
        if (ratPow(mid, qq) <= base)
            lo = mid;
        else
            hi = mid;
    }
    if (neg) {
        if (lo == 0) throw InternalError("ratPowInterval: inverting zero");
        return IntervalQ(Rat(1) / hi, Rat(1) / lo);
    }
    return IntervalQ(lo, hi);
}

}  // namespace

IntervalQ GermSeries::partialSumAt(const Rat& w0) const {
    if (w0 <= 0) throw InternalError("GermSeries::partialSumAt: need w0 > 0");
    IntervalQ acc(Rat(0), Rat(0));
    for (const SeriesTerm& t : terms_) {
        IntervalQ c = t.coeff.enclosure(Rat(1, 1000000));
        IntervalQ p = ratPowInterval(w0, t.exp, 64);
        acc = acc + c * p;
    }
    return acc;
}

ComposedSeries composeWithSeries(const APoly2& g, const GermSeries& s) {
    if (g.field().get() != s.field().get())
        throw InternalError("composeWithSeries: field mismatch");
    const Field& f = g.field();
    const int e = s.ramification();
    // P(z): the truncated series with w = z^e.
    APoly pz(f);
    for (const SeriesTerm& t : s.terms()) {
        Rat ze = t.exp * e;
        if (ze.get_den() != 1)
            throw InternalError("composeWithSeries: exponent denominator");
        pz.setCoeff(static_cast<int>(ze.get_num().get_si()), t.coeff);
    }
    // v = side * z^e.
    APoly vz(f);
    vz.setCoeff(e, s.side() > 0 ? algOne(f) : -algOne(f));
    APoly acc(f);
    for (int j = g.degV(); j >= 0; --j)
        acc = acc * vz + apolyCompose(g.vCoeff(j), pz);
    std::optional<Rat> certified;
    auto tb = s.tailExpBound();
    if (tb) certified = *tb * e;
    return ComposedSeries{std::move(acc), std::move(certified)};
}

EndCompositionOrder ordAlongSeries(const APoly2& g, const GermSeries& s,
                                   const Rat& ordCapZ) {
    for (;;) {
        ComposedSeries cs = composeWithSeries(g, s);
        int low = cs.trunc.isZero() ? -1 : cs.trunc.lowestNonzero();
        if (low >= 0 &&
            (!cs.certifiedOrdZ || Rat(low) < *cs.certifiedOrdZ)) {
            EndCompositionOrder out;
            out.ordW = Rat(low) / s.ramification();
            out.leadCoeff = cs.trunc.coeff(low);
            return out;
        }
        if (!cs.certifiedOrdZ || *cs.certifiedOrdZ > ordCapZ) {
            // No term below the certification bound and the bound exceeds
            // the a-priori order cap: the composition is identically zero.
            EndCompositionOrder out;
            out.identicallyZero = true;
            out.leadCoeff = algZero(s.field());
            return out;
        }
        s.extend();
    }
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct HullPoint {
    int i, j;
};

struct Enumerator {
    int side;
    Field base;
    std::vector<GermSeries>* out;

    // Returns the total series count (with multiplicity) of F at this node.
    int stage(APoly2 F, const Field& K, const Alg& baseGen,
              std::vector<SeriesTerm> prefix, const Rat& B, const Rat& S,
              int ram, int depth) {
        if (depth > 256) throw InternalError("puiseux: recursion too deep");
        if (F.isZero()) throw InternalError("puiseux: zero germ");
        APoly f0 = F.sectionV(Rat(0));
        if (f0.isZero()) throw InternalError("puiseux: germ divisible by v");
        const int ordAtZero = f0.lowestNonzero();
        int total = 0;
        int m = F.uFactorOrder();
        if (m > 0) {
            // u == 0 solves the germ exactly here: the series terminates.
            out->push_back(SeriesBuilder::make(base, K, baseGen, side, ram,
                                               prefix, true, std::nullopt,
                                               B, S));
            total += m;
            F = F.divByU(m);
        }
        if (!F.coeff(0, 0).isZero()) {
            // Nothing else tends to 0 through this germ.
            if (total != ordAtZero)
                throw InternalError("puiseux: node count mismatch");
            return total;
        }
        // Support minima g[i] = min j with coeff(i,j) != 0.
        const int du = F.degU();
        std::vector<int> g(du + 1, -1);
        for (int i = 0; i <= du; ++i) {
            APoly c = F.uCoeff(i);
            if (!c.isZero()) g[i] = c.lowestNonzero();
        }
        if (g[0] < 1)
            throw InternalError("puiseux: inconsistent support");
        int iEnd = -1;
        for (int i = 0; i <= du; ++i)
            if (g[i] == 0) {
                iEnd = i;
                break;
            }
        if (iEnd < 0)
            throw InternalError("puiseux: germ divisible by v");
        // Lower hull of {(i, g[i])}, i = 0..iEnd.
        std::vector<HullPoint> hull;
        for (int i = 0; i <= iEnd; ++i) {
            if (g[i] < 0) continue;
            HullPoint p{i, g[i]};
            while (hull.size() >= 2) {
                const HullPoint& o = hull[hull.size() - 2];
                const HullPoint& a = hull[hull.size() - 1];
                long cross = static_cast<long>(a.i - o.i) * (p.j - o.j) -
                             static_cast<long>(a.j - o.j) * (p.i - o.i);
                if (cross <= 0)
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(p);
        }
        // Walk the strictly descending part (gamma > 0 edges).
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            const HullPoint p1 = hull[k], p2 = hull[k + 1];
            if (p2.j >= p1.j)
                throw InternalError("puiseux: hull not descending");
            int di = p2.i - p1.i, dj = p1.j - p2.j;
            int gg = std::gcd(di, dj);
            int a = dj / gg, b = di / gg;
            long N = static_cast<long>(a) * p1.i + static_cast<long>(b) * p1.j;
            // Edge polynomial chi(c) = sum of coeff(i,j) c^i over support
            // points with a i + b j == N.
            APoly chi(K);
            for (int i = p1.i; i <= p2.i; ++i) {
                long jj = (N - static_cast<long>(a) * i);
                if (jj % b != 0) continue;
                long j = jj / b;
                if (j < 0 || j > F.degV()) continue;
                Alg c = F.coeff(i, static_cast<int>(j));
                if (!c.isZero()) chi.setCoeff(i, c);
            }
            const int extent = p2.i - p1.i;
            if (chi.deg() != p2.i || chi.lowestNonzero() != p1.i)
                throw InternalError("puiseux: edge polynomial mismatch");
            total += extent;
            int realMultSum = 0;
            for (const AIsolatedRoot& root : isolateRealRootsA(chi)) {
                if (root.isExact() && root.lo == 0) continue;
                AdjoinResult adj = adjoinRoot(chi, root);
                Alg c0 = adj.newRoot;
                if (c0.isZero()) continue;  // exact-zero root via other path
                APoly chi2 = embedAPoly(chi, adj);
                // Multiplicity of c0 in chi.
                int mc = 1;
                APoly dchi = chi2.derivative();
                while (mc <= extent && dchi.eval(c0).isZero()) {
                    ++mc;
                    dchi = dchi.derivative();
                }
                realMultSum += mc;
                APoly2 F2 = F.embedded(adj);
                APoly2 child = substituted(F2, a, b, c0, N);
                std::vector<SeriesTerm> prefix2;
                prefix2.reserve(prefix.size() + 1);
                for (const SeriesTerm& t : prefix)
                    prefix2.push_back({t.exp, embed(t.coeff, adj)});
                Rat exp = B + S * Rat(a) / Rat(b);
                prefix2.push_back({exp, c0});
                Alg baseGen2 = embed(baseGen, adj);
                Rat S2 = S / b;
                int ram2 = ram * b;
                if (mc == 1) {
                    out->push_back(SeriesBuilder::make(
                        base, adj.field, baseGen2, side, ram2,
                        std::move(prefix2), false, std::move(child), exp, S2));
                } else {
                    int sub = stage(std::move(child), adj.field, baseGen2,
                                    std::move(prefix2), exp, S2, ram2,
                                    depth + 1);
                    if (sub != mc)
                        throw InternalError("puiseux: child count mismatch");
                }
            }
            if (realMultSum > extent)
                throw InternalError("puiseux: real multiplicities exceed edge");
        }
        if (total != ordAtZero)
            throw InternalError("puiseux: node count mismatch");
        return total;
    }

    static APoly2 substituted(const APoly2& F, int a, int b, const Alg& c0,
                              long N) {
        const Field& f = F.field();
        APoly2 next(f);
        std::vector<APoly> pows;
        pows.push_back(APoly(f, std::vector<Alg>{algOne(f)}));
        APoly shift = APoly::var(f) + apolyConst(f, c0);
        for (int i = 1; i <= F.degU(); ++i) pows.push_back(pows.back() * shift);
        for (int j = 0; j <= F.degV(); ++j) {
            const APoly& row = F.vCoeff(j);
            for (int i = 0; i <= row.deg(); ++i) {
                Alg cij = row.coeff(i);
                if (cij.isZero()) continue;
                long wexp = static_cast<long>(a) * i + static_cast<long>(b) * j - N;
                if (wexp < 0)
                    throw InternalError("puiseux: negative valuation");
                const APoly& pw = pows[i];
                for (int t = 0; t <= pw.deg(); ++t) {
                    Alg add = pw.coeff(t) * cij;
                    if (!add.isZero())
                        next.setCoeff(t, static_cast<int>(wexp),
                                      next.coeff(t, static_cast<int>(wexp)) + add);
                }
            }
        }
        if (next.isZero() || next.vFactorOrder() != 0)
            throw InternalError("puiseux: bad stage substitution");
        return next;
    }
};

std::optional<SeriesTerm> termAt(const GermSeries& s, size_t k) {
    while (!s.finite() && s.terms().size() <= k)
        s.extend(static_cast<int>(k + 1 - s.terms().size()));
    if (k < s.terms().size()) return s.terms()[k];
    return std::nullopt;
}

// Strict order of series values as w -> 0+ (series must be distinct).
bool lessNearZero(const GermSeries& a, const GermSeries& b) {
    for (size_t k = 0;; ++k) {
        auto ta = termAt(a, k), tb = termAt(b, k);
        if (!ta && !tb)
            throw InternalError("puiseux: comparing identical series");
        if (!ta) return tb->coeff.sign() > 0;  // b - a ~ tb
        if (!tb) return ta->coeff.sign() < 0;
        if (ta->exp < tb->exp) return ta->coeff.sign() < 0;  // a - b ~ ta
        if (tb->exp < ta->exp) return tb->coeff.sign() > 0;
        if (ta->coeff.field().get() == tb->coeff.field().get()) {
            Alg d = ta->coeff - tb->coeff;
            if (!d.isZero()) return d.sign() < 0;
        } else {
            RealValue ra(ta->coeff), rb(tb->coeff);
            int c = ra.compare(rb);
            if (c != 0) return c < 0;
        }
    }
}

}  // namespace

GermSideSeries germSeriesAtOrigin(const APoly2& F, int side) {
    if (F.isZero()) throw InternalError("germSeriesAtOrigin: zero germ");
    GermSideSeries out;
    APoly2 G = side > 0 ? F : F.withNegatedV();
    out.vFactorOrder = G.vFactorOrder();
    if (out.vFactorOrder > 0) G = G.divByV(out.vFactorOrder);
    if (G.degU() < 0) throw InternalError("germSeriesAtOrigin: empty germ");
    if (G.degU() == 0) {
        // No u dependence left: no series (G(u,0) is a nonzero constant in u).
        out.zeroMultiplicity = 0;
        out.totalWithMultiplicity = 0;
        return out;
    }
    out.zeroMultiplicity = G.uFactorOrder();
    out.totalWithMultiplicity = G.sectionV(Rat(0)).lowestNonzero();
    APoly2 R = G.radical();
    Enumerator en;
    en.side = side;
    en.base = F.field();
    en.out = &out.series;
    Alg gen0 = Alg::gen(F.field());
    int totalRad = en.stage(R, F.field(), gen0, {}, Rat(0), Rat(1), 1, 0);
    if (totalRad != R.sectionV(Rat(0)).lowestNonzero())
        throw InternalError("germSeriesAtOrigin: series count mismatch");
    std::sort(out.series.begin(), out.series.end(), lessNearZero);
    return out;
}

int realHalfBranchesAtOrigin(const APoly2& F) {
    GermSideSeries plus = germSeriesAtOrigin(F, +1);
    GermSideSeries minus = germSeriesAtOrigin(F, -1);
    int r = static_cast<int>(plus.series.size()) +
            static_cast<int>(minus.series.size());
    if (plus.vFactorOrder > 0) r += 2;
    return r;
}

// ---------------------------------------------------------------------------
// Certified sampling

namespace {

// Smallest positive root of p, as a strict rational lower bound (returns
// nullopt when p has no positive root).  p must be nonzero.
std::optional<Rat> belowSmallestPositiveRoot(const APoly& p) {
    std::optional<Rat> best;
    APoly sf = p.squarefreePart();
    for (AIsolatedRoot r : isolateRealRootsA(sf)) {
        if (r.isExact()) {
            if (r.lo <= 0) continue;
            Rat cand = r.lo / 2;
            if (!best || cand < *best) best = cand;
            continue;
        }
        if (r.hi <= 0) continue;
        while (r.lo < 0 || r.lo == 0) {
            if (r.hi < 0 || r.hi == 0) break;
            refineRootA(sf, r, (r.hi - r.lo) / 2);
        }
        if (r.hi < 0 || r.hi == 0) continue;  // negative root after all
        if (r.lo <= 0)
            throw InternalError("belowSmallestPositiveRoot: refinement stuck");
        if (!best || r.lo < *best) best = r.lo;
    }
    return best;
}

GermSectionMatch locateImpl(const APoly2& F, int side,
                            const GermSideSeries& sides,
                            const std::optional<Rat>& radiusCap,
                            const std::optional<Rat>& fixedRadius) {
    APoly2 G = side > 0 ? F : F.withNegatedV();
    if (G.vFactorOrder() > 0) G = G.divByV(G.vFactorOrder());
    APoly2 R = G.radical();

    if (R.degU() <= 0) {
        if (!sides.series.empty())
            throw InternalError("locateSeriesAt: series for a trivial germ");
        Rat rho = fixedRadius.value_or(radiusCap.value_or(Rat(1)));
        return GermSectionMatch{rho, Rat(1), R.sectionV(rho), {}};
    }

    // Window eta: F(u, 0) with all u factors removed has no real root in
    // [-eta, eta], so 0 is the only possible limit of in-window paths.
    APoly s0 = R.sectionV(Rat(0));
    APoly h(R.field());
    for (int k = s0.lowestNonzero(); k <= s0.deg(); ++k)
        h.setCoeff(k - s0.lowestNonzero(), s0.coeff(k));
    Rat eta(1);
    {
        APoly hs = h.squarefreePart();
        for (AIsolatedRoot r : isolateRealRootsA(hs)) {
            while (!r.isExact() && !(r.lo > 0) && !(r.hi < 0))
                refineRootA(hs, r, (r.hi - r.lo) / 2);
            Rat bound = r.isExact() ? ratAbs(r.lo)
                                    : (r.lo > 0 ? r.lo : ratAbs(r.hi));
            if (bound == 0)
                throw InternalError(
                    "locateSeriesAt: reduced section vanishes at 0");
            if (bound / 2 < eta) eta = bound / 2;
        }
    }

    // Shrink the window while the curve contains a line u = +-eta.
    APoly gp(R.field()), gm(R.field());
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 64)
            throw InternalError("locateSeriesAt: window collapse");
        gp = R.sectionU(eta);
        gm = R.sectionU(-eta);
        if (!gp.isZero() && !gm.isZero()) break;
        eta = eta / 2;
    }

    Rat rho = radiusCap ? std::min(Rat(1), *radiusCap) : Rat(1);
    if (fixedRadius) {
        rho = *fixedRadius;
    } else {
        // For 0 < v <= rho: no collision among the section roots
        // (discriminant), no escape to infinity (leading coefficient), and
        // no crossing of the window boundary (sections at u = +-eta).
        APoly disc = resultantU(R, R.dU());
        APoly lc = R.uCoeff(R.degU());
        for (const APoly* battery : {&disc, &lc, &gp, &gm}) {
            if (battery->isZero())
                throw InternalError("locateSeriesAt: zero battery entry");
            auto b = belowSmallestPositiveRoot(*battery);
            if (b && *b < rho) rho = *b;
        }
    }

    for (int attempt = 0; attempt < 40; ++attempt) {
        APoly section = R.sectionV(rho);
        APoly secSf = section.squarefreePart();
        std::vector<AIsolatedRoot> inWindow;
        bool edgeHit = false;
        for (AIsolatedRoot r : isolateRealRootsA(section)) {
            // Decide |root| < eta.  A non-exact isolated root is
            // irrational, hence never equal to +-eta: refinement decides.
            for (;;) {
                if (r.isExact()) break;
                if (r.hi < eta && r.lo > -eta) break;
                if (r.lo > eta || r.hi < -eta) break;
                refineRootA(secSf, r, (r.hi - r.lo) / 2);
            }
            if (r.isExact()) {
                if (ratAbs(r.lo) == eta) {
                    edgeHit = true;
                    break;
                }
                if (ratAbs(r.lo) < eta) inWindow.push_back(r);
            } else if (r.hi < eta && r.lo > -eta) {
                inWindow.push_back(r);
            }
        }
        if (!edgeHit && inWindow.size() == sides.series.size())
            return GermSectionMatch{rho, eta, std::move(section),
                                    std::move(inWindow)};
        if (fixedRadius)
            throw InternalError(
                "locateSeriesAtRadius: window population mismatch");
        // Defensive only: the battery argument makes the first attempt work.
        rho = rho / 2;
    }
    throw InternalError("locateSeriesAt: failed to certify a radius");
}

}  // namespace

GermSectionMatch locateSeriesAt(const APoly2& F, int side,
                                const GermSideSeries& sides,
                                const std::optional<Rat>& radiusCap) {
    return locateImpl(F, side, sides, radiusCap, std::nullopt);
}

GermSectionMatch locateSeriesAtRadius(const APoly2& F, int side,
                                      const GermSideSeries& sides,
                                      const Rat& radius) {
    return locateImpl(F, side, sides, std::nullopt, radius);
}

// ---------------------------------------------------------------------------
// Branches at infinity

Poly2 chartNumerator(const Poly2& C, int chart, int degree) {
    Poly2 out;
    for (int j = 0; j <= C.degY(); ++j) {
        const QPoly& q = C.yCoeff(j);
        for (int i = 0; i <= q.deg(); ++i) {
            Rat c = q.coeff(i);
            if (c == 0) continue;
            int wpow = degree - i - j;
            if (wpow < 0)
                throw InternalError("chartNumerator: degree too small");
            if (chart == 0)
                out.setCoeff(j, wpow, c);  // x^i y^j -> v^j w^{d-i-j}
            else
                out.setCoeff(i, wpow, c);  // -> u^i w^{d-i-j}
        }
    }
    return out;
}

InfinityGerm infinityGerm(const Poly2& C, const PointAtInfinity& p) {
    const int degree = C.totalDeg();
    const int chart = p.vertical ? 1 : 0;
    Field field;
    Alg t0;
    if (p.vertical) {
        field = fieldQ();
        t0 = Alg(field, Rat(0));
    } else if (p.slope.isRational()) {
        field = fieldQ();
        t0 = Alg(field, *p.slope.rational());
    } else {
        IntervalQ iv = p.slope.interval();
        field = FieldRep::make(p.slope.definingPoly(), iv.lo, iv.hi);
        t0 = Alg::gen(field);
    }
    Poly2 num = chartNumerator(C, chart, degree);
    APoly2 germ = APoly2::fromPoly2(field, num).shiftedU(t0);
    return InfinityGerm{chart, std::move(field), std::move(t0),
                        std::move(germ), degree};
}

namespace {

Rat termExpTimesRam(const SeriesTerm& t, int e) {
    Rat z = t.exp * e;
    if (z.get_den() != 1)
        throw InternalError("puiseux: exponent denominator exceeds ramification");
    return z;
}

// Does `minus` equal `plus` transported by w -> -w (odd ramification e)?
bool isOddTwin(const GermSeries& plus, const GermSeries& minus, int depth) {
    if (plus.ramification() != minus.ramification()) return false;
    const int e = plus.ramification();
    for (int k = 0; k < depth; ++k) {
        auto tp = termAt(plus, k), tm = termAt(minus, k);
        if (!tp && !tm) return true;
        if (!tp || !tm) return false;
        if (tp->exp != tm->exp) return false;
        Rat z = termExpTimesRam(*tp, e);
        bool flip = (z.get_num() % 2) != 0;
        // Expected minus coefficient: (-1)^z * plus coefficient.
        RealValue want(flip ? -tp->coeff : tp->coeff);
        RealValue have(tm->coeff);
        if (want != have) return false;
    }
    return true;
}

}  // namespace

BranchesAtInfinity puiseuxAtInfinity(const Poly2& C, const PointAtInfinity& p) {
    InfinityGerm ig = infinityGerm(C, p);
    if (ig.germ.isZero())
        throw InternalError("puiseuxAtInfinity: zero curve");
    if (!ig.germ.eval(algZero(ig.field), algZero(ig.field)).isZero())
        throw PointNotOnCurve("point is not at infinity of the curve: " + p.str());
    if (ig.germ.vFactorOrder() > 0)
        throw LineAtInfinityComponent(
            "completion contains the line at infinity");

    GermSideSeries plus = germSeriesAtOrigin(ig.germ, +1);
    GermSideSeries minus = germSeriesAtOrigin(ig.germ, -1);
    if (plus.totalWithMultiplicity != minus.totalWithMultiplicity)
        throw InternalError("puiseuxAtInfinity: side totals disagree");

    BranchesAtInfinity out;
    out.complexSeriesWithMultiplicity = plus.totalWithMultiplicity;

    auto finishBranch = [&](PuiseuxBranch& b) {
        for (GermSeries& e : b.ends) e.extend(4);
        const GermSeries& lead = b.ends.front();
        b.series = lead.terms();
        b.finiteSeries = lead.finite();
        auto tb = lead.tailExpBound();
        if (tb) b.truncationOrder = *tb;
        b.separationTerms = lead.separationTerms();
        out.branches.push_back(std::move(b));
    };

    // Separation depth for cross-side matching.
    int depth = 1;
    for (const GermSeries& s : plus.series)
        depth = std::max(depth, s.separationTerms());
    for (const GermSeries& s : minus.series)
        depth = std::max(depth, s.separationTerms());

    std::vector<bool> minusUsed(minus.series.size(), false);
    for (const GermSeries& ps : plus.series) {
        PuiseuxBranch b;
        b.center = p;
        b.chart = ig.chart;
        b.curveDegree = ig.degree;
        b.ramification = ps.ramification();
        if (ps.ramification() % 2 == 0) {
            b.realDirections = 1;
            b.ends = {ps};
            finishBranch(b);
            continue;
        }
        int match = -1;
        for (size_t k = 0; k < minus.series.size(); ++k) {
            if (minusUsed[k]) continue;
            if (minus.series[k].ramification() % 2 == 0) continue;
            if (isOddTwin(ps, minus.series[k], depth)) {
                if (match >= 0)
                    throw InternalError("puiseuxAtInfinity: ambiguous twin");
                match = static_cast<int>(k);
            }
        }
        if (match < 0)
            throw InternalError("puiseuxAtInfinity: unmatched odd branch");
        minusUsed[match] = true;
        b.realDirections = 2;
        b.ends = {ps, minus.series[match]};
        finishBranch(b);
    }
    for (size_t k = 0; k < minus.series.size(); ++k) {
        if (minusUsed[k]) continue;
        if (minus.series[k].ramification() % 2 != 0)
            throw InternalError("puiseuxAtInfinity: stray odd series");
        PuiseuxBranch b;
        b.center = p;
        b.chart = ig.chart;
        b.curveDegree = ig.degree;
        b.ramification = minus.series[k].ramification();
        b.realDirections = 1;
        b.ends = {minus.series[k]};
        finishBranch(b);
    }
    return out;
}

BranchLimit limitAlongEnd(const Poly2& f, const PuiseuxBranch& b,
                          int endIndex) {
    if (endIndex < 0 || endIndex >= static_cast<int>(b.ends.size()))
        throw InternalError("limitAlongEnd: bad end index");
    const GermSeries& end = b.ends[endIndex];
    const int n = f.totalDeg();
    if (n <= 0) {
        // Constant polynomial: limit is that constant, nothing varies.
        BranchLimit out;
        out.kind = LimitKind::Finite;
        out.value = RealValue(f.coeff(0, 0));
        out.monotone = false;
        return out;
    }
    Poly2 num = chartNumerator(f, b.chart, n);
    // Recover t0 over the end's base field.
    const Field& base = end.baseField();
    Alg t0 = b.center.vertical
                 ? Alg(base, Rat(0))
                 : (b.center.slope.isRational() ? Alg(base, *b.center.slope.rational())
                                                : Alg::gen(base));
    APoly2 A0 = APoly2::fromPoly2(base, num).shiftedU(t0);
    APoly2 A = end.liftGermFromBase(A0);

    const Rat capZ = Rat(n) * Rat(b.curveDegree) + 1;
    EndCompositionOrder o1 = ordAlongSeries(A, end, capZ);
    BranchLimit out;
    if (o1.identicallyZero) {
        out.kind = LimitKind::Finite;
        out.value = RealValue(Rat(0));
        out.monotone = false;
        return out;
    }
    const Rat sgn = (end.side() < 0 && n % 2 != 0) ? Rat(-1) : Rat(1);
    if (o1.ordW > n) {
        out.kind = LimitKind::Finite;
        out.value = RealValue(Rat(0));
        out.monotone = true;
        return out;
    }
    if (o1.ordW == n) {
        Alg c = o1.leadCoeff * sgn;
        out.kind = LimitKind::Finite;
        out.value = RealValue(c);
        // Monotone unless f is exactly c along the end, i.e. unless the
        // numerator of f - c vanishes along it.  That numerator is
        // A - c*v^n (v composes to side*z^e, so c*v^n composes to the
        // leading term leadCoeff*z^{e n} of A's composition).
        APoly2 cw(end.field());
        cw.setCoeff(0, n, c);
        EndCompositionOrder o2 = ordAlongSeries(A - cw, end, capZ);
        out.monotone = !o2.identicallyZero;
        return out;
    }
    int s = o1.leadCoeff.sign() * (sgn < 0 ? -1 : 1);
    out.kind = s > 0 ? LimitKind::PlusInfinity : LimitKind::MinusInfinity;
    out.monotone = true;
    return out;
}

int intersectionMultiplicityAtInfinity(const Poly2& C,
                                       const PointAtInfinity& p) {
    InfinityGerm ig = infinityGerm(C, p);
    if (ig.germ.isZero())
        throw InternalError("intersectionMultiplicityAtInfinity: zero curve");
    if (ig.germ.vFactorOrder() > 0)
        throw LineAtInfinityComponent(
            "completion contains the line at infinity");
    APoly s = ig.germ.sectionV(Rat(0));
    if (s.isZero())
        throw LineAtInfinityComponent(
            "completion contains the line at infinity");
    return s.lowestNonzero();
}

}  // namespace gradindex
