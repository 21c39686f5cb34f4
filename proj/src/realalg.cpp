#include "gradindex/realalg.hpp"

#include <algorithm>

#include "gradindex/errors.hpp"
#include "gradindex/poly2.hpp"

namespace gradindex {

namespace {

// Extended Euclid over Q[x]: monic g = gcd(a, b) with u*a + v*b = g.
void extGcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
    QPoly r0 = a, r1 = b;
    QPoly s0(Rat(1)), s1, t0, t1(Rat(1));
    while (!r1.isZero()) {
        QPolyDivRem dr = r0.divRem(r1);
        QPoly r2 = dr.r;
        QPoly s2 = s0 - dr.q * s1;
        QPoly t2 = t0 - dr.q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.isZero()) {
        g = u = v = QPoly();
        return;
    }
    Rat c = Rat(1) / r0.lc();
    g = r0 * c;
    u = s0 * c;
    v = t0 * c;
}

}  // namespace

// --- FieldRep -----------------------------------------------------------------

const Rat& FieldRep::rationalValue() const {
    if (!rational_) throw InternalError("rationalValue of irrational field");
    return *rational_;
}

Field FieldRep::rational(const Rat& r) {
    auto f = std::shared_ptr<FieldRep>(new FieldRep());
    // z - r, cleared to integer coefficients.
    f->t_ = QPoly({-r, Rat(1)}).primitivePart();
    f->lo_ = f->hi_ = r;
    f->rational_ = r;
    f->chain_ = SturmChain::of(f->t_);
    return f;
}

Field FieldRep::make(const QPoly& t, const Rat& lo, const Rat& hi) {
    QPoly t1 = t.primitivePart();
    if (t1.deg() < 1) throw InternalError("field polynomial must be nonconstant");
    if (t1.lc() < 0) t1 = -t1;
    if (QPoly::gcd(t1, t1.derivative()).deg() != 0)
        throw InternalError("field polynomial must be squarefree");
    SturmChain chain = SturmChain::of(t1);
    if (!(lo < hi) || t1.eval(lo) == 0 || t1.eval(hi) == 0 || chain.countRoots(lo, hi) != 1)
        throw InternalError("interval does not isolate a field generator");
    // Exact rational-root detection (see isolateRealRoots for the bound).
    IsolatedRoot r{t1, 1, lo, hi};
    Rat l = ratAbs(Rat(t1.lc()));
    refineRoot(r, Rat(1) / (l * l + 1));
    if (!r.isExact()) {
        Rat s = simplestInInterval(r.lo, r.hi);
        if (t1.eval(s) == 0) r.lo = r.hi = s;
    }
    if (r.isExact()) return rational(r.lo);
    auto f = std::shared_ptr<FieldRep>(new FieldRep());
    f->t_ = t1;
    f->lo_ = r.lo;
    f->hi_ = r.hi;
    f->chain_ = std::move(chain);
    return f;
}

Field FieldRep::ofRoot(const IsolatedRoot& r) {
    if (r.isExact()) return rational(r.lo);
    return make(r.factor, r.lo, r.hi);
}

void FieldRep::refine() const {
    if (rational_) return;
    Rat mid = (lo_ + hi_) / 2;
    if (t_.eval(mid) == 0)
        throw InternalError("rational root escaped detection in field generator");
    if (chain_.countRoots(lo_, mid) == 1)
        hi_ = mid;
    else
        lo_ = mid;
}

void FieldRep::refineBelow(const Rat& width) const {
    while (hi_ - lo_ >= width) {
        if (rational_) return;
        refine();
    }
}

// --- Alg ------------------------------------------------------------------------

Alg::Alg(Field f, const Rat& value) : f_(std::move(f)), rep_(QPoly(value)) {}

Alg::Alg(Field f, QPoly rep) : f_(std::move(f)), rep_(std::move(rep)) { reduce(); }

Alg Alg::gen(const Field& f) { return Alg(f, QPoly::var()); }

void Alg::reduce() {
    if (!f_) throw InternalError("Alg without a field");
    if (rep_.deg() >= f_->poly().deg()) rep_ = rep_.divRem(f_->poly()).r;
}

bool Alg::isZero() const {
    if (rep_.isZero()) return true;
    if (f_->isRational()) return rep_.eval(f_->rationalValue()) == 0;
    QPoly g = QPoly::gcd(rep_, f_->poly());
    if (g.deg() == 0) return false;
    // Roots of divisors of T never hit the interval endpoints.
    IntervalQ iv = f_->interval();
    return SturmChain::of(g).countRoots(iv.lo, iv.hi) == 1;
}

int Alg::sign() const {
    if (f_->isRational()) return sgn(rep_.eval(f_->rationalValue()));
    if (isZero()) return 0;
    while (true) {
        IntervalQ iv = rep_.eval(f_->interval());
        int s = iv.definiteSign();
        if (s != 0) return s;
        f_->refine();
    }
}

namespace {
void checkSameField(const Field& a, const Field& b) {
    if (a.get() != b.get()) throw InternalError("mixing elements of different fields");
}
}  // namespace

Alg Alg::operator+(const Alg& o) const {
    checkSameField(f_, o.f_);
    return Alg(f_, rep_ + o.rep_);
}

Alg Alg::operator-(const Alg& o) const {
    checkSameField(f_, o.f_);
    return Alg(f_, rep_ - o.rep_);
}

Alg Alg::operator-() const { return Alg(f_, -rep_); }

Alg Alg::operator*(const Alg& o) const {
    checkSameField(f_, o.f_);
    return Alg(f_, rep_ * o.rep_);
}

Alg Alg::operator+(const Rat& k) const { return Alg(f_, rep_ + QPoly(k)); }

Alg Alg::operator*(const Rat& k) const { return Alg(f_, rep_ * k); }

Alg Alg::inverse() const {
    if (isZero()) throw InternalError("inverse of zero");
    if (f_->isRational()) return Alg(f_, Rat(1) / rep_.eval(f_->rationalValue()));
    QPoly g = QPoly::gcd(rep_, f_->poly());
    QPoly modulus = g.deg() == 0 ? f_->poly() : f_->poly().exactDiv(g);
    QPoly gg, u, v;
    extGcd(rep_, modulus, gg, u, v);
    if (gg.deg() != 0) throw InternalError("inverse: representative not a unit");
    return Alg(f_, u * (Rat(1) / gg.coeff(0)));
}

Alg Alg::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Alg r(f_, Rat(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::optional<Rat> Alg::asRational() const {
    if (f_->isRational()) return rep_.eval(f_->rationalValue());
    if (rep_.deg() <= 0) return rep_.isZero() ? Rat(0) : rep_.coeff(0);
    RealValue rv(*this);
    return rv.rational();
}

IntervalQ Alg::enclosure(const Rat& width) const {
    if (f_->isRational()) return IntervalQ(rep_.eval(f_->rationalValue()));
    while (true) {
        IntervalQ iv = rep_.eval(f_->interval());
        if (iv.width() < width) return iv;
        f_->refine();
    }
}

double Alg::approx() const {
    return ratApprox(enclosure(Rat(1) / ratPow(Rat(2), 48)).mid());
}

// --- APoly ----------------------------------------------------------------------

APoly::APoly(Field f, std::vector<Alg> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& a : c_) checkSameField(f_, a.field());
    trim();
}

APoly APoly::fromQPoly(const Field& f, const QPoly& p) {
    std::vector<Alg> c;
    for (int k = 0; k <= p.deg(); ++k) c.emplace_back(f, p.coeff(k));
    return APoly(f, std::move(c));
}

APoly APoly::var(const Field& f) {
    return APoly(f, {Alg(f, Rat(0)), Alg(f, Rat(1))});
}

void APoly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Alg APoly::coeff(int k) const {
    if (k < 0 || k >= (int)c_.size()) return Alg(f_, Rat(0));
    return c_[k];
}

const Alg& APoly::lc() const {
    if (c_.empty()) throw InternalError("lc of zero polynomial");
    return c_.back();
}

void APoly::setCoeff(int k, const Alg& v) {
    checkSameField(f_, v.field());
    if (k < 0) throw InternalError("negative exponent");
    if (k >= (int)c_.size()) {
        if (v.isZero()) return;
        c_.resize(k + 1, Alg(f_, Rat(0)));
    }
    c_[k] = v;
    trim();
}

int APoly::lowestNonzero() const {
    for (int k = 0; k < (int)c_.size(); ++k)
        if (!c_[k].isZero()) return k;
    return -1;
}

APoly APoly::operator+(const APoly& o) const {
    checkSameField(f_, o.f_);
    std::vector<Alg> c(std::max(c_.size(), o.c_.size()), Alg(f_, Rat(0)));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < c_.size()) c[k] = c[k] + c_[k];
        if (k < o.c_.size()) c[k] = c[k] + o.c_[k];
    }
    return APoly(f_, std::move(c));
}

APoly APoly::operator-(const APoly& o) const { return *this + (-o); }

APoly APoly::operator-() const {
    APoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

APoly APoly::operator*(const APoly& o) const {
    checkSameField(f_, o.f_);
    if (isZero() || o.isZero()) return APoly(f_);
    std::vector<Alg> c(c_.size() + o.c_.size() - 1, Alg(f_, Rat(0)));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return APoly(f_, std::move(c));
}

APoly APoly::operator*(const Alg& k) const {
    APoly r = *this;
    for (auto& a : r.c_) a = a * k;
    r.trim();
    return r;
}

bool APoly::operator==(const APoly& o) const {
    return (*this - o).isZero();
}

APoly APoly::derivative() const {
    if (c_.size() <= 1) return APoly(f_);
    std::vector<Alg> c;
    c.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        c.push_back(c_[k] * Rat(static_cast<long>(k)));
    return APoly(f_, std::move(c));
}

Alg APoly::eval(const Alg& x) const {
    Alg acc(f_, Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Alg APoly::eval(const Rat& x) const {
    Alg acc(f_, Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

APoly APoly::divRem(const APoly& divisor, APoly* remOut) const {
    if (divisor.isZero()) throw InternalError("division by zero polynomial");
    APoly q(f_), r = *this;
    int d = divisor.deg();
    Alg inv = divisor.lc().inverse();
    while (!r.isZero() && r.deg() >= d) {
        int k = r.deg() - d;
        Alg factor = r.lc() * inv;
        q.setCoeff(k, factor);
        APoly sub(f_);
        for (int j = 0; j <= d; ++j) sub.setCoeff(k + j, divisor.coeff(j) * factor);
        r = r - sub;
        if (!r.isZero() && r.deg() >= d + k) throw InternalError("division failed to reduce");
    }
    if (remOut) *remOut = r;
    return q;
}

APoly APoly::monic() const {
    if (isZero()) return *this;
    return *this * lc().inverse();
}

APoly APoly::shifted(const Alg& a) const {
    // Horner: p(x + a) built from the top coefficient down.
    APoly res(f_);
    APoly xa = var(f_) + APoly(f_, std::vector<Alg>{a});
    for (int k = deg(); k >= 0; --k)
        res = res * xa + APoly(f_, std::vector<Alg>{coeff(k)});
    return res;
}

APoly APoly::gcd(APoly a, APoly b) {
    while (!b.isZero()) {
        APoly r(a.field());
        a.divRem(b, &r);
        a = std::move(b);
        b = r.isZero() ? std::move(r) : r.monic();
    }
    return a.monic();
}

APoly APoly::squarefreePart() const {
    if (isZero() || deg() == 0) return *this;
    APoly g = gcd(*this, derivative());
    if (g.deg() == 0) return monic();
    APoly r(f_);
    APoly q = divRem(g, &r);
    if (!r.isZero()) throw InternalError("squarefree division left a remainder");
    return q.monic();
}

// --- real root isolation over a field ---------------------------------------------

namespace {

struct AChain {
    std::vector<APoly> seq;

    static AChain of(const APoly& p) {
        AChain s;
        if (p.isZero()) return s;
        // Scale every element positively (positive scaling preserves sign
        // variation counts).
        auto posScale = [](const APoly& q) {
            Alg l = q.lc();
            Alg inv = l.inverse();
            return q * (l.sign() < 0 ? -inv : inv);
        };
        APoly a = posScale(p);
        s.seq.push_back(a);
        APoly b = p.derivative();
        if (b.isZero()) return s;
        b = posScale(b);
        while (!b.isZero()) {
            s.seq.push_back(b);
            APoly r(a.field());
            a.divRem(b, &r);
            r = -r;
            a = std::move(b);
            b = r.isZero() ? std::move(r) : posScale(r);
        }
        return s;
    }

    int variationsAt(const Rat& x) const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int sg = p.eval(x).sign();
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++var;
            prev = sg;
        }
        return var;
    }

    int variationsAtInf(int dir) const {  // dir = +1 or -1
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            if (p.isZero()) continue;
            int sg = p.lc().sign();
            if (dir < 0 && p.deg() % 2 == 1) sg = -sg;
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++var;
            prev = sg;
        }
        return var;
    }

    int countRoots(const Rat& lo, const Rat& hi) const {
        if (seq.empty()) throw InternalError("Sturm chain of zero polynomial");
        if (!(lo < hi)) return 0;
        if (seq[0].eval(lo).isZero() || seq[0].eval(hi).isZero())
            throw InternalError("Sturm endpoint is a root");
        return variationsAt(lo) - variationsAt(hi);
    }

    int countAll() const {
        if (seq.empty()) return 0;
        return variationsAtInf(-1) - variationsAtInf(+1);
    }
};

// Rational B with all real roots of p inside (-B, B) and p(+-B) != 0.
Rat rootBoundA(const APoly& p) {
    Rat maxMag(0);
    IntervalQ lcIv = p.lc().enclosure(Rat(1));
    while (lcIv.containsZero()) lcIv = p.lc().enclosure(lcIv.width() / 2);
    Rat lcLower = std::min(ratAbs(lcIv.lo), ratAbs(lcIv.hi));
    for (int k = 0; k < p.deg(); ++k) {
        IntervalQ iv = p.coeff(k).enclosure(Rat(1));
        maxMag = std::max(maxMag, iv.magUpper());
    }
    Rat b = ratCeil(maxMag / lcLower + 2);
    while (p.eval(b).isZero() || p.eval(-b).isZero()) b += 1;
    return b;
}

}  // namespace

int countRealRootsA(const APoly& p, const Rat& lo, const Rat& hi) {
    return AChain::of(p).countRoots(lo, hi);
}

int countRealRootsA(const APoly& p) { return AChain::of(p).countAll(); }

void refineRootA(const APoly& sqfree, AIsolatedRoot& r, const Rat& width) {
    if (r.isExact()) return;
    int sLo = sqfree.eval(r.lo).sign();
    while (!r.isExact() && r.hi - r.lo >= width) {
        Rat mid = (r.lo + r.hi) / 2;
        int sm = sqfree.eval(mid).sign();
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (sm == sLo)
            r.lo = mid;
        else
            r.hi = mid;
    }
}

std::vector<AIsolatedRoot> isolateRealRootsA(const APoly& p) {
    if (p.isZero()) throw InternalError("cannot isolate roots of the zero polynomial");
    std::vector<AIsolatedRoot> out;
    if (p.deg() == 0) return out;
    APoly q = p.squarefreePart();
    AChain chain = AChain::of(q);
    Rat bound = rootBoundA(q);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work;
    work.push_back({-bound, bound, chain.countRoots(-bound, bound)});
    if (work[0].count != chain.countAll()) throw InternalError("root bound too small");
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (q.eval(mid).isZero()) {
            out.push_back({mid, mid});
            Rat delta = (s.hi - s.lo) / 4;
            while (q.eval(mid - delta).isZero() || q.eval(mid + delta).isZero() ||
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
    // Exact rational-root detection.  Every rational root of q is a root of
    // the integer polynomial R(w) = Res_z(T(z), q~(z, w)), so its denominator
    // divides lc(R); once an interval is narrower than 1/lc(R)^2 the simplest
    // fraction inside is the only candidate.
    Rat lcBound(1);
    {
        const Field& f = q.field();
        if (f->isRational()) {
            std::vector<Rat> cc;
            for (int j = 0; j <= q.deg(); ++j)
                cc.push_back(q.coeff(j).rep().eval(f->rationalValue()));
            lcBound = ratAbs(Rat(QPoly(std::move(cc)).primitivePart().lc()));
        } else {
            Poly2 n;
            for (int j = 0; j <= q.deg(); ++j)
                n = n + Poly2(q.coeff(j).rep()) * Poly2::y().pow(j);
            QPoly r = resX(Poly2(f->poly()), n);
            if (r.isZero()) throw InternalError("vanishing norm of a squarefree polynomial");
            lcBound = ratAbs(Rat(r.primitivePart().lc()));
        }
    }
    for (auto& r : out) {
        if (r.isExact()) continue;
        refineRootA(q, r, Rat(1) / (lcBound * lcBound + 1));
        if (r.isExact()) continue;
        Rat s = simplestInInterval(r.lo, r.hi);
        if (q.eval(s).isZero()) r.lo = r.hi = s;
    }
    std::sort(out.begin(), out.end(),
              [](const AIsolatedRoot& a, const AIsolatedRoot& b) { return a.lo < b.lo; });
    return out;
}

// --- adjoinRoot --------------------------------------------------------------------

Alg embed(const Alg& a, const AdjoinResult& adj) {
    Alg acc(adj.field, Rat(0));
    const QPoly& rep = a.rep();
    for (int k = rep.deg(); k >= 0; --k) acc = acc * adj.oldGen + Rat(rep.coeff(k));
    return acc;
}

AdjoinResult adjoinRoot(const APoly& p, const AIsolatedRoot& root) {
    const Field& k = p.field();
    APoly sf = p.squarefreePart();

    if (root.isExact()) {
        if (!sf.eval(root.lo).isZero()) throw InternalError("claimed exact root is not a root");
        return {k, Alg::gen(k), Alg(k, root.lo)};
    }
    if (sf.eval(root.lo).isZero() || sf.eval(root.hi).isZero() ||
        countRealRootsA(sf, root.lo, root.hi) != 1)
        throw InternalError("interval does not isolate a root");

    if (k->isRational()) {
        std::vector<Rat> coeffs;
        for (int j = 0; j <= sf.deg(); ++j)
            coeffs.push_back(sf.coeff(j).rep().eval(k->rationalValue()));
        QPoly pq = QPoly(std::move(coeffs)).primitivePart();
        Field k2 = FieldRep::make(pq, root.lo, root.hi);
        return {k2, Alg(k2, k->rationalValue()), Alg::gen(k2)};
    }

    sf = sf.monic();
    AIsolatedRoot r = root;
    const QPoly& t = k->poly();

    // N(z, w) = sum_j rep_j(z) * w^j, where rep_j represents coeff_j of sf.
    Poly2 n;
    for (int j = 0; j <= sf.deg(); ++j)
        n = n + Poly2(sf.coeff(j).rep()) * Poly2::y().pow(j);

    for (int attempt = 0; attempt < 64; ++attempt) {
        Rat lambda = Rat((attempt / 2) + 1) * (attempt % 2 == 0 ? 1 : -1);
        // zeta = beta + lambda*theta, so substitute w -> w - lambda*z.
        Poly2 m = n.compose(Poly2::x(), Poly2::y() - Poly2::x() * lambda);
        QPoly t2 = resX(Poly2(t), m);
        if (t2.isZero()) continue;
        if (QPoly::gcd(t2, t2.derivative()).deg() != 0) continue;
        t2 = t2.primitivePart();

        // Isolating interval for zeta.
        SturmChain chain2 = SturmChain::of(t2);
        IntervalQ izeta(Rat(0));
        while (true) {
            if (r.isExact()) return adjoinRoot(sf, r);  // collapsed to a rational root
            IntervalQ itheta = k->interval();
            izeta = IntervalQ(r.lo, r.hi) + itheta * lambda;
            if (t2.eval(izeta.lo) != 0 && t2.eval(izeta.hi) != 0 &&
                chain2.countRoots(izeta.lo, izeta.hi) == 1)
                break;
            k->refine();
            refineRootA(sf, r, (r.hi - r.lo) / 2);
        }
        Field k2 = FieldRep::make(t2, izeta.lo, izeta.hi);
        if (k2->isRational())
            throw InternalError("primitive element collapsed to a rational");

        // Recover theta inside the new field: the unique common root of T(z)
        // and N(z, zeta - lambda*z).
        Alg zeta = Alg::gen(k2);
        APoly a1 = APoly::fromQPoly(k2, t);
        APoly zv = APoly::var(k2);
        APoly lin = -(zv * Alg(k2, lambda));  // zeta - lambda*z
        lin.setCoeff(0, lin.coeff(0) + zeta);
        APoly a2(k2);
        for (int j = n.degY(); j >= 0; --j)
            a2 = a2 * lin + APoly::fromQPoly(k2, n.yCoeff(j));
        APoly g = APoly::gcd(a1, a2);
        if (g.deg() != 1) continue;
        Alg theta2 = -g.coeff(0);  // g is monic: z - theta

        AdjoinResult res{k2, theta2, zeta - theta2 * lambda};
        // Internal checks: theta2 sits in the old isolating interval and the
        // adjoined value is a genuine root.
        IntervalQ itheta = k->interval();
        if ((theta2 + (-itheta.lo)).sign() <= 0 || (theta2 + (-itheta.hi)).sign() >= 0)
            throw InternalError("recovered generator left its interval");
        APoly lifted(k2);
        for (int j = 0; j <= sf.deg(); ++j) lifted.setCoeff(j, embed(sf.coeff(j), res));
        if (!lifted.eval(res.newRoot).isZero())
            throw InternalError("adjoined value is not a root");
        if ((res.newRoot + (-r.lo)).sign() <= 0 || (res.newRoot + (-r.hi)).sign() >= 0)
            throw InternalError("adjoined root left its interval");
        return res;
    }
    throw InternalError("no primitive element found");
}

// --- RealValue ---------------------------------------------------------------------

RealValue::RealValue() : RealValue(Rat(0)) {}

RealValue::RealValue(const Rat& r) {
    def_ = QPoly({-r, Rat(1)}).primitivePart();
    if (def_.lc() < 0) def_ = -def_;
    lo_ = hi_ = r;
    rational_ = r;
}

RealValue::RealValue(const Alg& a) {
    std::optional<Rat> quick;
    if (a.field()->isRational())
        quick = a.rep().eval(a.field()->rationalValue());
    else if (a.rep().deg() <= 0)
        quick = a.rep().isZero() ? Rat(0) : a.rep().coeff(0);
    if (quick) {
        *this = RealValue(*quick);
        return;
    }
    // Defining polynomial via Res_z(T(z), w - rep(z)).
    QPoly m = resX(Poly2(a.field()->poly()), Poly2::y() - Poly2(a.rep()));
    def_ = m.squarefreePart().primitivePart();
    if (def_.lc() < 0) def_ = -def_;
    SturmChain chain = SturmChain::of(def_);
    Rat w(1);
    while (true) {
        IntervalQ iv = a.enclosure(w);
        if (def_.eval(iv.lo) != 0 && def_.eval(iv.hi) != 0 &&
            chain.countRoots(iv.lo, iv.hi) == 1) {
            lo_ = iv.lo;
            hi_ = iv.hi;
            break;
        }
        w /= 2;
    }
    // Guaranteed rational detection (denominators of roots divide the lead).
    Rat l = ratAbs(Rat(def_.lc()));
    refineBelow(Rat(1) / (l * l + 1));
    if (!rational_) {
        Rat s = simplestInInterval(lo_, hi_);
        if (def_.eval(s) == 0) *this = RealValue(s);
    }
}

void RealValue::refineBelow(const Rat& width) const {
    if (rational_) return;
    SturmChain chain = SturmChain::of(def_);
    while (hi_ - lo_ >= width) {
        Rat mid = (lo_ + hi_) / 2;
        if (def_.eval(mid) == 0) {
            // The unique root in the interval turned out to be rational.
            lo_ = hi_ = mid;
            return;
        }
        if (chain.countRoots(lo_, mid) == 1)
            hi_ = mid;
        else
            lo_ = mid;
    }
}

double RealValue::approx() const {
    if (rational_) return ratApprox(*rational_);
    refineBelow(Rat(1) / ratPow(Rat(2), 48));
    return ratApprox((lo_ + hi_) / 2);
}

int RealValue::compare(const RealValue& o) const {
    if (rational_ && o.rational_)
        return *rational_ < *o.rational_ ? -1 : (*rational_ == *o.rational_ ? 0 : 1);
    if (rational_ || o.rational_) {
        // A rational never equals a value that survived rational detection.
        const RealValue& rv = rational_ ? o : *this;
        const Rat& s = rational_ ? *rational_ : *o.rational_;
        int flip = rational_ ? -1 : 1;
        while (true) {
            if (rv.lo_ >= s) return flip;
            if (rv.hi_ <= s) return -flip;
            if (rv.def_.eval(s) == 0)
                throw InternalError("rational root escaped detection in RealValue");
            rv.refineBelow((rv.hi_ - rv.lo_) / 2);
        }
    }
    // Both irrational: equal iff a shared defining factor has the shared root.
    QPoly g = QPoly::gcd(def_, o.def_);
    if (g.deg() >= 1) {
        Rat ilo = std::max(lo_, o.lo_), ihi = std::min(hi_, o.hi_);
        if (ilo < ihi && g.eval(ilo) != 0 && g.eval(ihi) != 0 &&
            SturmChain::of(g).countRoots(ilo, ihi) == 1)
            return 0;
        // Intersection endpoints are endpoints of one of the isolating
        // intervals, so they are never roots of g (g divides both defs)
        // unless the intersection is degenerate; refine and retry below.
    }
    while (true) {
        if (hi_ <= o.lo_) return -1;
        if (o.hi_ <= lo_) return 1;
        Rat ilo = std::max(lo_, o.lo_), ihi = std::min(hi_, o.hi_);
        if (g.deg() >= 1 && ilo < ihi && g.eval(ilo) != 0 && g.eval(ihi) != 0 &&
            SturmChain::of(g).countRoots(ilo, ihi) == 1)
            return 0;
        refineBelow((hi_ - lo_) / 2);
        o.refineBelow((o.hi_ - o.lo_) / 2);
    }
}

Field fieldQ() {
    static const Field q = FieldRep::rational(Rat(0));
    return q;
}

}  // namespace gradindex
