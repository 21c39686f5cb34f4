#include "gradindex/poly2.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

#include "gradindex/errors.hpp"

namespace gradindex {

// --- basics -----------------------------------------------------------------

void Poly2::trim() {
    while (!yc_.empty() && yc_.back().isZero()) yc_.pop_back();
}

Poly2::Poly2(const Rat& c) {
    if (c != 0) yc_.push_back(QPoly(c));
}

Poly2::Poly2(const QPoly& xOnly) {
    if (!xOnly.isZero()) yc_.push_back(xOnly);
}

Poly2 Poly2::x() { return Poly2(QPoly::var()); }

Poly2 Poly2::y() {
    Poly2 p;
    p.yc_ = {QPoly(), QPoly(Rat(1))};
    return p;
}

Poly2 Poly2::fromYCoeffs(std::vector<QPoly> yc) {
    Poly2 p;
    p.yc_ = std::move(yc);
    p.trim();
    return p;
}

int Poly2::degX() const {
    int d = -1;
    for (const auto& c : yc_) d = std::max(d, c.deg());
    return d;
}

int Poly2::totalDeg() const {
    int d = -1;
    for (int k = 0; k < (int)yc_.size(); ++k)
        if (!yc_[k].isZero()) d = std::max(d, k + yc_[k].deg());
    return d;
}

QPoly Poly2::yCoeff(int k) const {
    return (k >= 0 && k < (int)yc_.size()) ? yc_[k] : QPoly();
}

Rat Poly2::coeff(int i, int j) const { return yCoeff(j).coeff(i); }

void Poly2::setCoeff(int i, int j, const Rat& v) {
    if (i < 0 || j < 0) throw InternalError("negative exponent");
    if (j >= (int)yc_.size()) {
        if (v == 0) return;
        yc_.resize(j + 1);
    }
    yc_[j].setCoeff(i, v);
    trim();
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r;
    r.yc_.resize(std::max(yc_.size(), o.yc_.size()));
    for (std::size_t k = 0; k < r.yc_.size(); ++k) {
        if (k < yc_.size()) r.yc_[k] = r.yc_[k] + yc_[k];
        if (k < o.yc_.size()) r.yc_[k] = r.yc_[k] + o.yc_[k];
    }
    r.trim();
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& c : r.yc_) c = -c;
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    if (isZero() || o.isZero()) return Poly2();
    Poly2 r;
    r.yc_.resize(yc_.size() + o.yc_.size() - 1);
    for (std::size_t i = 0; i < yc_.size(); ++i) {
        if (yc_[i].isZero()) continue;
        for (std::size_t j = 0; j < o.yc_.size(); ++j)
            r.yc_[i + j] = r.yc_[i + j] + yc_[i] * o.yc_[j];
    }
    r.trim();
    return r;
}

Poly2 Poly2::operator*(const Rat& k) const {
    Poly2 r = *this;
    for (auto& c : r.yc_) c = c * k;
    r.trim();
    return r;
}

Poly2 Poly2::dx() const {
    Poly2 r = *this;
    for (auto& c : r.yc_) c = c.derivative();
    r.trim();
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r;
    if (yc_.size() <= 1) return r;
    r.yc_.resize(yc_.size() - 1);
    for (std::size_t k = 1; k < yc_.size(); ++k)
        r.yc_[k - 1] = yc_[k] * Rat(static_cast<long>(k));
    r.trim();
    return r;
}

Rat Poly2::eval(const Rat& x0, const Rat& y0) const {
    Rat acc(0);
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it) acc = acc * y0 + it->eval(x0);
    return acc;
}

IntervalQ Poly2::eval(const IntervalQ& x0, const IntervalQ& y0) const {
    IntervalQ acc(Rat(0));
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it) acc = acc * y0 + it->eval(x0);
    return acc;
}

QPoly Poly2::evalX(const Rat& x0) const {
    std::vector<Rat> c;
    c.reserve(yc_.size());
    for (const auto& p : yc_) c.push_back(p.eval(x0));
    return QPoly(std::move(c));
}

QPoly Poly2::evalY(const Rat& y0) const {
    QPoly acc;
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it) acc = acc * y0 + *it;
    return acc;
}

Poly2 Poly2::swapXY() const {
    Poly2 r;
    for (int j = 0; j < (int)yc_.size(); ++j)
        for (int i = 0; i <= yc_[j].deg(); ++i)
            if (yc_[j].coeff(i) != 0) r.setCoeff(j, i, yc_[j].coeff(i));
    return r;
}

Poly2 composeQ(const QPoly& p, const Poly2& inner) {
    Poly2 acc;
    for (int k = p.deg(); k >= 0; --k) acc = acc * inner + Poly2(p.coeff(k));
    return acc;
}

Poly2 Poly2::compose(const Poly2& px, const Poly2& py) const {
    Poly2 acc;
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it) acc = acc * py + composeQ(*it, px);
    return acc;
}

Poly2 Poly2::pow(int e) const {
    if (e < 0) throw InternalError("negative power");
    Poly2 r(Rat(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly2 Poly2::homogeneousPart(int k) const {
    Poly2 r;
    for (int j = 0; j < (int)yc_.size() && j <= k; ++j) {
        Rat c = yc_[j].coeff(k - j);
        if (c != 0) r.setCoeff(k - j, j, c);
    }
    return r;
}

bool Poly2::isHomogeneous() const {
    if (isZero()) return true;
    return homogeneousPart(totalDeg()) == *this;
}

QPoly Poly2::contentY() const {
    QPoly g;
    for (const auto& c : yc_) g = QPoly::gcd(g, c);
    return g;
}

Poly2 Poly2::primitivePartY() const {
    if (isZero()) return Poly2();
    QPoly g = contentY();
    Poly2 r = *this;
    for (auto& c : r.yc_) c = c.isZero() ? c : c.exactDiv(g);
    return r;
}

Poly2 Poly2::primitivePartZ() const {
    if (isZero()) return Poly2();
    Int den(1);
    for (const auto& p : yc_)
        for (const auto& v : p.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    Int g(0);
    for (const auto& p : yc_)
        for (const auto& v : p.coeffs()) {
            Int num = v.get_num() * (den / v.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
    Rat factor(den, g);
    factor.canonicalize();
    return *this * factor;
}

namespace {

// Leading coefficient in graded-lex order (x before y).
Rat leadCoeffGL(const Poly2& p) {
    if (p.isZero()) return Rat(0);
    int d = p.totalDeg();
    for (int i = d; i >= 0; --i) {
        Rat c = p.coeff(i, d - i);
        if (c != 0) return c;
    }
    throw InternalError("inconsistent total degree");
}

// Pseudo-remainder of a by b with y as the main variable.
Poly2 pseudoRemY(Poly2 r, const Poly2& b) {
    int d = b.degY();
    QPoly lb = b.yCoeff(d);
    while (!r.isZero() && r.degY() >= d) {
        int k = r.degY() - d;
        QPoly la = r.yCoeff(r.degY());
        Poly2 shift = Poly2::y().pow(k) * Poly2(la);
        r = r * Poly2(lb) - b * shift;
    }
    return r;
}

}  // namespace

Poly2 Poly2::gcd(const Poly2& a, const Poly2& b) {
    auto normalize = [](Poly2 p) {
        if (p.isZero()) return p;
        p = p.primitivePartZ();
        if (leadCoeffGL(p) < 0) p = -p;
        return p;
    };
    if (a.isZero()) return normalize(b);
    if (b.isZero()) return normalize(a);
    QPoly contentGcd = QPoly::gcd(a.contentY(), b.contentY());
    Poly2 u = a.primitivePartY();
    Poly2 v = b.primitivePartY();
    if (u.degY() < v.degY()) std::swap(u, v);
    while (!v.isZero()) {
        Poly2 r = pseudoRemY(u, v);
        if (!r.isZero()) r = r.primitivePartY().primitivePartZ();
        u = std::move(v);
        v = std::move(r);
    }
    return normalize(Poly2(contentGcd) * u);
}

namespace {

// Exact division, valid when the divisor divides evenly (throws otherwise).
Poly2 divExactY(const Poly2& a, const Poly2& b) {
    if (b.isZero()) throw InternalError("division by zero polynomial");
    if (a.isZero()) return Poly2();
    Poly2 r = a, q;
    int d = b.degY();
    QPoly lb = b.yCoeff(d);
    while (!r.isZero() && r.degY() >= d) {
        int k = r.degY() - d;
        QPoly qk = r.yCoeff(r.degY()).exactDiv(lb);
        Poly2 piece = Poly2::y().pow(k) * Poly2(qk);
        q = q + piece;
        r = r - b * piece;
    }
    if (!r.isZero()) throw InternalError("inexact bivariate division");
    return q;
}

}  // namespace

Poly2 Poly2::squarefreePart() const {
    if (isZero()) return Poly2();
    QPoly content = contentY();
    Poly2 pp = primitivePartY();
    Poly2 result(content.squarefreePart());
    if (pp.degY() > 0) {
        Poly2 g = gcd(pp, pp.dy());
        result = result * divExactY(pp, g);
    } else {
        result = result * pp;  // constant 1 after content removal
    }
    return result;
}

// --- determinant and resultants ----------------------------------------------

QPoly qpolyMatDet(std::vector<std::vector<QPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return QPoly(Rat(1));
    for (const auto& row : m)
        if (row.size() != n) throw InternalError("determinant of non-square matrix");
    int sign = 1;
    QPoly prev(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].isZero()) ++pivot;
        if (pivot == n) return QPoly();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exactDiv(prev);
            m[i][k] = QPoly();
        }
        prev = m[k][k];
    }
    QPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

QPoly resY(const Poly2& a, const Poly2& b) {
    if (a.isZero() || b.isZero()) return QPoly();
    const int m = a.degY(), n = b.degY();
    if (m == 0 && n == 0) return QPoly(Rat(1));
    std::vector<std::vector<QPoly>> s(m + n, std::vector<QPoly>(m + n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.yCoeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.yCoeff(n - j);
    return qpolyMatDet(std::move(s));
}

QPoly resX(const Poly2& a, const Poly2& b) { return resY(a.swapXY(), b.swapXY()); }

// --- printer ------------------------------------------------------------------

std::string Poly2::str() const {
    if (isZero()) return "0";
    struct Term {
        int i, j;
        Rat c;
    };
    std::vector<Term> terms;
    for (int j = 0; j < (int)yc_.size(); ++j)
        for (int i = 0; i <= yc_[j].deg(); ++i)
            if (yc_[j].coeff(i) != 0) terms.push_back({i, j, yc_[j].coeff(i)});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
        return a.i > b.i;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (first) {
            if (t.c < 0) os << "-";
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        Rat av = ratAbs(t.c);
        std::string mono;
        if (t.i > 0) {
            mono += "x";
            if (t.i > 1) mono += "^" + std::to_string(t.i);
        }
        if (t.j > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (t.j > 1) mono += "^" + std::to_string(t.j);
        }
        if (mono.empty())
            os << ratStr(av);
        else if (av == 1)
            os << mono;
        else
            os << ratStr(av) << "*" << mono;
    }
    return os.str();
}

// --- parser -------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Num, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Rat num;
    char var = 0;
    std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < text.size() && text[i] == '/') {
                std::size_t slash = i;
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("malformed rational literal", slash);
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            auto q = ratParse(text.substr(start, i - start));
            if (!q) throw ParseError("malformed rational literal", start);
            out.push_back({Token::Num, *q, 0, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
            if (i - start > 1)
                throw ParseError("unknown symbol '" + text.substr(start, i - start) + "'", start);
            out.push_back({Token::Var, Rat(0), c, start});
            continue;
        }
        ++i;
        switch (c) {
            case '+': out.push_back({Token::Plus, Rat(0), 0, start}); break;
            case '-': out.push_back({Token::Minus, Rat(0), 0, start}); break;
            case '*': out.push_back({Token::Star, Rat(0), 0, start}); break;
            case '^': out.push_back({Token::Caret, Rat(0), 0, start}); break;
            case '(': out.push_back({Token::LParen, Rat(0), 0, start}); break;
            case ')': out.push_back({Token::RParen, Rat(0), 0, start}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Token::End, Rat(0), 0, text.size()});
    return out;
}

// Parsing accumulates into a sparse polynomial in (x, y, s).
struct TriPoly {
    std::map<std::array<int, 3>, Rat> t;

    static TriPoly constant(const Rat& c) {
        TriPoly p;
        if (c != 0) p.t[{0, 0, 0}] = c;
        return p;
    }
    static TriPoly variable(int which) {
        TriPoly p;
        std::array<int, 3> m{0, 0, 0};
        m[which] = 1;
        p.t[m] = Rat(1);
        return p;
    }
    TriPoly operator+(const TriPoly& o) const {
        TriPoly r = *this;
        for (const auto& [m, c] : o.t) {
            auto& v = r.t[m];
            v += c;
            if (v == 0) r.t.erase(m);
        }
        return r;
    }
    TriPoly operator-() const {
        TriPoly r = *this;
        for (auto& [m, c] : r.t) c = -c;
        return r;
    }
    TriPoly operator-(const TriPoly& o) const { return *this + (-o); }
    TriPoly operator*(const TriPoly& o) const {
        TriPoly r;
        for (const auto& [m1, c1] : t)
            for (const auto& [m2, c2] : o.t) {
                std::array<int, 3> m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
                auto& v = r.t[m];
                v += c1 * c2;
                if (v == 0) r.t.erase(m);
            }
        return r;
    }
    TriPoly powInt(int e) const {
        TriPoly r = constant(Rat(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

class Parser {
   public:
    Parser(const std::string& text, bool allowS) : toks_(lex(text)), allowS_(allowS) {}

    TriPoly run() {
        if (toks_.front().kind == Token::End) throw ParseError("empty expression", 0);
        TriPoly p = expr();
        if (cur().kind != Token::End) throw ParseError("unexpected trailing input", cur().pos);
        return p;
    }

   private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    bool allowS_;

    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    TriPoly expr() {
        bool neg = false;
        if (cur().kind == Token::Minus) {
            neg = true;
            advance();
        } else if (cur().kind == Token::Plus) {
            advance();
        }
        TriPoly acc = term();
        if (neg) acc = -acc;
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            TriPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    TriPoly term() {
        TriPoly acc = factor();
        while (true) {
            if (cur().kind == Token::Star) {
                advance();
                acc = acc * factor();
            } else if (cur().kind == Token::Num || cur().kind == Token::Var ||
                       cur().kind == Token::LParen) {
                throw ParseError("missing '*' operator", cur().pos);
            } else {
                break;
            }
        }
        return acc;
    }

    TriPoly factor() {
        if (cur().kind == Token::Minus) {
            advance();
            return -factor();
        }
        return power();
    }

    TriPoly power() {
        TriPoly base = atom();
        if (cur().kind != Token::Caret) return base;
        advance();
        if (cur().kind != Token::Num) throw ParseError("expected exponent", cur().pos);
        const Rat& e = cur().num;
        if (e.get_den() != 1 || e < 0 || e > 4096)
            throw ParseError("exponent must be a nonnegative integer", cur().pos);
        int exp = static_cast<int>(e.get_num().get_si());
        advance();
        if (cur().kind == Token::Caret) throw ParseError("chained '^' is not allowed", cur().pos);
        return base.powInt(exp);
    }

    TriPoly atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Num:
                advance();
                return TriPoly::constant(t.num);
            case Token::Var: {
                int idx;
                if (t.var == 'x')
                    idx = 0;
                else if (t.var == 'y')
                    idx = 1;
                else if (t.var == 's' && allowS_)
                    idx = 2;
                else
                    throw ParseError(std::string("unknown variable '") + t.var + "'", t.pos);
                advance();
                return TriPoly::variable(idx);
            }
            case Token::LParen: {
                advance();
                TriPoly inner = expr();
                if (cur().kind != Token::RParen) throw ParseError("expected ')'", cur().pos);
                advance();
                return inner;
            }
            default:
                throw ParseError("expected a value", t.pos);
        }
    }
};

}  // namespace

Poly2 parsePoly2(const std::string& text) {
    TriPoly p = Parser(text, /*allowS=*/false).run();
    Poly2 out;
    for (const auto& [m, c] : p.t) out.setCoeff(m[0], m[1], c);
    return out;
}

PolyFamily parseFamily(const std::string& text) {
    TriPoly p = Parser(text, /*allowS=*/true).run();
    PolyFamily fam;
    for (const auto& [m, c] : p.t) {
        if (m[2] == 0)
            fam.base.setCoeff(m[0], m[1], c);
        else if (m[2] == 1)
            fam.dir.setCoeff(m[0], m[1], c);
        else
            throw ParseError("family must be affine in s", 0);
    }
    return fam;
}

}  // namespace gradindex
