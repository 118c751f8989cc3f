#include "tritile/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace tritile {

namespace {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

}  // namespace

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

double Rational::to_double() const {
    return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

std::pair<Int, Int> squarefree_decompose(const Int& q) {
    if (q < 0) throw std::domain_error("squarefree_decompose of negative integer");
    if (q == 0) return {0, 0};
    Int s = 1, f = 1, rest = q;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2 == 1) f *= p;
    }
    f *= rest;
    return {s, f};
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    Int rn = isqrt(q.num());
    Int rd = isqrt(q.den());
    if (rn * rn != q.num() || rd * rd != q.den()) return std::nullopt;
    return Rational(rn, rd);
}

QuadNum::QuadNum(Rational r, Rational s, long long d)
    : rat_(std::move(r)), irr_(std::move(s)), radicand_(d) {
    if (d < 0) throw std::domain_error("negative radicand");
    if (d == 0 || d == 1) {
        if (d == 1) rat_ += irr_;
        irr_ = Rational(0);
        radicand_ = 0;
    } else if (irr_.is_zero()) {
        radicand_ = 0;
    } else {
        auto [s2, f] = squarefree_decompose(Int(d));
        if (s2 != 1) {
            irr_ *= Rational(s2);
            radicand_ = static_cast<long long>(f);
            if (radicand_ == 1) {
                rat_ += irr_;
                irr_ = Rational(0);
                radicand_ = 0;
            }
        }
    }
}

int QuadNum::sign() const {
    int sr = rat_.sign();
    int si = irr_.sign();
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: compare rat^2 with irr^2 * d exactly.
    Rational lhs = rat_ * rat_;
    Rational rhs = irr_ * irr_ * Rational(radicand_);
    int c = (lhs - rhs).sign();
    if (c == 0) return 0;
    return c > 0 ? sr : si;
}

long long common_radicand(const QuadNum& a, const QuadNum& b) {
    if (a.is_rational()) return b.radicand();
    if (b.is_rational()) return a.radicand();
    if (a.radicand() != b.radicand())
        throw field_error("mixed radicands: sqrt(" + std::to_string(a.radicand()) +
                          ") vs sqrt(" + std::to_string(b.radicand()) + ")");
    return a.radicand();
}

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
    long long d = common_radicand(a, b);
    return QuadNum(a.rat_ + b.rat_, a.irr_ + b.irr_, d);
}
QuadNum operator-(const QuadNum& a, const QuadNum& b) {
    long long d = common_radicand(a, b);
    return QuadNum(a.rat_ - b.rat_, a.irr_ - b.irr_, d);
}
QuadNum operator*(const QuadNum& a, const QuadNum& b) {
    long long d = common_radicand(a, b);
    return QuadNum(a.rat_ * b.rat_ + a.irr_ * b.irr_ * Rational(d),
                   a.rat_ * b.irr_ + a.irr_ * b.rat_, d);
}
QuadNum operator/(const QuadNum& a, const QuadNum& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    long long d = common_radicand(a, b);
    // Multiply by the conjugate of b; the norm is rational and nonzero.
    Rational norm = b.rat_ * b.rat_ - b.irr_ * b.irr_ * Rational(d);
    if (norm.is_zero()) throw std::domain_error("division by zero norm");
    QuadNum conj(b.rat_, -b.irr_, d);
    QuadNum prod = a * conj;
    return QuadNum(prod.rat_ / norm, prod.irr_ / norm, prod.radicand_ == 0 ? d : prod.radicand_);
}

std::string QuadNum::str() const {
    std::string s = rat_.str();
    if (!irr_.is_zero()) {
        s += irr_.sign() > 0 ? "+" : "-";
        Rational m = irr_.sign() > 0 ? irr_ : -irr_;
        s += m.str() + "*sqrt(" + std::to_string(radicand_) + ")";
    }
    return s;
}

double QuadNum::to_double() const {
    return rat_.to_double() + irr_.to_double() * std::sqrt(static_cast<double>(radicand_));
}

QuadNum normalize_sqrt(const Rational& q) {
    if (q.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (q.is_zero()) return QuadNum();
    // sqrt(n/d) = sqrt(n*d)/d
    Int m = q.num() * q.den();
    auto [s, f] = squarefree_decompose(m);
    Rational coeff(s, q.den());
    if (f == 1) return QuadNum(coeff);
    return QuadNum(Rational(0), coeff, static_cast<long long>(f));
}

std::optional<QuadNum> sqrt_in_field(const QuadNum& q, long long d) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return QuadNum();
    if (q.is_rational()) {
        if (auto r = rational_sqrt(q.rat())) return QuadNum(*r);
        if (d >= 2) {
            // Maybe sqrt(q) = y*sqrt(d) with y rational.
            if (auto y = rational_sqrt(q.rat() / Rational(d)))
                return QuadNum(Rational(0), *y, d);
        }
        return std::nullopt;
    }
    // q = e + f*sqrt(d); seek x + y*sqrt(d) with x^2 + y^2 d = e, 2xy = f.
    const Rational& e = q.rat();
    const Rational& f = q.irr();
    Rational disc = e * e - f * f * Rational(q.radicand());
    auto s = rational_sqrt(disc);
    if (!s) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rational t = pick == 0 ? (e + *s) / Rational(2) : (e - *s) / Rational(2);
        auto x = rational_sqrt(t);
        if (!x || x->is_zero()) continue;
        Rational y = f / (Rational(2) * *x);
        QuadNum cand(*x, y, q.radicand());
        if (cand * cand == q && cand.sign() >= 0) return cand;
        cand = -cand;
        if (cand * cand == q && cand.sign() >= 0) return cand;
    }
    return std::nullopt;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad number '" + s + "': " + why);
    }

    Int parse_int() {
        size_t start = pos;
        if (!eof() && (peek() == '-' || peek() == '+')) ++pos;
        size_t digits = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == digits) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    Rational parse_rat() {
        Int n = parse_int();
        if (!eof() && peek() == '/') {
            ++pos;
            Int d = parse_int();
            if (d <= 0) fail("denominator must be positive");
            return Rational(n, d);
        }
        return Rational(n);
    }

    bool consume(const std::string& word) {
        if (s.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }
};

}  // namespace

Rational parse_rational(const std::string& text) {
    Parser p{text};
    Rational r = p.parse_rat();
    if (!p.eof()) p.fail("trailing characters");
    return r;
}

QuadNum parse_quadnum(const std::string& text) {
    Parser p{text};
    Rational r = p.parse_rat();
    if (p.eof()) return QuadNum(r);
    int sgn;
    if (p.consume("+")) {
        sgn = 1;
    } else if (p.consume("-")) {
        sgn = -1;
    } else {
        p.fail("expected '+' or '-'");
    }
    Rational coeff = p.parse_rat();
    if (coeff.sign() < 0) p.fail("surd coefficient must not restate the sign");
    if (!p.consume("*sqrt(")) p.fail("expected '*sqrt('");
    Int d = p.parse_int();
    if (d < 0) p.fail("negative radicand");
    if (!p.consume(")")) p.fail("expected ')'");
    if (!p.eof()) p.fail("trailing characters");
    if (sgn < 0) coeff = -coeff;
    // Route through normalize_sqrt so non-square-free radicands canonicalize.
    QuadNum root = normalize_sqrt(Rational(d));
    return QuadNum(r) + QuadNum(coeff) * root;
}

}  // namespace tritile
