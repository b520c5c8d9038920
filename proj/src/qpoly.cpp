#include "stackcount/qpoly.hpp"

#include <sstream>

namespace stackcount {

QPoly QPoly::q(int power) {
    if (power < 0) throw DomainError("QPoly::q needs power >= 0");
    QPoly p;
    p.c.assign(power + 1, Rational(0));
    p.c[power] = 1;
    return p;
}

const Rational& QPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c.back();
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational a = c[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1);
        if (!unit || i == 0) os << rat_to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

QPoly operator*(const Rational& s, const QPoly& a) {
    if (s == 0) return QPoly();
    QPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

void poly_divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    quo = QPoly();
    rem = a;
    int db = b.degree();
    if (rem.degree() >= db) quo.c.assign(rem.degree() - db + 1, Rational(0));
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational f = rem.leading() / b.leading();
        quo.c[shift] = f;
        for (int i = 0; i <= db; ++i) rem.c[shift + i] -= f * b.c[i];
        rem.trim();
    }
    quo.trim();
}

QPoly poly_monic(const QPoly& a) {
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        poly_divrem(a, b, q, r);
        a = std::move(b);
        b = poly_monic(r);   // monic remainders keep coefficient growth tame
    }
    return poly_monic(a);
}

QPoly poly_adams(const QPoly& a, int n) {
    if (n < 1) throw DomainError("adams substitution needs n >= 1");
    if (a.is_zero()) return a;
    QPoly r;
    r.c.assign(static_cast<size_t>(a.degree()) * n + 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i * n] = a.c[i];
    return r;
}

QPoly poly_pow(const QPoly& a, int e) {
    if (e < 0) throw DomainError("negative power of a polynomial");
    QPoly r = QPoly::from_int(1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

QPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const size_t m = points.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("interpolation points must be distinct");
    QPoly acc;
    for (size_t i = 0; i < m; ++i) {
        QPoly basis = QPoly::from_int(1);
        Rational denom(1);
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            QPoly lin;   // q - x_j
            lin.c = {-points[j].first, Rational(1)};
            basis = basis * lin;
            denom *= points[i].first - points[j].first;
        }
        acc = acc + (points[i].second / denom) * basis;
    }
    return acc;
}

QRatFun::QRatFun(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den = QPoly::from_int(1);
        return;
    }
    QPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        QPoly q, r;
        poly_divrem(num, g, q, r);
        num = q;
        poly_divrem(den, g, q, r);
        den = q;
    }
    Rational lc = den.leading();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num = inv * num;
        den = inv * den;
    }
}

QRatFun QRatFun::q(int power) {
    if (power >= 0) return QRatFun(QPoly::q(power));
    return QRatFun(QPoly::from_int(1), QPoly::q(-power));
}

QRatFun QRatFun::from_rational(const Rational& r) { return QRatFun(QPoly(r)); }

std::string QRatFun::to_string() const {
    if (is_polynomial()) {
        if (den.c[0] == 1) return num.to_string();
        return "(" + num.to_string() + ")/" + rat_to_string(den.c[0]);
    }
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

bool operator==(const QRatFun& a, const QRatFun& b) {
    return a.num == b.num && a.den == b.den;   // canonical form makes this sound
}

QRatFun operator+(const QRatFun& a, const QRatFun& b) {
    return QRatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}

QRatFun operator-(const QRatFun& a) { return QRatFun(-a.num, a.den); }

QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }

QRatFun operator*(const QRatFun& a, const QRatFun& b) {
    return QRatFun(a.num * b.num, a.den * b.den);
}

QRatFun operator/(const QRatFun& a, const QRatFun& b) {
    if (b.is_zero()) throw DomainError("division by zero rational function");
    return QRatFun(a.num * b.den, a.den * b.num);
}

QRatFun ratfun_pow(const QRatFun& a, int e) {
    if (e < 0) {
        if (a.is_zero()) throw DomainError("negative power of zero");
        return ratfun_pow(QRatFun::from_int(1) / a, -e);
    }
    QRatFun r = QRatFun::from_int(1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

QRatFun adams_substitute(const QRatFun& f, int n) {
    return QRatFun(poly_adams(f.num, n), poly_adams(f.den, n));
}

QRatFun q_pochhammer(const QRatFun& base, int n) {
    if (n < 0) throw DomainError("q_pochhammer needs n >= 0");
    QRatFun r = QRatFun::from_int(1);
    QRatFun p = QRatFun::from_int(1);
    for (int i = 1; i <= n; ++i) {
        p = p * base;
        r = r * (QRatFun::from_int(1) - p);
    }
    return r;
}

Rational evaluate_at(const QRatFun& f, const Rational& x) {
    Rational d = f.den.eval(x);
    if (d == 0) throw PoleError("pole at q = " + rat_to_string(x));
    return f.num.eval(x) / d;
}

} // namespace stackcount
