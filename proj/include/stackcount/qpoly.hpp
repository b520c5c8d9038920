#pragma once

#include <vector>
#include <string>

#include "stackcount/rational.hpp"

namespace stackcount {

/// Dense univariate polynomial over Q in the counting variable q.
/// Coefficients are stored ascending by degree and kept trimmed, so the
/// zero polynomial is the empty vector and degree() is then -1.
struct QPoly {
    std::vector<Rational> c;

    QPoly() = default;
    explicit QPoly(Rational constant) {
        if (constant != 0) c.push_back(std::move(constant));
    }

    static QPoly q(int power = 1);          // the monomial q^power, power >= 0
    static QPoly from_int(long v) { return QPoly(make_rational(v)); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rational& leading() const;
    void trim();

    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rational(0);
    }

    Rational eval(const Rational& x) const;
    std::string to_string() const;          // human form, e.g. "q^2 + q - 1"
};

bool operator==(const QPoly& a, const QPoly& b);
inline bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rational& s, const QPoly& a);

/// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
void poly_divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);

/// Monic gcd; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

QPoly poly_monic(const QPoly& a);

/// Substitutes q -> q^n (n >= 1); ring homomorphism on polynomials.
QPoly poly_adams(const QPoly& a, int n);

QPoly poly_pow(const QPoly& a, int e);

/// Exact rational interpolation: the unique polynomial of degree < points.size()
/// through the given (x, y) pairs; x values must be pairwise distinct.
QPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Rational function in q, the canonical form of every symbolic coefficient:
/// num/den reduced (gcd = 1) with monic den; zero is 0/1.  Negative powers of
/// q and values like 1/(1-q) live here.
struct QRatFun {
    QPoly num;
    QPoly den;

    QRatFun() : den(QPoly::from_int(1)) {}
    QRatFun(QPoly n, QPoly d);              // normalizes; throws on zero den
    explicit QRatFun(const QPoly& p) : num(p), den(QPoly::from_int(1)) {}

    static QRatFun q(int power = 1);        // q^power, any integer power
    static QRatFun from_int(long v) { return QRatFun(QPoly::from_int(v)); }
    static QRatFun from_rational(const Rational& r);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }
    std::string to_string() const;
};

bool operator==(const QRatFun& a, const QRatFun& b);
inline bool operator!=(const QRatFun& a, const QRatFun& b) { return !(a == b); }
QRatFun operator+(const QRatFun& a, const QRatFun& b);
QRatFun operator-(const QRatFun& a, const QRatFun& b);
QRatFun operator-(const QRatFun& a);
QRatFun operator*(const QRatFun& a, const QRatFun& b);
QRatFun operator/(const QRatFun& a, const QRatFun& b);   // throws on zero b

QRatFun ratfun_pow(const QRatFun& a, int e);              // e may be negative

/// Substitutes q -> q^n (n >= 1).  Field homomorphism: the Adams operation
/// psi_n on symbolic coefficients.
QRatFun adams_substitute(const QRatFun& f, int n);

/// prod_{i=1}^{n} (1 - base^i); n >= 0 (empty product is 1).
/// q_pochhammer(q, n) is the classical (q)_n and q_pochhammer(1/q, n) the
/// (q^{-1})_n appearing in Hua denominators.
QRatFun q_pochhammer(const QRatFun& base, int n);

/// Exact evaluation at a rational point; throws PoleError when the reduced
/// denominator vanishes there.
Rational evaluate_at(const QRatFun& f, const Rational& x);

} // namespace stackcount
