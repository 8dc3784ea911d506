#pragma once

// Exact scalar types: arbitrary-precision rationals (GMP) and Gaussian
// rationals built on top of them.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace segbounds {

/// Reduced fraction with positive denominator. gmpxx keeps results of
/// arithmetic canonical; make_rational() canonicalizes explicit num/den input.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q" or "-p/q".
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw std::domain_error("zero denominator");
    r.canonicalize();
    return r;
}

/// Always "num/den", also for integers ("1/1").
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

/// True iff gcd(|num|, den) = 1 and den > 0.
inline bool is_reduced(const Rational& r) {
    if (r.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1;
}

inline Rational abs_value(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

/// x + iy with rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(implicit)
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussianRational(long real) : re(real) {}  // NOLINT(implicit)

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm2();
        if (sgn(n) == 0) throw std::domain_error("division by zero");
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }
    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        os << z.re;
        if (sgn(z.im) != 0) os << (sgn(z.im) > 0 ? "+" : "") << z.im << "i";
        return os;
    }
};

// Field traits so Polynomial<T> can ask "is this coefficient zero" uniformly.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace segbounds
