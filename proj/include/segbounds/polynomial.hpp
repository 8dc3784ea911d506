#pragma once

// Dense univariate polynomials over an exact field (Rational or
// GaussianRational). Coefficients are stored in ascending degree order with
// trailing zeros trimmed; the empty vector is the zero polynomial.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "segbounds/rational.hpp"

namespace segbounds {

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
    /// x - root
    static Polynomial linear_root(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }
    static Polynomial monomial(std::size_t degree, T c = T(1)) {
        std::vector<T> v(degree + 1);
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of x^k (zero beyond the degree).
    T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(); }

    const T& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    T operator()(const T& x) const {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    /// Evaluation in an extension (e.g. a rational polynomial at a Gaussian point).
    template <class U>
        requires(!std::is_convertible_v<U, T>)
    U operator()(const U& x) const {
        U acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += U(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        const T lc = leading();
        std::vector<T> v(coeffs_);
        for (auto& c : v) c /= lc;
        return Polynomial(std::move(v));
    }

    /// Coefficients reversed: x^deg p(1/x).
    Polynomial reversed() const {
        std::vector<T> v(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(v));
    }

    /// Drops all terms of degree > n.
    Polynomial truncated(std::size_t n) const {
        if (coeffs_.size() <= n + 1) return *this;
        return Polynomial(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }
    Polynomial operator-() const {
        std::vector<T> v(coeffs_);
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (segbounds::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
            if (segbounds::is_zero(p.coeffs_[k])) continue;
            if (!first) os << " + ";
            os << "(" << p.coeffs_[k] << ")";
            if (k > 0) os << "x^" << k;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && segbounds::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using PolyQ = Polynomial<Rational>;
using PolyQi = Polynomial<GaussianRational>;

/// Euclidean division a = q*b + r with deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
    std::vector<T> rem(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<T> quot(rem.size() - db);
    const T& lb = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (is_zero(rem[k])) continue;
        T f = rem[k] / lb;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
        quot[k - db] = std::move(f);
    }
    rem.resize(db);
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

template <class T>
Polynomial<T> operator%(const Polynomial<T>& a, const Polynomial<T>& b) {
    return divmod(a, b).second;
}

template <class T>
Polynomial<T> operator/(const Polynomial<T>& a, const Polynomial<T>& b) {
    return divmod(a, b).first;
}

/// Monic gcd by the Euclidean remainder sequence. gcd(p, 0) = monic(p).
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial<T> r = a % b;
        // Rescaling remainders to monic keeps coefficient growth in check.
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline PolyQ square_free_part(const PolyQ& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (p.degree() <= 0) return p;
    PolyQ g = poly_gcd(p, p.derivative());
    return (p / g);
}

/// Yun's square-free factorization: p = c * prod_i f_i^i, with the f_i
/// square-free and pairwise coprime. Entry i-1 holds f_i (possibly constant 1).
inline std::vector<PolyQ> square_free_factorization(const PolyQ& p) {
    if (p.is_zero()) throw std::domain_error("factorization of zero polynomial");
    std::vector<PolyQ> factors;
    if (p.degree() <= 0) return factors;
    PolyQ a = p.monic();
    PolyQ b = a.derivative();
    PolyQ c = poly_gcd(a, b);
    PolyQ w = a / c;
    PolyQ y = b / c;
    PolyQ z = y - w.derivative();
    while (w.degree() > 0) {
        PolyQ g = z.is_zero() ? w : poly_gcd(w, z);
        factors.push_back(g);
        w = w / g;
        y = z / g;
        z = y - w.derivative();
    }
    while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
    return factors;
}

/// Falling factorial polynomial (x - shift)(x - shift - 1)...(x - shift - k + 1).
inline PolyQ falling_factorial_poly(const Rational& shift, std::size_t k) {
    PolyQ out = PolyQ::constant(Rational(1));
    for (std::size_t j = 0; j < k; ++j) {
        Rational root = shift + Rational(static_cast<long>(j));
        out = out * PolyQ::linear_root(root);
    }
    return out;
}

}  // namespace segbounds
