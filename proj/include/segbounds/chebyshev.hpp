#pragma once

// Conversions from trigonometric sums in t to polynomials in x = cos t.

#include <cstddef>
#include <span>
#include <vector>

#include "segbounds/polynomial.hpp"

namespace segbounds {

/// First-kind Chebyshev polynomials T_0..T_n (integer coefficients).
inline std::vector<PolyQ> chebyshev_first_kind(std::size_t n) {
    std::vector<PolyQ> t;
    t.reserve(n + 1);
    t.push_back(PolyQ{Rational(1)});
    if (n >= 1) t.push_back(PolyQ{Rational(0), Rational(1)});
    const PolyQ two_x{Rational(0), Rational(2)};
    for (std::size_t k = 2; k <= n; ++k) t.push_back(two_x * t[k - 1] - t[k - 2]);
    return t;
}

/// Second-kind Chebyshev polynomials U_0..U_n.
inline std::vector<PolyQ> chebyshev_second_kind(std::size_t n) {
    std::vector<PolyQ> u;
    u.reserve(n + 1);
    u.push_back(PolyQ{Rational(1)});
    if (n >= 1) u.push_back(PolyQ{Rational(0), Rational(2)});
    const PolyQ two_x{Rational(0), Rational(2)};
    for (std::size_t k = 2; k <= n; ++k) u.push_back(two_x * u[k - 1] - u[k - 2]);
    return u;
}

namespace detail {

// Accumulates sum_k c_k B_k where B obeys B_k = 2x B_{k-1} - B_{k-2};
// done with the three-term recurrence directly on the running sum (Clenshaw
// over polynomials) so no table of basis polynomials is kept.
inline PolyQ clenshaw(std::span<const Rational> c, const PolyQ& b1_basis) {
    // b_k = c_k + 2x b_{k+1} - b_{k+2}; result = c_0 B_0 + b_1 B_1 - b_2 B_0
    // with B_0 = 1 and B_1 = b1_basis.
    if (c.empty()) return {};
    const PolyQ two_x{Rational(0), Rational(2)};
    PolyQ next1, next2;  // b_{k+1}, b_{k+2}
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        PolyQ cur = two_x * next1 - next2 + PolyQ::constant(c[k]);
        next2 = std::move(next1);
        next1 = std::move(cur);
    }
    return PolyQ::constant(c[0]) + b1_basis * next1 - next2;
}

}  // namespace detail

/// Q with Q(cos t) = sum_k cos_coeffs[k] cos(k t).
inline PolyQ cheb_from_cosines(std::span<const Rational> cos_coeffs) {
    return detail::clenshaw(cos_coeffs, PolyQ{Rational(0), Rational(1)});
}

inline PolyQ cheb_from_cosines(const std::vector<Rational>& cos_coeffs) {
    return cheb_from_cosines(std::span<const Rational>(cos_coeffs));
}

/// S with sin(t) S(cos t) = sum_{k>=1} sin_coeffs[k] sin(k t); sin_coeffs[0]
/// is ignored.
inline PolyQ cheb_from_sines(std::span<const Rational> sin_coeffs) {
    if (sin_coeffs.size() <= 1) return {};
    // sin(kt) = sin t U_{k-1}(cos t), so shift indices down by one.
    return detail::clenshaw(sin_coeffs.subspan(1), PolyQ{Rational(0), Rational(2)});
}

inline PolyQ cheb_from_sines(const std::vector<Rational>& sin_coeffs) {
    return cheb_from_sines(std::span<const Rational>(sin_coeffs));
}

}  // namespace segbounds
