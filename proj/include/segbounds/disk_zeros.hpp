#pragma once

// Certification that a real polynomial has no zeros in the closed unit disk.
//
// Exact route: on z = e^{it}, T(e^{it}) = R(cos t) + i sin(t) S(cos t) with R,
// S rational polynomials. Boundary zeros are the roots in [-1, 1] of
// A(x) = |T(e^{it})|^2. Without boundary zeros the winding number of the
// boundary curve (= zeros inside the disk) follows from the signs of R at the
// zeros of the imaginary part on the upper half circle; the lower half is its
// mirror image and contributes the same amount.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segbounds/chebyshev.hpp"
#include "segbounds/polynomial.hpp"
#include "segbounds/sturm.hpp"

namespace segbounds {

enum class ZeroFreeMethod { exact_sturm, float_lipschitz };
enum class ZeroFreeVerdict { zero_free, has_zeros, inconclusive };

inline std::string to_string(ZeroFreeMethod m) {
    return m == ZeroFreeMethod::exact_sturm ? "exact-sturm" : "float-lipschitz";
}

inline std::string to_string(ZeroFreeVerdict v) {
    switch (v) {
        case ZeroFreeVerdict::zero_free: return "zero-free";
        case ZeroFreeVerdict::has_zeros: return "has-zeros";
        case ZeroFreeVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct ZeroFreeCertificate {
    std::string poly_id;
    int boundary_zero_count = 0;
    std::optional<int> winding_number;  // unset when a boundary zero exists or the scan is inconclusive
    ZeroFreeMethod method = ZeroFreeMethod::exact_sturm;
    std::size_t grid_points = 0;             // float method only
    double min_modulus_lower_bound = 0.0;    // float method only
    ZeroFreeVerdict verdict = ZeroFreeVerdict::inconclusive;

    bool zero_free() const { return verdict == ZeroFreeVerdict::zero_free; }
};

/// Re T(e^{it}) as a polynomial in cos t.
inline PolyQ circle_real_part(const PolyQ& T) { return cheb_from_cosines(T.coeffs()); }

/// S with Im T(e^{it}) = sin(t) S(cos t).
inline PolyQ circle_imag_part(const PolyQ& T) { return cheb_from_sines(T.coeffs()); }

/// A with A(cos t) = |T(e^{it})|^2.
inline PolyQ circle_modulus_poly(const PolyQ& T) {
    if (T.is_zero()) throw std::domain_error("circle modulus of zero polynomial");
    const auto& t = T.coeffs();
    std::vector<Rational> cos_coeffs(t.size());
    for (std::size_t m = 0; m < t.size(); ++m) {
        Rational acc;
        for (std::size_t j = 0; j + m < t.size(); ++j) acc += t[j] * t[j + m];
        cos_coeffs[m] = m == 0 ? acc : Rational(2 * acc);
    }
    return cheb_from_cosines(cos_coeffs);
}

/// Distinct zeros of T on |z| = 1: an interior root x of A gives the conjugate
/// pair e^{+-i arccos x}; x = +-1 gives a single zero.
inline int boundary_zero_count(const PolyQ& T) {
    const PolyQ A = circle_modulus_poly(T);
    if (A.degree() <= 0) return 0;
    const Rational one(1), minus_one(-1);
    const SturmSequence seq(A);
    const int interior = seq.count(minus_one, one, Bounds::open);
    const int ends = (sgn(A(one)) == 0 ? 1 : 0) + (sgn(A(minus_one)) == 0 ? 1 : 0);
    return 2 * interior + ends;
}

namespace detail {

// Shrinks two isolating intervals (upper above lower) until a gap of positive
// length separates them.
inline void separate(const SturmSequence& seq, RootInterval& upper, RootInterval& lower) {
    while (!(lower.hi < upper.lo)) {
        if (!lower.exact) bisect_once(seq, lower);
        if (!upper.exact) bisect_once(seq, upper);
    }
}

}  // namespace detail

namespace detail {

// winding_number without the boundary precondition check.
inline int winding_unchecked(const PolyQ& T) {
    if (T.degree() == 0) return 0;

    const PolyQ R = circle_real_part(T);
    const PolyQ S = circle_imag_part(T);
    const Rational one(1), minus_one(-1);

    // Zeros of Im on the upper half circle, in order of increasing t
    // (decreasing x = cos t): x = 1, interior roots of S, x = -1.
    const SturmSequence sseq(S);
    std::vector<RootInterval> roots;
    for (auto& r : isolate_roots(sseq, minus_one, one)) {
        if (r.exact && (r.lo == one || r.lo == minus_one)) continue;
        roots.push_back(std::move(r));
    }
    std::reverse(roots.begin(), roots.end());

    std::vector<int> re_sign;
    re_sign.push_back(sgn(R(one)));
    if (!roots.empty()) {
        const SturmSequence rseq(R);
        for (const auto& r : roots) re_sign.push_back(sign_at_root(sseq, r, R, rseq));
    }
    re_sign.push_back(sgn(R(minus_one)));

    // One sample of S inside each gap; sin t > 0 there, so sign(Im) = sign(S).
    std::vector<int> gap_sign;
    if (roots.empty()) {
        gap_sign.push_back(sgn(S(Rational(0))));
    } else {
        RootInterval top{one, one, true};
        RootInterval bottom{minus_one, minus_one, true};
        detail::separate(sseq, top, roots.front());
        gap_sign.push_back(sgn(S((roots.front().hi + one) / 2)));
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            detail::separate(sseq, roots[i], roots[i + 1]);
            gap_sign.push_back(sgn(S((roots[i + 1].hi + roots[i].lo) / 2)));
        }
        detail::separate(sseq, roots.back(), bottom);
        gap_sign.push_back(sgn(S((roots.back().lo + minus_one) / 2)));
    }

    // Crossing from the positive to the negative real axis through the upper
    // half plane is a half turn counterclockwise.
    int half_turns = 0;
    for (std::size_t i = 0; i < gap_sign.size(); ++i) {
        if (re_sign[i] == re_sign[i + 1]) continue;
        half_turns += (re_sign[i] > 0) == (gap_sign[i] > 0) ? 1 : -1;
    }
    // Upper and lower halves contribute equally: 2 * half_turns * pi / (2 pi).
    return half_turns;
}

}  // namespace detail

/// Number of zeros of T in |z| < 1 (argument principle). Requires no zeros on
/// the unit circle.
inline int winding_number(const PolyQ& T) {
    if (T.is_zero()) throw std::domain_error("winding of zero polynomial");
    if (boundary_zero_count(T) != 0) throw std::domain_error("winding undefined on zero");
    return detail::winding_unchecked(T);
}

inline ZeroFreeCertificate certify_zero_free(const PolyQ& T, std::string poly_id = {}) {
    if (T.is_zero()) throw std::domain_error("certify_zero_free: zero polynomial");
    ZeroFreeCertificate cert;
    cert.poly_id = std::move(poly_id);
    cert.method = ZeroFreeMethod::exact_sturm;
    cert.boundary_zero_count = boundary_zero_count(T);
    if (cert.boundary_zero_count > 0) {
        cert.verdict = ZeroFreeVerdict::has_zeros;
        return cert;
    }
    cert.winding_number = detail::winding_unchecked(T);
    cert.verdict = *cert.winding_number == 0 ? ZeroFreeVerdict::zero_free : ZeroFreeVerdict::has_zeros;
    return cert;
}

/// Grid test on |z| = 1 in double precision. With L = sum k |t_k| bounding
/// |d/dt T(e^{it})| and h = 2 pi / grid, a sampled minimum m with
/// m - err > L h means no boundary zero and a trustworthy sampled winding.
/// Anything else is inconclusive.
inline ZeroFreeCertificate float_zero_scan(const PolyQ& T, std::size_t grid, std::string poly_id = {}) {
    if (T.is_zero()) throw std::domain_error("float_zero_scan: zero polynomial");
    const std::size_t deg = static_cast<std::size_t>(T.degree());
    if (grid < 8 * deg || grid == 0) throw std::invalid_argument("grid must be >= 8 * degree");

    std::vector<double> t(T.coeffs().size());
    double abs_sum = 0.0;
    double lipschitz = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        t[k] = T.coeffs()[k].get_d();
        abs_sum += std::abs(t[k]);
        lipschitz += static_cast<double>(k) * std::abs(t[k]);
    }
    const double u = std::numeric_limits<double>::epsilon();
    // Horner in complex arithmetic, rounding of coefficients and of the sample
    // points, doubled for slack.
    const double eval_err = 2.0 * ((8.0 * static_cast<double>(deg) + 10.0) * u * abs_sum + 8.0 * u * lipschitz);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);

    auto eval = [&](std::size_t j) {
        const double ang = h * static_cast<double>(j);
        const std::complex<double> z(std::cos(ang), std::sin(ang));
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = t.size(); k-- > 0;) acc = acc * z + t[k];
        return acc;
    };

    double min_mod = std::numeric_limits<double>::infinity();
    double total_arg = 0.0;
    const std::complex<double> first = eval(0);
    std::complex<double> prev = first;
    min_mod = std::abs(first);
    for (std::size_t j = 1; j <= grid; ++j) {
        const std::complex<double> cur = j == grid ? first : eval(j);
        min_mod = std::min(min_mod, std::abs(cur));
        if (std::abs(prev) > 0.0 && std::abs(cur) > 0.0) total_arg += std::arg(cur / prev);
        prev = cur;
    }

    ZeroFreeCertificate cert;
    cert.poly_id = std::move(poly_id);
    cert.method = ZeroFreeMethod::float_lipschitz;
    cert.grid_points = grid;
    cert.min_modulus_lower_bound = std::max(0.0, min_mod - eval_err - lipschitz * h / 2.0);
    if (min_mod - eval_err > lipschitz * h) {
        const int w = static_cast<int>(std::lround(total_arg / (2.0 * std::numbers::pi)));
        cert.winding_number = w;
        cert.verdict = w == 0 ? ZeroFreeVerdict::zero_free : ZeroFreeVerdict::has_zeros;
    } else {
        cert.verdict = ZeroFreeVerdict::inconclusive;
    }
    return cert;
}

}  // namespace segbounds
