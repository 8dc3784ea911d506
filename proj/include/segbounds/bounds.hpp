#pragma once

// Sharp bound sequences for segments of bounded power series and their limits.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segbounds/coefficients.hpp"
#include "segbounds/quadrature.hpp"
#include "segbounds/special.hpp"

namespace segbounds {

enum class BoundFamily { landau, szasz_pair, trinomial, general_d };

inline std::string to_string(BoundFamily f) {
    switch (f) {
        case BoundFamily::landau: return "landau";
        case BoundFamily::szasz_pair: return "szasz-pair";
        case BoundFamily::trinomial: return "trinomial";
        case BoundFamily::general_d: return "general-d";
    }
    return "unknown";
}

/// 4/pi, the limit of the two-term segment bounds.
inline double pair_limit() { return 4.0 / std::numbers::pi; }

/// 1/3 + 2 sqrt(3)/pi, the limit of the three-term segment bounds.
inline double trinomial_limit() { return 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi; }

/// Prefix sums sum_{k<=n} binom(-1/2, k)^2 for n = 0..N.
inline std::vector<Rational> landau_bounds(std::size_t N) {
    std::vector<Rational> out;
    out.reserve(N + 1);
    Rational term(1), sum;
    for (std::size_t k = 0; k <= N; ++k) {
        if (k > 0) {
            // binom(-1/2, k) = binom(-1/2, k-1) (-1/2 - k + 1) / k
            term *= Rational(1 - 2 * static_cast<long>(k), 2 * static_cast<long>(k));
        }
        sum += term * term;
        out.push_back(sum);
    }
    return out;
}

/// Prefix sums sum_{k<=n} binom(1/2, k)^2 for n = 0..N.
inline std::vector<Rational> szasz_pair_bounds(std::size_t N) {
    std::vector<Rational> out;
    out.reserve(N + 1);
    Rational term(1), sum;
    for (std::size_t k = 0; k <= N; ++k) {
        if (k > 0) {
            Rational ratio(3 - 2 * static_cast<long>(k), 2 * static_cast<long>(k));
            ratio.canonicalize();
            term *= ratio;
        }
        sum += term * term;
        out.push_back(sum);
    }
    return out;
}

/// Prefix sums sum_{k<=n} (b_k^(d))^2 for n = 0..N.
inline std::vector<Rational> squared_sums(int d, std::size_t N) {
    const auto b = sqrt_coeffs_recurrence(d, N);
    std::vector<Rational> out;
    out.reserve(N + 1);
    Rational sum;
    for (const auto& v : b.values) {
        sum += v * v;
        out.push_back(sum);
    }
    return out;
}

inline Rational landau_bound(std::size_t n) { return landau_bounds(n).back(); }
inline Rational szasz_pair_bound(std::size_t n) { return szasz_pair_bounds(n).back(); }
inline Rational trinomial_bound(std::size_t n) { return squared_sum(2, n); }

/// (1/2pi) int_0^{2pi} |1 + e^{it} + ... + e^{idt}| dt, the squared H^2 norm of
/// sqrt(1 + z + ... + z^d). The integrand |sin((d+1)t/2) / sin(t/2)| is split
/// at its zeros 2 pi m / (d+1) so every panel is analytic.
inline QuadratureResult segment_limit_quadrature(int d, double tol = 1e-13) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const double dd = static_cast<double>(d);
    auto integrand = [dd, d](double t) {
        const double den = std::sin(0.5 * t);
        if (std::abs(den) < 1e-6) {
            std::complex<double> s(0.0, 0.0);
            for (int j = 0; j <= d; ++j) s += std::polar(1.0, j * t);
            return std::abs(s);
        }
        return std::abs(std::sin(0.5 * (dd + 1.0) * t) / den);
    };
    QuadratureResult total;
    const double step = 2.0 * std::numbers::pi / (dd + 1.0);
    for (int m = 0; m <= d; ++m) {
        const double a = step * m;
        const double b = m == d ? 2.0 * std::numbers::pi : step * (m + 1);
        auto piece = integrate_gk15(integrand, a, b, tol / (dd + 1.0));
        total.value += piece.value;
        total.error += piece.error;
        total.panels += piece.panels;
    }
    total.value /= 2.0 * std::numbers::pi;
    total.error /= 2.0 * std::numbers::pi;
    return total;
}

inline double segment_limit(int d) { return segment_limit_quadrature(d).value; }

struct BoundReport {
    BoundFamily family = BoundFamily::trinomial;
    int d = 2;
    std::size_t n = 0;
    std::optional<Rational> exact_value;
    double float_value = 0.0;
    std::optional<double> limit;
    std::optional<double> gap_to_limit;
};

/// Reports for n = 0..N of one family (d used by general_d only).
inline std::vector<BoundReport> bound_reports(BoundFamily family, std::size_t N, int d = 2) {
    std::vector<Rational> values;
    std::optional<double> limit;
    switch (family) {
        case BoundFamily::landau: values = landau_bounds(N); d = 0; break;
        case BoundFamily::szasz_pair: values = szasz_pair_bounds(N); d = 1; limit = pair_limit(); break;
        case BoundFamily::trinomial: values = squared_sums(2, N); d = 2; limit = trinomial_limit(); break;
        case BoundFamily::general_d:
            values = squared_sums(d, N);
            limit = d == 1 ? pair_limit() : d == 2 ? trinomial_limit() : segment_limit(d);
            break;
    }
    std::vector<BoundReport> out;
    out.reserve(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        BoundReport r;
        r.family = family;
        r.d = d;
        r.n = n;
        r.float_value = values[n].get_d();
        r.exact_value = std::move(values[n]);
        r.limit = limit;
        if (limit) r.gap_to_limit = *limit - r.float_value;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace segbounds
