#pragma once

// Exact positivity certificates for cosine polynomials sum_k a_k cos(k t).
// By evenness and periodicity positivity on R is positivity of
// Q(x) = sum_k a_k T_k(x) on [-1, 1].

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segbounds/chebyshev.hpp"
#include "segbounds/coefficients.hpp"
#include "segbounds/parallel.hpp"
#include "segbounds/sturm.hpp"

namespace segbounds {

struct TrigPoly {
    std::vector<Rational> cos_coeffs;

    double operator()(double t) const {
        // Clenshaw on x = cos t.
        const double x = std::cos(t);
        double b1 = 0.0, b2 = 0.0;
        for (std::size_t k = cos_coeffs.size(); k-- > 1;) {
            const double b0 = cos_coeffs[k].get_d() + 2.0 * x * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        const double c0 = cos_coeffs.empty() ? 0.0 : cos_coeffs[0].get_d();
        return c0 + x * b1 - b2;
    }
};

/// sum_{k<=n} b_k^(d) cos(k t).
inline TrigPoly trig_poly(int d, std::size_t n) { return {sqrt_coeffs_recurrence(d, n).values}; }

enum class PositivityVerdict { positive, tangential_zero, witness, inconclusive };

inline std::string to_string(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::positive: return "positive";
        case PositivityVerdict::tangential_zero: return "nonnegative-with-zero";
        case PositivityVerdict::witness: return "nonpositive-witness";
        case PositivityVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct PositivityCertificate {
    int d = 0;
    std::size_t n = 0;
    PositivityVerdict verdict = PositivityVerdict::inconclusive;
    int roots_in_interval = 0;                  // distinct roots of Q in [-1, 1]
    std::optional<Rational> witness_lo;         // x-interval with a zero of Q, or
    std::optional<Rational> witness_hi;         // lo == hi at a point where Q < 0
    double min_estimate = 0.0;                  // float grid minimum over t

    bool positive() const { return verdict == PositivityVerdict::positive; }
};

/// min over t_j = pi j / (points - 1) of p(t_j); [0, pi] covers R by symmetry.
inline double float_grid_min(const TrigPoly& p, std::size_t points) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points; ++j) {
        const double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(points - 1);
        m = std::min(m, p(t));
    }
    return m;
}

namespace detail {

inline void shrink_to(const SturmSequence& seq, RootInterval& r, const Rational& width) {
    while (!r.exact && r.hi - r.lo > width) bisect_once(seq, r);
}

}  // namespace detail

inline PositivityCertificate positivity_certificate(const TrigPoly& p, int d = 0, std::size_t n = 0,
                                                    std::size_t estimate_points = 4096) {
    const PolyQ Q = cheb_from_cosines(p.cos_coeffs);
    if (Q.is_zero()) throw std::domain_error("positivity of the zero polynomial");
    PositivityCertificate cert;
    cert.d = d;
    cert.n = n;
    cert.min_estimate = float_grid_min(p, estimate_points);

    // Dominance a_0 > sum |a_k| proves positivity outright; no chain needed.
    Rational tail;
    for (std::size_t k = 1; k < p.cos_coeffs.size(); ++k) tail += abs_value(p.cos_coeffs[k]);
    if (p.cos_coeffs[0] > tail) {
        cert.verdict = PositivityVerdict::positive;
        return cert;
    }

    const Rational one(1), minus_one(-1), zero(0);
    const SturmSequence seq(Q);
    auto roots = isolate_roots(seq, minus_one, one);
    cert.roots_in_interval = static_cast<int>(roots.size());

    if (roots.empty()) {
        if (sgn(Q(zero)) > 0) {
            cert.verdict = PositivityVerdict::positive;
        } else {
            cert.verdict = PositivityVerdict::witness;
            cert.witness_lo = zero;
            cert.witness_hi = zero;
        }
        return cert;
    }

    // Sample Q strictly between consecutive roots and beyond the outer ones.
    // A negative sample means a sign change; otherwise every zero is a touch.
    struct Sample {
        Rational x;
        std::size_t adjacent_root;
    };
    std::vector<Sample> samples;
    if (!(roots.front().exact && roots.front().lo == minus_one)) samples.push_back({minus_one, 0});
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        while (!(roots[i].hi < roots[i + 1].lo)) {
            bisect_once(seq, roots[i]);
            bisect_once(seq, roots[i + 1]);
        }
        samples.push_back({(roots[i].hi + roots[i + 1].lo) / 2, i});
    }
    if (!(roots.back().exact && roots.back().lo == one)) samples.push_back({one, roots.size() - 1});

    const Rational width = make_rational(1, 1L << 20);
    for (const auto& s : samples) {
        if (sgn(Q(s.x)) >= 0) continue;
        auto& root = roots[s.adjacent_root];
        detail::shrink_to(seq, root, width);
        cert.verdict = PositivityVerdict::witness;
        cert.witness_lo = root.lo;
        cert.witness_hi = root.hi;
        return cert;
    }
    detail::shrink_to(seq, roots.front(), width);
    cert.verdict = PositivityVerdict::tangential_zero;
    cert.witness_lo = roots.front().lo;
    cert.witness_hi = roots.front().hi;
    return cert;
}

struct TailArgument {
    std::size_t n = 0;
    Rational abs_tail_sum;  // sum_{k=1}^n |b_k^(1)|
    bool holds = false;     // abs_tail_sum < 1 = b_0
};

/// For d = 1: sum_{k>=1} |b_k| = 1 = b_0 with nonzero terms, so every finite
/// tail sum is < 1 and the cosine section is positive.
inline TailArgument d1_tail_argument(std::size_t n) {
    const auto b = sqrt_coeffs_recurrence(1, n);
    TailArgument out;
    out.n = n;
    for (std::size_t k = 1; k <= n; ++k) out.abs_tail_sum += abs_value(b.values[k]);
    out.holds = out.abs_tail_sum < 1;
    return out;
}

/// One certificate per (d, n), d in [d_lo, d_hi], n in [n_lo, n_hi], ordered
/// by d then n. Reports evidence only.
inline std::vector<PositivityCertificate> scan_conjecture(int d_lo, int d_hi, std::size_t n_lo, std::size_t n_hi) {
    if (d_lo > d_hi || n_lo > n_hi) return {};
    struct Point {
        int d;
        std::size_t n;
    };
    std::vector<Point> points;
    for (int d = d_lo; d <= d_hi; ++d) {
        sqrt_coeffs_recurrence(d, n_hi);  // warm the cache before going parallel
        for (std::size_t n = n_lo; n <= n_hi; ++n) points.push_back({d, n});
    }
    return parallel_map(points.size(), [&](std::size_t i) {
        return positivity_certificate(trig_poly(points[i].d, points[i].n), points[i].d, points[i].n);
    });
}

}  // namespace segbounds
