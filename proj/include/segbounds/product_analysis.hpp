#pragma once

// Coefficients gamma_k of T_n(z) sqrt(1 - z) and the degree-n polynomial P
// with gamma_k / c_k = P(k) / (k - 3/2)^{falling n}.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "segbounds/coefficients.hpp"
#include "segbounds/polynomial.hpp"
#include "segbounds/special.hpp"
#include "segbounds/sturm.hpp"

namespace segbounds {

struct GammaTable {
    std::size_t n = 0;
    std::size_t M = 0;
    std::vector<Rational> values;
    const Rational& operator[](std::size_t k) const { return values.at(k); }
};

/// Default truncation index for gamma scans.
inline std::size_t default_gamma_truncation(std::size_t n) { return 3 * n + 16; }

/// gamma_k = sum_{s <= min(k, n)} b_s c_{k-s}, k = 0..M, with b the d = 2
/// coefficients.
inline GammaTable gamma_coeffs(std::size_t n, std::size_t M) {
    if (M < n + 1) throw std::invalid_argument("gamma truncation needs M >= n + 1");
    const auto b = sqrt_coeffs_recurrence(2, n);
    const auto c = helper_coeffs(M);
    GammaTable g{n, M, std::vector<Rational>(M + 1)};
    for (std::size_t k = 0; k <= M; ++k) {
        Rational acc;
        const std::size_t top = k < n ? k : n;
        for (std::size_t s = 0; s <= top; ++s) acc += b.values[s] * c.values[k - s];
        g.values[k] = std::move(acc);
    }
    return g;
}

/// Outcome of the three gamma sign claims. Each optional holds the first
/// failing index.
struct GammaVerdict {
    std::size_t n = 0;
    std::size_t M = 0;
    std::optional<std::size_t> nonpositive_failure;      // gamma_k <= 0, 1 <= k <= M
    std::optional<std::size_t> strict_tail_failure;      // gamma_k < 0, n < k <= M
    std::optional<std::size_t> small_pattern_failure;    // gamma_k = c_{k/3} or 0, 1 <= k <= n
    bool holds() const { return !nonpositive_failure && !strict_tail_failure && !small_pattern_failure; }
};

inline GammaVerdict check_gamma_claims(const GammaTable& g) {
    GammaVerdict v;
    v.n = g.n;
    v.M = g.M;
    const auto c = helper_coeffs(g.n / 3 + 1);
    for (std::size_t k = 1; k <= g.M; ++k) {
        const int s = sgn(g.values[k]);
        if (s > 0 && !v.nonpositive_failure) v.nonpositive_failure = k;
        if (k > g.n && s >= 0 && !v.strict_tail_failure) v.strict_tail_failure = k;
        if (k <= g.n && !v.small_pattern_failure) {
            const Rational expected = k % 3 == 0 ? c.values[k / 3] : Rational(0);
            if (g.values[k] != expected) v.small_pattern_failure = k;
        }
    }
    return v;
}

inline GammaVerdict check_gamma_claims(std::size_t n, std::size_t M) {
    return check_gamma_claims(gamma_coeffs(n, M));
}

/// gamma_{n+1} = -b_{n+1}; the proof uses it when 3 | n.
inline bool successor_gamma_identity(std::size_t n) {
    const auto g = gamma_coeffs(n, n + 1);
    const auto b = sqrt_coeffs_recurrence(2, n + 1);
    return g.values[n + 1] == -b.values[n + 1];
}

/// Finite-truncation form of sum_k gamma_k = 0: with S_M = gamma_0 + ... +
/// gamma_M and nonpositive gamma_k for k >= 1, 0 < S_M = sum_{k>M} |gamma_k|
/// <= sum_s |b_s| tail_c(M - s), where tail_c(J) = sum_{j>J} |c_j| = c_0 + ...
/// + c_J.
struct TruncatedSum {
    Rational partial;
    Rational bound;
    bool holds() const { return sgn(partial) > 0 && partial <= bound; }
};

inline TruncatedSum truncated_gamma_sum(const GammaTable& g) {
    TruncatedSum out;
    for (const auto& v : g.values) out.partial += v;
    const auto b = sqrt_coeffs_recurrence(2, g.n);
    const auto c = helper_coeffs(g.M);
    std::vector<Rational> tail(g.M + 1);  // tail[J] = c_0 + ... + c_J
    Rational run;
    for (std::size_t j = 0; j <= g.M; ++j) {
        run += c.values[j];
        tail[j] = run;
    }
    for (std::size_t s = 0; s <= g.n; ++s) out.bound += abs_value(b.values[s]) * tail[g.M - s];
    return out;
}

struct ProdPoly {
    std::size_t n = 0;
    PolyQ P;
};

/// P(x) = sum_s b_s x^{falling s} (x - s - 3/2)^{falling (n - s)}.
///
/// Evaluated by the nested form W_s = b_s G_s + (x - s) W_{s+1}, W_n = b_n,
/// with G_s = prod_{i=s}^{n-1} (x - i - 3/2); then P = W_0. This costs O(n^2)
/// coefficient operations instead of O(n^3) for the expanded sum.
inline ProdPoly build_P(std::size_t n) {
    const auto b = sqrt_coeffs_recurrence(2, n);
    PolyQ G = PolyQ::constant(Rational(1));   // G_n
    PolyQ W = PolyQ::constant(b.values[n]);   // W_n
    for (std::size_t s = n; s-- > 0;) {
        G = G * PolyQ::linear_root(Rational(static_cast<long>(2 * s + 3), 2));
        W = b.values[s] * G + PolyQ::linear_root(Rational(static_cast<long>(s))) * W;
    }
    return {n, std::move(W)};
}

/// Cross-multiplied check gamma_k (k - 3/2)^{falling n} = P(k) c_k, k = 0..K.
struct IdentityVerdict {
    bool holds = true;
    std::optional<std::size_t> first_failure;
};

inline IdentityVerdict verify_quotient_identity(const ProdPoly& pp, const GammaTable& g, std::size_t K) {
    if (K < pp.n) throw std::invalid_argument("quotient identity check needs K >= n");
    if (g.M < K) throw std::invalid_argument("gamma table shorter than K");
    const auto c = helper_coeffs(K);
    for (std::size_t k = 0; k <= K; ++k) {
        const Rational kk(static_cast<long>(k));
        const Rational lhs = g.values[k] * falling_factorial(kk - Rational(3, 2), pp.n);
        const Rational rhs = pp.P(kk) * c.values[k];
        if (lhs != rhs) return {false, k};
    }
    return {};
}

inline IdentityVerdict verify_quotient_identity(std::size_t n, std::size_t K) {
    const auto g = gamma_coeffs(n, std::max(K, n + 1));
    return verify_quotient_identity(build_P(n), g, K);
}

/// Evidence for: P has n real roots (with multiplicity) in [1, n + 1).
struct RootLocalization {
    std::size_t n = 0;
    int roots_with_multiplicity = 0;   // in [1, n+1)
    int distinct_roots = 0;            // in [1, n+1), Sturm on square-free part
    int gcd_degree = 0;                // deg gcd(P, P'); 0 means all roots simple
    bool integer_roots_ok = true;      // P(k) = 0 for 1 <= k <= n, 3 !| k
    bool sign_k3_ok = true;            // (-1)^{n-k+1} P(k) > 0 for 1 <= k <= n, 3 | k
    bool beyond_positive_ok = true;    // P(k) > 0 for k = n+1..n+10
    bool holds() const {
        return roots_with_multiplicity == static_cast<int>(n) && integer_roots_ok && sign_k3_ok && beyond_positive_ok;
    }
};

inline RootLocalization verify_root_localization(const ProdPoly& pp) {
    const std::size_t n = pp.n;
    if (n < 1) throw std::invalid_argument("root localization needs n >= 1");
    const PolyQ& P = pp.P;
    RootLocalization r;
    r.n = n;
    const Rational lo(1);
    const Rational hi(static_cast<long>(n + 1));
    const SturmSequence seq(P);
    r.distinct_roots = seq.count(lo, hi, Bounds::closed_open);
    r.gcd_degree = seq.gcd_degree();
    r.roots_with_multiplicity =
        r.gcd_degree == 0 ? r.distinct_roots : count_roots_with_multiplicity(P, lo, hi, Bounds::closed_open);
    for (std::size_t k = 1; k <= n; ++k) {
        const int s = sgn(P(Rational(static_cast<long>(k))));
        if (k % 3 != 0) {
            if (s != 0) r.integer_roots_ok = false;
        } else {
            const int parity = (n - k + 1) % 2 == 0 ? 1 : -1;
            if (parity * s <= 0) r.sign_k3_ok = false;
        }
    }
    for (std::size_t k = n + 1; k <= n + 10; ++k)
        if (sgn(P(Rational(static_cast<long>(k)))) <= 0) r.beyond_positive_ok = false;
    return r;
}

inline RootLocalization verify_root_localization(std::size_t n) { return verify_root_localization(build_P(n)); }

}  // namespace segbounds
