#pragma once

// Taylor coefficients of sqrt(1 + z + ... + z^d) and of sqrt(1 - z).

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segbounds/polynomial.hpp"
#include "segbounds/rational.hpp"

namespace segbounds {

enum class Provenance { recurrence, convolution_oracle };

inline std::string to_string(Provenance p) {
    return p == Provenance::recurrence ? "recurrence" : "convolution-oracle";
}

/// b_0..b_N of sqrt(1 + z + ... + z^d).
struct CoeffTable {
    int d = 2;
    std::size_t N = 0;
    std::vector<Rational> values;
    Provenance provenance = Provenance::recurrence;

    const Rational& operator[](std::size_t k) const { return values.at(k); }
    /// Section T_n(z) = sum_{k<=n} b_k z^k.
    PolyQ section(std::size_t n) const {
        return PolyQ(std::vector<Rational>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n + 1)));
    }
};

/// c_0..c_N of sqrt(1 - z).
struct HelperTable {
    std::size_t N = 0;
    std::vector<Rational> values;
    const Rational& operator[](std::size_t k) const { return values.at(k); }
};

namespace detail {

inline void check_degree(int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
}

// Extends `b` in place using 2k b_k = sum_{j=1}^{min(d,k)} (3j - 2k) b_{k-j},
// the coefficient identity of 2 p f' = p' f for p = 1 + z + ... + z^d.
inline void extend_recurrence(int d, std::vector<Rational>& b, std::size_t N) {
    if (b.empty()) b.emplace_back(1);
    for (std::size_t k = b.size(); k <= N; ++k) {
        Rational acc;
        const long kk = static_cast<long>(k);
        for (long j = 1; j <= d && j <= kk; ++j) {
            if (3 * j == 2 * kk) continue;
            acc += Rational(3 * j - 2 * kk) * b[k - static_cast<std::size_t>(j)];
        }
        acc /= 2 * kk;
        b.push_back(std::move(acc));
    }
}

class CoefficientCache {
public:
    std::vector<Rational> get(int d, std::size_t N) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& b = tables_[d];
        if (b.size() <= N) extend_recurrence(d, b, N);
        return std::vector<Rational>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(N + 1));
    }

private:
    std::mutex mu_;
    std::map<int, std::vector<Rational>> tables_;
};

inline CoefficientCache& coefficient_cache() {
    static CoefficientCache cache;
    return cache;
}

}  // namespace detail

/// Exact b_0..b_N via the polynomial-coefficient recurrence (cached per d).
inline CoeffTable sqrt_coeffs_recurrence(int d, std::size_t N) {
    detail::check_degree(d);
    return {d, N, detail::coefficient_cache().get(d, N), Provenance::recurrence};
}

/// Independent route: solve (sum b_k z^k)^2 = 1 + z + ... + z^d term by term.
inline CoeffTable sqrt_coeffs_oracle(int d, std::size_t N) {
    detail::check_degree(d);
    std::vector<Rational> b;
    b.reserve(N + 1);
    b.emplace_back(1);
    for (std::size_t k = 1; k <= N; ++k) {
        Rational acc(k <= static_cast<std::size_t>(d) ? 1 : 0);
        for (std::size_t j = 1; j < k; ++j) acc -= b[j] * b[k - j];
        acc /= 2;
        b.push_back(std::move(acc));
    }
    return {d, N, std::move(b), Provenance::convolution_oracle};
}

/// c_k = (-1)^k binom(1/2, k), built from c_k / c_{k-1} = (k - 3/2) / k.
inline HelperTable helper_coeffs(std::size_t N) {
    HelperTable t{N, {}};
    t.values.reserve(N + 1);
    t.values.emplace_back(1);
    for (std::size_t k = 1; k <= N; ++k) {
        const long kk = static_cast<long>(k);
        Rational ratio(2 * kk - 3, 2 * kk);
        ratio.canonicalize();
        t.values.push_back(t.values.back() * ratio);
    }
    return t;
}

struct SignVerdict {
    bool conforms = true;
    std::optional<std::size_t> first_violation;
};

/// b_0 = 1, b_k > 0 for 3 !| k, b_k < 0 for 3 | k >= 3. Only meaningful for
/// d = 2 unless report_only is set.
inline SignVerdict check_sign_pattern(const CoeffTable& table, bool report_only = false) {
    if (table.d != 2 && !report_only) throw std::invalid_argument("sign lemma is stated for d = 2 only");
    for (std::size_t k = 0; k < table.values.size(); ++k) {
        const int s = sgn(table.values[k]);
        bool ok;
        if (k == 0)
            ok = table.values[0] == 1;
        else if (k % 3 == 0)
            ok = s < 0;
        else
            ok = s > 0;
        if (!ok) return {false, k};
    }
    return {};
}

/// The inductive step behind the sign pattern: whenever k >= 1 and
/// 0 < b_k < b_{k+1}, then b_{k+2} < 0 < b_{k+3} < b_{k+4}. Returns the first k
/// where the premise holds and the conclusion fails. `applicable` counts the
/// indices where the premise held.
struct InductionVerdict {
    bool holds = true;
    std::size_t applicable = 0;
    std::optional<std::size_t> first_violation;
};

inline InductionVerdict check_induction_step(const CoeffTable& table) {
    InductionVerdict v;
    const auto& b = table.values;
    for (std::size_t k = 1; k + 4 < b.size(); ++k) {
        if (!(sgn(b[k]) > 0 && b[k] < b[k + 1])) continue;
        ++v.applicable;
        if (!(sgn(b[k + 2]) < 0 && sgn(b[k + 3]) > 0 && b[k + 3] < b[k + 4])) {
            v.holds = false;
            v.first_violation = k;
            return v;
        }
    }
    return v;
}

/// T_n(1) = b_0 + ... + b_n.
inline Rational taylor_at_one(int d, std::size_t n) {
    const auto t = sqrt_coeffs_recurrence(d, n);
    Rational s;
    for (const auto& v : t.values) s += v;
    return s;
}

/// v > sqrt(3)/3, decided as v > 0 and v^2 > 1/3.
inline bool exceeds_inverse_sqrt3(const Rational& v) {
    return sgn(v) > 0 && 3 * v * v > 1;
}

/// sum_{k<=n} b_k^2.
inline Rational squared_sum(int d, std::size_t n) {
    const auto t = sqrt_coeffs_recurrence(d, n);
    Rational s;
    for (const auto& v : t.values) s += v * v;
    return s;
}

/// sum_{k<=N} b_{3k} for d = 2.
inline Rational triple_index_partial(std::size_t N) {
    const auto t = sqrt_coeffs_recurrence(2, 3 * N);
    Rational s;
    for (std::size_t k = 0; k <= N; ++k) s += t.values[3 * k];
    return s;
}

/// Truncated square of the section equals 1 + z + ... + z^min(d,N)?
inline bool squaring_identity_holds(const CoeffTable& t) {
    PolyQ sec(t.values);
    PolyQ sq = (sec * sec).truncated(t.N);
    std::vector<Rational> target(std::min<std::size_t>(t.N, static_cast<std::size_t>(t.d)) + 1, Rational(1));
    return sq == PolyQ(std::move(target));
}

}  // namespace segbounds
