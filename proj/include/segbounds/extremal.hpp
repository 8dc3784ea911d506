#pragma once

// Extremal functions for coefficient functionals of bounded analytic
// functions, exact Taylor expansion of rational functions, and a harness for
// the inequality |mu_n a_0 + ... + mu_0 a_n| <= |lambda_0|^2 + ... + |lambda_n|^2
// whenever (sum lambda_k z^k)^2 = sum mu_k z^k + O(z^{n+1}) and |f| <= 1.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "segbounds/coefficients.hpp"
#include "segbounds/disk_zeros.hpp"
#include "segbounds/polynomial.hpp"

namespace segbounds {

struct RationalFunctionSpec {
    PolyQi numerator;
    PolyQi denominator;
};

struct SeriesCoeffs {
    std::vector<GaussianRational> values;
    const GaussianRational& operator[](std::size_t k) const { return values.at(k); }

    /// a_m + ... + a_n.
    GaussianRational segment_sum(std::size_t m, std::size_t n) const {
        GaussianRational s;
        for (std::size_t k = m; k <= n; ++k) s += values.at(k);
        return s;
    }
};

inline PolyQi to_gaussian(const PolyQ& p) {
    std::vector<GaussianRational> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return PolyQi(std::move(v));
}

/// Taylor coefficients a_0..a_N of numerator/denominator at 0.
inline SeriesCoeffs rational_series(const RationalFunctionSpec& f, std::size_t N) {
    const auto& den = f.denominator;
    if (den.is_zero() || den[0].is_zero()) throw std::domain_error("not expandable at origin");
    const GaussianRational d0 = den[0];
    const std::size_t dd = den.size();
    SeriesCoeffs out;
    out.values.reserve(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        GaussianRational acc = f.numerator[k];
        for (std::size_t j = 1; j < dd && j <= k; ++j) acc -= den.coeffs()[j] * out.values[k - j];
        out.values.push_back(acc / d0);
    }
    return out;
}

/// f(z) = z^n T_n(1/z) / T_n(z) for the d = 2 section T_n. The denominator is
/// certified zero-free on the closed disk unless `certify` is false.
inline RationalFunctionSpec extremal_function(std::size_t n, bool certify = true) {
    if (n < 2) throw std::invalid_argument("extremal function needs n >= 2");
    const PolyQ T = sqrt_coeffs_recurrence(2, n).section(n);
    if (certify && !certify_zero_free(T).zero_free())
        throw std::runtime_error("section is not zero-free on the closed disk");
    return {to_gaussian(T.reversed()), to_gaussian(T)};
}

struct SzaszInstance {
    std::vector<GaussianRational> mu;
    std::size_t n = 0;
    std::vector<GaussianRational> lambda;
};

namespace detail {

inline bool exact_sqrt(const Integer& v, Integer& root) {
    if (v < 0) return false;
    root = sqrt(v);
    return root * root == v;
}

}  // namespace detail

/// lambda_0 = sqrt(mu_0) (positive root), lambda_k = (mu_k - sum_{j=1}^{k-1}
/// lambda_j lambda_{k-j}) / (2 lambda_0). mu is zero-padded to length n + 1.
/// Exact mode only: mu_0 must be the square of a positive rational.
inline SzaszInstance szasz_lambda(std::vector<GaussianRational> mu, std::size_t n) {
    mu.resize(std::max(mu.size(), n + 1));
    if (mu[0].is_zero()) throw std::domain_error("mu_0 must be nonzero");
    Integer rn, rd;
    if (sgn(mu[0].im) != 0 || sgn(mu[0].re) < 0 || !detail::exact_sqrt(mu[0].re.get_num(), rn) ||
        !detail::exact_sqrt(mu[0].re.get_den(), rd))
        throw std::domain_error("mu_0 is not the square of a positive rational");
    SzaszInstance inst;
    inst.n = n;
    inst.lambda.reserve(n + 1);
    inst.lambda.emplace_back(make_rational(rn, rd));
    const GaussianRational two_l0 = GaussianRational(2) * inst.lambda[0];
    for (std::size_t k = 1; k <= n; ++k) {
        GaussianRational acc = mu[k];
        for (std::size_t j = 1; j < k; ++j) acc -= inst.lambda[j] * inst.lambda[k - j];
        inst.lambda.push_back(acc / two_l0);
    }
    mu.resize(n + 1);
    inst.mu = std::move(mu);
    return inst;
}

/// mu = (1, 1, 1, 0, ..., 0) of length n + 1: the functional a_{n-2} + a_{n-1} + a_n.
inline std::vector<GaussianRational> trinomial_mu(std::size_t n) {
    std::vector<GaussianRational> mu(n + 1);
    for (std::size_t k = 0; k <= n && k <= 2; ++k) mu[k] = GaussianRational(1);
    return mu;
}

struct SzaszCheck {
    GaussianRational functional;  // mu_n a_0 + ... + mu_0 a_n
    Rational lhs_squared;         // |functional|^2
    Rational rhs;                 // sum |lambda_k|^2
    bool holds = false;           // lhs <= rhs
    bool equality = false;        // lhs == rhs

    double lhs() const { return std::sqrt(lhs_squared.get_d()); }
};

inline SzaszCheck szasz_check(const SzaszInstance& inst, const SeriesCoeffs& a) {
    if (a.values.size() < inst.n + 1) throw std::invalid_argument("series too short for the instance");
    SzaszCheck out;
    for (std::size_t k = 0; k <= inst.n; ++k) out.functional += inst.mu[inst.n - k] * a.values[k];
    out.lhs_squared = out.functional.norm2();
    for (const auto& l : inst.lambda) out.rhs += l.norm2();
    const Rational rhs_sq = out.rhs * out.rhs;
    out.holds = out.lhs_squared <= rhs_sq;
    out.equality = out.lhs_squared == rhs_sq;
    return out;
}

inline SzaszCheck szasz_check(const SzaszInstance& inst, const RationalFunctionSpec& f) {
    return szasz_check(inst, rational_series(f, inst.n));
}

/// prod_j (z - alpha_j) / (1 - conj(alpha_j) z).
inline RationalFunctionSpec blaschke_from_zeros(const std::vector<GaussianRational>& alphas) {
    PolyQi num{GaussianRational(1)};
    PolyQi den{GaussianRational(1)};
    for (const auto& a : alphas) {
        num = num * PolyQi{-a, GaussianRational(1)};
        den = den * PolyQi{GaussianRational(1), -a.conj()};
    }
    return {num, den};
}

/// Zeros alpha = (p + qi)/D with 2 <= D <= 20 and |alpha|^2 <= 81/100, drawn
/// from a 64-bit Mersenne Twister seeded with `seed`. Only raw engine output is
/// used, so the stream is identical on every standard library.
inline std::vector<GaussianRational> random_blaschke_zeros(std::uint64_t seed, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<GaussianRational> alphas;
    while (static_cast<int>(alphas.size()) < degree) {
        const long D = 2 + static_cast<long>(rng() % 19);
        const long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * D + 1)) - D;
        const long q = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * D + 1)) - D;
        if (100 * (p * p + q * q) > 81 * D * D) continue;
        alphas.emplace_back(make_rational(p, D), make_rational(q, D));
    }
    return alphas;
}

inline RationalFunctionSpec random_blaschke(std::uint64_t seed, int degree) {
    return blaschke_from_zeros(random_blaschke_zeros(seed, degree));
}

inline std::complex<double> evaluate(const PolyQi& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = p.size(); k-- > 0;)
        acc = acc * z + std::complex<double>(p.coeffs()[k].re.get_d(), p.coeffs()[k].im.get_d());
    return acc;
}

/// max_j | |f(e^{2 pi i j / samples})| - 1 |.
inline double max_unimodular_deviation(const RationalFunctionSpec& f, std::size_t samples) {
    double worst = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
        const std::complex<double> z = std::polar(1.0, t);
        worst = std::max(worst, std::abs(std::abs(evaluate(f.numerator, z) / evaluate(f.denominator, z)) - 1.0));
    }
    return worst;
}

struct CoefficientFixtures {
    Rational mobius_abs_sum;          // |a_0| + |a_1| + |a_2| of (z - 1/2)/(1 - z/2)
    Rational blaschke_skip_sum;       // a_0 + a_1 + a_3 of (1 + z + 2z^3)/(2 + z^2 + z^3)
    Rational trinomial_bound_2;       // sum_{k<=2} b_k^2
    bool mobius_exceeds = false;
    bool blaschke_exceeds = false;
};

inline CoefficientFixtures coefficient_fixtures() {
    CoefficientFixtures out;
    const auto mob = rational_series(
        {PolyQi{GaussianRational(make_rational(-1, 2)), GaussianRational(1)},
         PolyQi{GaussianRational(1), GaussianRational(make_rational(-1, 2))}},
        2);
    for (std::size_t k = 0; k <= 2; ++k) out.mobius_abs_sum += abs_value(mob[k].re);
    const auto bl = rational_series({PolyQi{GaussianRational(1), GaussianRational(1), GaussianRational(0), GaussianRational(2)},
                                     PolyQi{GaussianRational(2), GaussianRational(0), GaussianRational(1), GaussianRational(1)}},
                                    3);
    out.blaschke_skip_sum = bl[0].re + bl[1].re + bl[3].re;
    out.trinomial_bound_2 = squared_sum(2, 2);
    out.mobius_exceeds = out.mobius_abs_sum > out.trinomial_bound_2;
    out.blaschke_exceeds = out.blaschke_skip_sum > out.trinomial_bound_2;
    return out;
}

/// Per-case seed for the harness: splitmix64 of (seed, index).
inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct SzaszCaseResult {
    std::uint64_t case_index = 0;
    std::uint64_t seed = 0;
    int degree = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double min_slack = 0.0;  // min over n of rhs - lhs (float)
};

/// Random Blaschke product of degree 1..max_degree, checked against the
/// trinomial functional for every n in 0..max_n.
inline SzaszCaseResult szasz_case(std::uint64_t seed, std::uint64_t index, int max_degree, std::size_t max_n) {
    SzaszCaseResult r;
    r.case_index = index;
    r.seed = case_seed(seed, index);
    r.degree = 1 + static_cast<int>(r.seed % static_cast<std::uint64_t>(max_degree));
    const auto f = random_blaschke(r.seed, r.degree);
    const auto a = rational_series(f, max_n);
    r.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto inst = szasz_lambda(trinomial_mu(n), n);
        const auto chk = szasz_check(inst, a);
        ++r.checks;
        if (!chk.holds) ++r.failures;
        r.min_slack = std::min(r.min_slack, chk.rhs.get_d() - chk.lhs());
    }
    return r;
}

}  // namespace segbounds
