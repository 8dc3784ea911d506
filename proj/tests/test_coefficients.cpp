#include <cmath>

#include <gtest/gtest.h>

#include "segbounds/coefficients.hpp"
#include "segbounds/special.hpp"

using namespace segbounds;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Float series square root of 1 + z + ... + z^d by the textbook recurrence
// 2 s_0 s_k = p_k - sum_{0<j<k} s_j s_{k-j}; independent of the library.
std::vector<double> float_sqrt_series(int d, std::size_t N) {
    std::vector<double> s(N + 1, 0.0);
    s[0] = 1.0;
    for (std::size_t k = 1; k <= N; ++k) {
        double acc = k <= static_cast<std::size_t>(d) ? 1.0 : 0.0;
        for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc / 2.0;
    }
    return s;
}

}  // namespace

TEST(Coefficients, TrinomialExamples) {
    const auto t = sqrt_coeffs_recurrence(2, 6);
    const std::vector<Rational> expected{q(1), q(1, 2), q(3, 8), q(-3, 16), q(3, 128), q(15, 256), q(-57, 1024)};
    EXPECT_EQ(t.values, expected);
    EXPECT_EQ(t.provenance, Provenance::recurrence);
    EXPECT_EQ(sqrt_coeffs_oracle(2, 6).provenance, Provenance::convolution_oracle);
    EXPECT_EQ(to_string(Provenance::convolution_oracle), "convolution-oracle");
}

TEST(Coefficients, DegreeOneIsBinomial) {
    const auto t = sqrt_coeffs_recurrence(1, 60);
    for (std::size_t k = 0; k <= 60; ++k) ASSERT_EQ(t.values[k], half_binomial(HalfSign::plus, k)) << k;
}

TEST(Coefficients, RejectsDegreeZero) {
    EXPECT_THROW(sqrt_coeffs_recurrence(0, 5), std::invalid_argument);
    EXPECT_THROW(sqrt_coeffs_oracle(-1, 5), std::invalid_argument);
}

TEST(Coefficients, RecurrenceMatchesOracle) {
    for (int d = 1; d <= 6; ++d) {
        const std::size_t N = d <= 2 ? 500 : 200;
        EXPECT_EQ(sqrt_coeffs_recurrence(d, N).values, sqrt_coeffs_oracle(d, N).values) << "d=" << d;
    }
}

TEST(Coefficients, FloatSeriesAgrees) {
    for (int d = 1; d <= 6; ++d) {
        const auto exact = sqrt_coeffs_recurrence(d, 40);
        const auto approx = float_sqrt_series(d, 40);
        for (std::size_t k = 0; k <= 40; ++k) ASSERT_NEAR(exact.values[k].get_d(), approx[k], 1e-12) << d << " " << k;
    }
}

TEST(Coefficients, SquaringIdentity) {
    for (int d = 1; d <= 6; ++d)
        for (std::size_t N : {0u, 1u, 3u, 17u, 120u}) EXPECT_TRUE(squaring_identity_holds(sqrt_coeffs_recurrence(d, N))) << d << " " << N;
    auto broken = sqrt_coeffs_recurrence(3, 10);
    broken.values[7] += q(1, 1000);
    EXPECT_FALSE(squaring_identity_holds(broken));
}

TEST(Coefficients, CacheIsPrefixStable) {
    const auto small = sqrt_coeffs_recurrence(4, 30);
    const auto large = sqrt_coeffs_recurrence(4, 90);
    EXPECT_EQ(small.values.size(), 31u);
    for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(small.values[k], large.values[k]);
}

TEST(HelperCoefficients, ValuesAndRatio) {
    const auto c = helper_coeffs(200);
    EXPECT_EQ(c.values[0], q(1));
    EXPECT_EQ(c.values[1], q(-1, 2));
    EXPECT_EQ(c.values[2], q(-1, 8));
    EXPECT_EQ(c.values[3], q(-1, 16));
    for (std::size_t k = 2; k <= 200; ++k) {
        const long kk = static_cast<long>(k);
        ASSERT_EQ(c.values[k], c.values[k - 1] * make_rational(2 * kk - 3, 2 * kk)) << k;
        ASSERT_LT(c.values[k], 0);
    }
}

TEST(SignPattern, HoldsThrough2000) {
    const auto t = sqrt_coeffs_recurrence(2, 2000);
    const auto v = check_sign_pattern(t);
    EXPECT_TRUE(v.conforms);
    EXPECT_FALSE(v.first_violation.has_value());
}

TEST(SignPattern, DetectsTampering) {
    auto t = sqrt_coeffs_recurrence(2, 40);
    t.values[9] = -t.values[9];
    const auto v = check_sign_pattern(t);
    EXPECT_FALSE(v.conforms);
    EXPECT_EQ(v.first_violation, 9u);
}

TEST(SignPattern, StatedForTrinomialOnly) {
    EXPECT_THROW(check_sign_pattern(sqrt_coeffs_recurrence(3, 10)), std::invalid_argument);
    EXPECT_NO_THROW(check_sign_pattern(sqrt_coeffs_recurrence(3, 10), true));
}

TEST(SignPattern, InductionStep) {
    const auto v = check_induction_step(sqrt_coeffs_recurrence(2, 2000));
    EXPECT_TRUE(v.holds);
    EXPECT_GT(v.applicable, 0u);
}

TEST(ValueAtOne, Examples) {
    EXPECT_EQ(taylor_at_one(2, 2), q(15, 8));
    EXPECT_EQ(taylor_at_one(2, 3), q(27, 16));
    EXPECT_EQ(taylor_at_one(1, 0), q(1));
}

TEST(ValueAtOne, SquareExceedsOneThird) {
    const auto t = sqrt_coeffs_recurrence(2, 2000);
    Rational partial;
    for (std::size_t n = 0; n <= 2000; ++n) {
        partial += t.values[n];
        ASSERT_TRUE(exceeds_inverse_sqrt3(partial)) << n;
    }
    EXPECT_FALSE(exceeds_inverse_sqrt3(q(57735, 100000)));
    EXPECT_TRUE(exceeds_inverse_sqrt3(q(57736, 100000)));
    EXPECT_FALSE(exceeds_inverse_sqrt3(q(-1)));
}

TEST(SquaredSum, ExamplesAndMonotonicity) {
    EXPECT_EQ(squared_sum(2, 2), q(89, 64));
    EXPECT_EQ(squared_sum(2, 0), q(1));
    Rational prev;
    const auto t = sqrt_coeffs_recurrence(2, 2000);
    Rational s;
    for (std::size_t n = 0; n <= 2000; ++n) {
        s += t.values[n] * t.values[n];
        ASSERT_GT(s, prev);
        prev = s;
    }
    EXPECT_LT(s.get_d(), 1.436);
}

TEST(TripleIndex, Examples) {
    EXPECT_EQ(triple_index_partial(0), q(1));
    EXPECT_EQ(triple_index_partial(1), q(13, 16));
    Rational prev = triple_index_partial(0);
    for (std::size_t N = 1; N <= 50; ++N) {
        const Rational v = triple_index_partial(N);
        ASSERT_LT(v, prev);
        ASSERT_GT(3 * v * v, 1);
        prev = v;
    }
    // The tail decays like N^{-1/2}: the gap is still ~0.039 at N = 50 and
    // first drops below 0.01 at N = 762.
    const double root = std::sqrt(3.0) / 3.0;
    EXPECT_NEAR(prev.get_d() - root, 0.0389054, 1e-6);
    EXPECT_GE(triple_index_partial(761).get_d() - root, 0.01);
    EXPECT_LT(triple_index_partial(762).get_d() - root, 0.01);
    EXPECT_GT(3 * triple_index_partial(762) * triple_index_partial(762), 1);
}
