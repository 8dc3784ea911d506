#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "segbounds/bounds.hpp"
#include "segbounds/special.hpp"

using namespace segbounds;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST(Bounds, Examples) {
    EXPECT_EQ(landau_bound(0), q(1));
    EXPECT_EQ(landau_bound(2), q(89, 64));
    EXPECT_EQ(trinomial_bound(2), q(89, 64));
    EXPECT_EQ(szasz_pair_bound(2), q(81, 64));
    EXPECT_EQ(szasz_pair_bound(1), q(5, 4));
    EXPECT_EQ(to_string(BoundFamily::szasz_pair), "szasz-pair");
}

TEST(Bounds, MatchBinomialOracle) {
    const auto landau = landau_bounds(300);
    const auto pair = szasz_pair_bounds(300);
    Rational l, p;
    for (std::size_t k = 0; k <= 300; ++k) {
        const Rational m = half_binomial(HalfSign::minus, k);
        const Rational h = half_binomial(HalfSign::plus, k);
        l += m * m;
        p += h * h;
        ASSERT_EQ(landau[k], l) << k;
        ASSERT_EQ(pair[k], p) << k;
        ASSERT_TRUE(is_reduced(landau[k]));
    }
}

TEST(Bounds, CrossFamilyIdentity) {
    EXPECT_EQ(squared_sums(1, 400), szasz_pair_bounds(400));
    const auto tri = squared_sums(2, 200);
    for (std::size_t n = 0; n <= 200; n += 13) EXPECT_EQ(tri[n], trinomial_bound(n));
}

TEST(Bounds, StrictlyIncreasing) {
    for (int d = 1; d <= 5; ++d) {
        const auto s = squared_sums(d, 600);
        for (std::size_t n = 1; n < s.size(); ++n) ASSERT_GT(s[n], s[n - 1]) << d << " " << n;
    }
    const auto l = landau_bounds(600);
    for (std::size_t n = 1; n < l.size(); ++n) ASSERT_GT(l[n], l[n - 1]);
}

TEST(Limits, ClosedForms) {
    EXPECT_NEAR(segment_limit(1), 4.0 / std::numbers::pi, 1e-9);
    EXPECT_NEAR(segment_limit(2), 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi, 1e-9);
    EXPECT_NEAR(trinomial_limit(), 1.4359911241769170, 1e-15);
    EXPECT_NEAR(pair_limit(), 1.2732395447351628, 1e-15);
    const auto qr = segment_limit_quadrature(4);
    EXPECT_LT(qr.error, 1e-12);
    EXPECT_THROW(segment_limit(0), std::invalid_argument);
}

TEST(Limits, SequencesApproachFromBelow) {
    const auto pair = szasz_pair_bounds(1000);
    EXPECT_LT(pair.back().get_d(), pair_limit());
    EXPECT_NEAR(pair.back().get_d(), pair_limit(), 1e-6);
    const auto tri = squared_sums(2, 2000);
    EXPECT_NEAR(tri.back().get_d(), trinomial_limit(), 1e-5);
    for (std::size_t n = 0; n <= 2000; ++n) ASSERT_LT(tri[n].get_d() + 1e-12, trinomial_limit()) << n;
    for (int d = 3; d <= 5; ++d) {
        const double lim = segment_limit(d);
        const double s = squared_sums(d, 1500).back().get_d();
        EXPECT_LT(s, lim);
        EXPECT_NEAR(s, lim, 1e-4);
    }
}

TEST(Reports, Shape) {
    const auto r = bound_reports(BoundFamily::trinomial, 5);
    ASSERT_EQ(r.size(), 6u);
    EXPECT_EQ(r[2].exact_value, q(89, 64));
    EXPECT_DOUBLE_EQ(r[2].float_value, 1.390625);
    ASSERT_TRUE(r[2].gap_to_limit.has_value());
    EXPECT_NEAR(*r[2].gap_to_limit, trinomial_limit() - 1.390625, 1e-15);
    const auto l = bound_reports(BoundFamily::landau, 3);
    EXPECT_FALSE(l[0].limit.has_value());
    const auto g = bound_reports(BoundFamily::general_d, 3, 3);
    EXPECT_EQ(g[3].d, 3);
    EXPECT_NEAR(*g[3].limit, segment_limit(3), 1e-15);
}
