// Acceptance gate: one PASS/FAIL line per criterion. Usage:
//   acceptance PATH_TO_CLI

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "segbounds/segbounds.hpp"

using namespace segbounds;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.ok) ++failures;
    std::printf("%s [%d] %s (%s%.1fs)\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), v.detail.str().c_str(), secs);
    std::fflush(stdout);
}

Rational q(long a, long b = 1) { return make_rational(a, b); }

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = pclose(pipe);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance PATH_TO_CLI\n";
        return 64;
    }
    const std::string cli = argv[1];

    criterion(1, "coefficient fidelity: b_0..b_5 exact; recurrence == oracle for d in 1..6, k <= 500", [](Verdict& v) {
        const auto t = sqrt_coeffs_recurrence(2, 5);
        const std::vector<Rational> expected{q(1), q(1, 2), q(3, 8), q(-3, 16), q(3, 128), q(15, 256)};
        v.require(t.values == expected, "b_0..b_5");
        for (int d = 1; d <= 6; ++d)
            v.require(sqrt_coeffs_recurrence(d, 500).values == sqrt_coeffs_oracle(d, 500).values, "d=" + std::to_string(d));
    });

    criterion(2, "sign pattern and induction step for d = 2, k <= 2000", [](Verdict& v) {
        const auto t = sqrt_coeffs_recurrence(2, 2000);
        const auto s = check_sign_pattern(t);
        v.require(s.conforms, "sign pattern at k=" + std::to_string(s.first_violation.value_or(0)));
        const auto step = check_induction_step(t);
        v.require(step.holds, "induction at k=" + std::to_string(step.first_violation.value_or(0)));
        v.require(step.applicable > 0, "no applicable index");
        v.detail << step.applicable << " applicable indices; ";
    });

    criterion(3, "T_n(1)^2 > 1/3 exactly for n <= 2000", [](Verdict& v) {
        const auto t = sqrt_coeffs_recurrence(2, 2000);
        Rational partial;
        for (std::size_t n = 0; n <= 2000; ++n) {
            partial += t.values[n];
            v.require(exceeds_inverse_sqrt3(partial), "n=" + std::to_string(n));
        }
    });

    criterion(4, "zero-free: exact for d = 2, n <= 40; float to n <= 400 conclusive; methods agree", [](Verdict& v) {
        const auto t = sqrt_coeffs_recurrence(2, 400);
        const std::size_t grid = 1 << 17;
        auto exact = parallel_map(40, [&](std::size_t i) { return certify_zero_free(t.section(i + 1)); });
        auto flt = parallel_map(400, [&](std::size_t i) { return float_zero_scan(t.section(i + 1), grid); });
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < 40; ++i) {
            v.require(exact[i].zero_free(), "exact n=" + std::to_string(i + 1));
            v.require(flt[i].verdict == exact[i].verdict && flt[i].winding_number == exact[i].winding_number,
                      "disagreement n=" + std::to_string(i + 1));
        }
        for (std::size_t i = 0; i < 400; ++i) {
            v.require(flt[i].verdict != ZeroFreeVerdict::inconclusive, "float inconclusive n=" + std::to_string(i + 1));
            v.require(flt[i].zero_free(), "float n=" + std::to_string(i + 1));
            worst = std::min(worst, flt[i].min_modulus_lower_bound);
        }
        v.detail << "min |T| lower bound " << worst << "; ";
    });

    criterion(5, "gamma claims n <= 200 (M = 3n+16); quotient identity n <= 100, k <= 3n; roots of P n <= 60; signs at 3 | k; gamma_{n+1} = -b_{n+1}",
              [](Verdict& v) {
                  sqrt_coeffs_recurrence(2, 700);
                  helper_coeffs(700);
                  const auto gamma = parallel_map(201, [](std::size_t n) {
                      const auto g = gamma_coeffs(n, default_gamma_truncation(n));
                      return check_gamma_claims(g).holds() && truncated_gamma_sum(g).holds() &&
                             (n % 3 != 0 || successor_gamma_identity(n));
                  });
                  for (std::size_t n = 0; n <= 200; ++n) v.require(gamma[n], "gamma n=" + std::to_string(n));
                  const auto quotient = parallel_map(101, [](std::size_t n) { return verify_quotient_identity(n, 3 * n).holds; });
                  for (std::size_t n = 0; n <= 100; ++n) v.require(quotient[n], "quotient n=" + std::to_string(n));
                  const auto roots = parallel_map(60, [](std::size_t i) { return verify_root_localization(i + 1); });
                  for (const auto& r : roots) {
                      v.require(r.roots_with_multiplicity == static_cast<int>(r.n), "root count n=" + std::to_string(r.n));
                      v.require(r.sign_k3_ok, "sign at 3|k, n=" + std::to_string(r.n));
                      v.require(r.integer_roots_ok && r.beyond_positive_ok, "integer values n=" + std::to_string(r.n));
                  }
              });

    criterion(6, "bounds: exact small values, limits, convergence and strictness", [](Verdict& v) {
        v.require(landau_bound(2) == q(89, 64), "landau(2)");
        v.require(trinomial_bound(2) == q(89, 64), "trinomial(2)");
        v.require(szasz_pair_bound(2) == q(81, 64), "szasz_pair(2)");
        const double pair = szasz_pair_bound(1000).get_d();
        v.require(std::abs(pair - 4.0 / std::numbers::pi) < 1e-6, "pair(1000)");
        const auto tri = squared_sums(2, 2000);
        const double lim2 = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / std::numbers::pi;
        v.require(std::abs(tri.back().get_d() - lim2) < 1e-5, "squared_sum(2,2000)");
        v.require(std::abs(segment_limit(1) - 4.0 / std::numbers::pi) < 1e-9, "segment_limit(1)");
        v.require(std::abs(segment_limit(2) - lim2) < 1e-9, "segment_limit(2)");
        for (std::size_t n = 0; n <= 2000; ++n) v.require(tri[n].get_d() + 1e-12 < lim2, "strict n=" + std::to_string(n));
        v.detail << "gap at 2000 = " << lim2 - tri.back().get_d() << "; ";
    });

    criterion(7, "extremal equality n in 2..30; n = 2 coefficients; |f| = 1 within 1e-10", [](Verdict& v) {
        const auto a2 = rational_series(extremal_function(2), 2);
        v.require(a2[0] == GaussianRational(q(3, 8)) && a2[1] == GaussianRational(q(5, 16)) && a2[2] == GaussianRational(q(45, 64)),
                  "n=2 coefficients");
        const auto ok = parallel_map(29, [](std::size_t i) {
            const std::size_t n = i + 2;
            const auto f = extremal_function(n, false);
            const auto a = rational_series(f, n);
            return a.segment_sum(n - 2, n) == GaussianRational(squared_sum(2, n)) && max_unimodular_deviation(f, 1024) < 1e-10;
        });
        for (std::size_t i = 0; i < ok.size(); ++i) v.require(ok[i], "n=" + std::to_string(i + 2));
    });

    criterion(8, "Szasz harness: 1000 cases, seed 7, degree <= 8, n <= 10; fixtures 13/8 and 3/2", [](Verdict& v) {
        const auto cases = parallel_map(1000, [](std::size_t i) { return szasz_case(7, i, 8, 10); });
        std::size_t checks = 0;
        for (const auto& c : cases) {
            checks += c.checks;
            v.require(c.failures == 0, "case " + std::to_string(c.case_index));
        }
        const auto fx = coefficient_fixtures();
        v.require(fx.mobius_abs_sum == q(13, 8), "Mobius fixture");
        v.require(fx.blaschke_skip_sum == q(3, 2), "non-consecutive fixture");
        v.detail << checks << " exact checks; ";
    });

    criterion(9, "positivity: d = 1 n <= 200; d in 2..4 n <= 40 vs 1e5 grid; maximum principle d in 2..5 n <= 40", [](Verdict& v) {
        for (int d = 1; d <= 5; ++d) sqrt_coeffs_recurrence(d, 200);
        const auto d1 = parallel_map(201, [](std::size_t n) {
            return d1_tail_argument(n).holds && positivity_certificate(trig_poly(1, n), 1, n).positive();
        });
        for (std::size_t n = 0; n <= 200; ++n) v.require(d1[n], "d=1 n=" + std::to_string(n));

        const auto certs = scan_conjecture(2, 5, 1, 40);
        std::size_t positive = 0, reported = 0;
        const auto grid = parallel_map(certs.size(), [&](std::size_t i) {
            return certs[i].d <= 4 ? float_grid_min(trig_poly(certs[i].d, certs[i].n), 100000) : 0.0;
        });
        const auto zero_free = parallel_map(certs.size(), [&](std::size_t i) {
            return !certs[i].positive() || certify_zero_free(sqrt_coeffs_recurrence(certs[i].d, certs[i].n).section(certs[i].n)).zero_free();
        });
        for (std::size_t i = 0; i < certs.size(); ++i) {
            const auto& c = certs[i];
            const std::string tag = "d=" + std::to_string(c.d) + " n=" + std::to_string(c.n);
            if (c.d <= 4) {
                if (grid[i] > 1e-9) v.require(c.verdict == PositivityVerdict::positive, "grid/verdict " + tag);
                if (grid[i] < -1e-9) v.require(c.verdict == PositivityVerdict::witness, "grid/verdict " + tag);
            }
            v.require(zero_free[i], "maximum principle " + tag);
            positive += c.positive();
            if (!c.positive()) {
                ++reported;
                std::printf("  note: %s verdict %s\n", tag.c_str(), to_string(c.verdict).c_str());
            }
        }
        v.detail << positive << "/" << certs.size() << " positive, " << reported << " reported; ";
    });

    criterion(10, "determinism: identical invocations give byte-identical reports", [&](Verdict& v) {
        const std::vector<std::string> commands = {
            "verify szasz --cases 1000 --seed 7",
            "scan positivity --d 2 --d-max 3 --n-max 12",
            "bounds general-d --d 3 --n-max 50 --format csv",
            "verify zerofree --d 2 --n-max 44 --exact-max 40",
            "coeffs --d 4 --n 30",
        };
        for (const auto& c : commands) {
            int s1 = 0, s2 = 0;
            const auto a = capture("SEGBOUNDS_THREADS=1 '" + cli + "' " + c, s1);
            const auto b = capture("SEGBOUNDS_THREADS=4 '" + cli + "' " + c, s2);
            v.require(!a.empty() && s1 == 0 && s2 == 0, "run failed: " + c);
            v.require(a == b, "bytes differ: " + c);
        }
        v.detail << commands.size() << " commands, thread counts 1 and 4; ";
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
