#include <gtest/gtest.h>

#include <cmath>

#include "instances.hpp"
#include "qlrc/bounds.hpp"

using namespace qlrc;
using namespace qlrc::testing;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

// Floors taken in floating point, exact at these magnitudes.
long long singleton_direct(long long n, long long delta, long long r) {
    const auto fl = [](long long a, long long b) { return static_cast<long long>(std::floor(double(a) / double(b))); };
    const long long t = fl(n - (delta - 1), r + 1);
    return n - 2 * (delta - 1) - t - fl(n - 2 * (delta - 1) - t, r + 1);
}

// Prime locality form: n(1 - 1/(2(r+1)) - sqrt(1/(4(r+1)^2) + r/(r+1) (ell-1)/n)).
long double prime_form(long double n, long double r, long double ell) {
    const long double s = r + 1;
    return n * (1 - 1 / (2 * s) - std::sqrt(1 / (4 * s * s) + r / s * (ell - 1) / n));
}

}  // namespace

TEST(Bounds, DegreeBound) {
    EXPECT_EQ(degree_bound(32, 3, 21), 4u);
    EXPECT_EQ(degree_bound(8, 3, 5), 3u);
    EXPECT_EQ(degree_bound(8, 3, std::nullopt), 4u);
}

TEST(Bounds, WorkedExampleAglBound) {
    const AglBound b = agl_bound(32, 3, 21);
    EXPECT_NEAR(b.value, 4.40408, 1e-4);
    EXPECT_EQ(b.integer, 5u);
    EXPECT_FALSE(b.vacuous);
}

TEST(Bounds, EllOneCollapses) {
    for (std::size_t r : {2u, 3u, 4u, 6u, 8u}) {
        const std::size_t n = 9 * (r + 1);
        const double p = static_cast<double>(smallest_prime_factor(r + 1));
        EXPECT_NEAR(agl_bound(n, r, 1).value, static_cast<double>(n) * (1 - 1 / p), 1e-9);
    }
}

TEST(Bounds, PrimeLocalityMatchesDirectFormula) {
    const std::size_t n = 63, r = 6;
    for (std::size_t k = 32; k <= 54; ++k) {
        const ExponentPlan plan = build_exponent_sets(n, k, r);
        const std::size_t ell = plan.ell.value_or(1);
        const AglBound b = agl_bound(n, r, ell);
        const long double v = prime_form(n, r, static_cast<long double>(ell));
        EXPECT_NEAR(b.value, static_cast<double>(v), 1e-9);
        EXPECT_EQ(b.integer, static_cast<std::size_t>(std::max<long double>(1, std::ceil(v - 1e-12))));
    }
}

TEST(Bounds, IntegerIsExactCeiling) {
    // n(1 - 1/p) is an integer for ell = 1 and must not be rounded up.
    EXPECT_EQ(agl_bound(32, 3, 1).integer, 16u);
    EXPECT_EQ(theta_weight_bound(12, 4, 2, 1).integer, 6u);
    for (std::size_t n : {12u, 24u, 60u})
        for (std::size_t ell = 1; ell < n; ++ell) {
            const AglBound b = theta_weight_bound(n, 4, 2, ell);
            EXPECT_GE(static_cast<double>(b.integer) + 1e-9, b.value);
            if (b.integer > 1) {
                EXPECT_LT(static_cast<double>(b.integer) - 1, b.value + 1e-9);
            }
            EXPECT_EQ(b.vacuous, b.value <= 1 + 1e-12);
        }
}

TEST(Bounds, MonotoneInTheta) {
    for (std::size_t r : {3u, 5u, 7u, 8u}) {
        const std::size_t n = 8 * (r + 1);
        for (std::size_t ell = 1; ell + 2 <= n; ++ell) EXPECT_TRUE(bound_monotone_in_theta(n, r, ell));
    }
}

TEST(Bounds, SingletonExample) {
    EXPECT_EQ(quantum_singleton_rhs(32, 5, 3), 13);
    EXPECT_EQ(quantum_singleton_rhs(32, 1, 3), 32 - 8 - 6);
}

TEST(Bounds, SingletonAgreesWithDirectEvaluation) {
    int checked = 0;
    for (long long r = 1; r <= 10; ++r)
        for (long long n = 2; n <= 45; ++n)
            for (long long delta = 1; delta <= n; ++delta) {
                ASSERT_EQ(quantum_singleton_rhs(n, delta, r), singleton_direct(n, delta, r)) << n << " " << delta << " " << r;
                ++checked;
            }
    EXPECT_GE(checked, 10000);
}

TEST(Bounds, OptimalityPredicate) {
    EXPECT_FALSE(meets_singleton_with_equality(32, 6, 3, 5));
    // k = 4, r = 2: 2 <= delta <= 2 + 2 + 4 - 2*3 = 2
    EXPECT_TRUE(meets_singleton_with_equality(6, 2, 2, 2));
    EXPECT_FALSE(meets_singleton_with_equality(6, 2, 2, 3));
    EXPECT_FALSE(meets_singleton_with_equality(6, 2, 2, 1));
}

TEST(Bounds, WorkedExampleParameters) {
    const QlrcParams p = css_params(gf32_example());
    EXPECT_EQ(p.n, 32u);
    EXPECT_EQ(p.kappa, 6);
    EXPECT_EQ(p.q, 32u);
    EXPECT_EQ(p.ell, 21u);
    EXPECT_EQ(p.p, 2u);
    EXPECT_EQ(p.degree_bound, 4u);
    ASSERT_TRUE(p.agl);
    EXPECT_EQ(p.agl->integer, 5u);
    EXPECT_EQ(p.best_lower_bound(), 5u);
}

TEST(Bounds, BruteForceSmallAdditive) {
    const CodeInstance inst = build_instance(load_spec("gf8_additive.json"));
    const DistanceResult d = distance_bruteforce(inst, kDefaultBruteForceCap, 2);
    EXPECT_EQ(d.enumerated, 32768u);
    EXPECT_EQ(d.distance, 3u);
    std::size_t w = 0;
    for (const auto& x : d.witness) w += x.is_zero() ? 0 : 1;
    EXPECT_EQ(w, d.distance);
    EXPECT_FALSE(in_dual(inst, d.witness));
    ASSERT_TRUE(solve_row_combination(inst.gen_c, d.witness).has_value());
    const QlrcParams p = css_params(inst);
    EXPECT_GE(d.distance, p.best_lower_bound());
    EXPECT_EQ(distance_bruteforce(inst, kDefaultBruteForceCap, 1).distance, d.distance);
    EXPECT_EQ(distance_bruteforce(inst, kDefaultBruteForceCap, 1).witness, d.witness);
}

TEST(Bounds, BruteForceTooLarge) {
    EXPECT_EQ(code_of([] { distance_bruteforce(gf32_example()); }), ErrorCode::TooLarge);
}

TEST(Bounds, NoSubgroupMeansNoAglBound) {
    CodeInstance inst = build_instance(load_spec("gf8_additive.json"));
    inst.subgroup.reset();
    EXPECT_EQ(code_of([&] { agl_bound(inst); }), ErrorCode::NotAglProvenance);
    EXPECT_FALSE(css_params(inst).agl.has_value());
}

TEST(Bounds, AuditOnWorkedExample) {
    Rng rng(5);
    const AuditReport rep = weight_bound_audit(gf32_example(), 40, rng);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.trials, 40u);
    EXPECT_GE(rep.min_weight, 5u);
    for (const auto& [theta, count] : rep.theta_orders) EXPECT_LT(theta, 4u);
}

TEST(Bounds, Table) {
    const auto rows = bound_table(63, 6);
    ASSERT_EQ(rows.size(), 23u);
    EXPECT_EQ(rows.front().kappa, 1);
    EXPECT_EQ(rows.back().kappa, 45);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LE(rows[i].degree_bound, rows[i - 1].degree_bound);
        EXPECT_LE(rows[i].agl_bound, rows[i - 1].agl_bound);
    }
    EXPECT_EQ(rows.front().agl_bound, 18u);
    EXPECT_EQ(rows.front().degree_bound, 7u);
}
