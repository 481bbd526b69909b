#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "instances.hpp"
#include "qlrc/construct.hpp"

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

// Direct evaluation of sum_i u_i^2 a_i^j for every j <= n-2.
bool multiplier_equations_hold(const std::vector<Element>& a, const std::vector<Element>& u) {
    for (std::size_t j = 0; j + 2 <= a.size(); ++j) {
        Element s = a.front().field().zero();
        for (std::size_t i = 0; i < a.size(); ++i) s += u[i] * u[i] * a[i].pow(static_cast<std::int64_t>(j));
        if (!s.is_zero()) return false;
    }
    return true;
}

// First `count` pairs (i, j), 1 <= i <= r-1, after a stable sort by degree.
std::vector<ExponentPair> sorted_oracle(std::size_t count, std::size_t r, std::size_t blocks) {
    std::vector<ExponentPair> all;
    for (std::size_t j = 0; j < blocks + 1; ++j)
        for (std::size_t i = 1; i + 1 <= r; ++i) all.push_back({i, j});
    std::stable_sort(all.begin(), all.end(),
                     [&](auto x, auto y) { return monomial_degree(x, r) < monomial_degree(y, r); });
    all.resize(count);
    return all;
}

}  // namespace

TEST(Exponents, WorkedExample) {
    const ExponentPlan plan = build_exponent_sets(32, 19, 3);
    EXPECT_EQ(plan.s1.pairs.size(), 11u);
    EXPECT_EQ(plan.s2.pairs.size(), 8u);
    EXPECT_EQ(plan.t1.pairs.size(), 5u);
    EXPECT_EQ(plan.ell, 21u);
}

TEST(Exponents, SmallExample) {
    const ExponentPlan plan = build_exponent_sets(8, 5, 3);
    EXPECT_EQ(plan.s1.pairs, (std::vector<ExponentPair>{{1, 0}, {2, 0}, {1, 1}}));
    EXPECT_EQ(plan.s2.pairs, (std::vector<ExponentPair>{{0, 0}, {0, 1}}));
    EXPECT_EQ(plan.t1.pairs, (std::vector<ExponentPair>{{1, 0}}));
    EXPECT_EQ(plan.ell, 5u);
    EXPECT_EQ(plan.ell_prime, 1u);
    EXPECT_EQ(plan.S().size(), 5u);
    EXPECT_EQ(plan.T().size(), 3u);
}

TEST(Exponents, ClosedFormMatchesSortedOracle) {
    for (std::size_t r = 2; r <= 47; ++r) {
        for (std::size_t n = r + 1; n <= 48; n += r + 1) {
            for (std::size_t k = n / 2 + 1; k * (r + 1) <= n * r; ++k) {
                const ExponentPlan plan = build_exponent_sets(n, k, r);
                const std::size_t count = k - n / (r + 1);
                const auto oracle = sorted_oracle(count, r, n / (r + 1));
                ASSERT_EQ(plan.s1.pairs, oracle) << n << " " << k << " " << r;
                if (count > 0) {
                    EXPECT_EQ(plan.ell, monomial_degree(oracle.back(), r));
                }
                EXPECT_EQ(largest_degree_closed_form(count, r), plan.ell);
                for (const auto& t : plan.t1.pairs)
                    EXPECT_NE(std::find(plan.s1.pairs.begin(), plan.s1.pairs.end(), t), plan.s1.pairs.end());
            }
        }
    }
}

TEST(Exponents, Errors) {
    EXPECT_EQ(code_of([] { build_exponent_sets(32, 16, 3); }), ErrorCode::BadDimension);
    EXPECT_EQ(code_of([] { build_exponent_sets(32, 25, 3); }), ErrorCode::BadDimension);
    EXPECT_EQ(code_of([] { build_exponent_sets(30, 20, 3); }), ErrorCode::BadDimension);
    EXPECT_EQ(code_of([] { build_exponent_sets(8, 5, 1); }), ErrorCode::LocalityTooSmall);
    EXPECT_NO_THROW(build_exponent_sets(32, 12, 3, true));
}

TEST(Multipliers, TwoPointsOverGF3NeedExtension) {
    const Field F = Field::create(3, 1);
    const std::vector<Element> A{F.element(0), F.element(1)};
    const MultiplierSolution sol = solve_multipliers(A);
    ASSERT_TRUE(sol.extension.has_value());
    EXPECT_EQ(sol.field.q(), 9u);
    EXPECT_TRUE(multiplier_equations_hold(sol.points, sol.u));
}

TEST(Multipliers, FullFieldTakesAllOnes) {
    for (auto [p, m] : {std::pair{2u, 5u}, {3u, 2u}, {7u, 1u}, {2u, 3u}}) {
        const Field F = Field::create(p, m);
        const auto A = F.elements();
        const std::vector<Element> ones(A.size(), F.one());
        EXPECT_FALSE(multiplier_violation(A, ones).has_value());
        EXPECT_TRUE(multiplier_equations_hold(A, ones));
    }
}

TEST(Multipliers, RandomSetsSatisfyEquations) {
    Rng rng(17);
    for (auto [p, m] : {std::pair{13u, 1u}, {3u, 2u}, {2u, 4u}, {5u, 2u}}) {
        const Field F = Field::create(p, m);
        for (int t = 0; t < 20; ++t) {
            auto all = F.elements();
            const std::size_t n = 2 + rng.below(F.q() - 2);
            for (std::size_t i = 0; i < n; ++i) std::swap(all[i], all[i + rng.below(all.size() - i)]);
            all.resize(n);
            const MultiplierSolution sol = solve_multipliers(all);
            EXPECT_TRUE(multiplier_equations_hold(sol.points, sol.u));
            for (const auto& x : sol.u) EXPECT_FALSE(x.is_zero());
            if (p == 2) {
                EXPECT_FALSE(sol.extension.has_value());
            }
        }
    }
}

TEST(Multipliers, Errors) {
    const Field F = Field::create(5, 1);
    const std::vector<Element> dup{F.one(), F.one()};
    EXPECT_EQ(code_of([&] { solve_multipliers(dup); }), ErrorCode::DegenerateSet);
    const std::vector<Element> single{F.one()};
    EXPECT_EQ(code_of([&] { solve_multipliers(single); }), ErrorCode::InvalidArgument);
}

TEST(Construct, WorkedExample) {
    const CodeInstance inst = gf32_example();
    EXPECT_EQ(inst.n(), 32u);
    EXPECT_EQ(inst.k(), 19u);
    EXPECT_EQ(inst.r(), 3u);
    EXPECT_FALSE(inst.eval.extended_field);
    for (const auto& u : inst.eval.multipliers) EXPECT_TRUE(u.is_one());
    EXPECT_EQ(inst.eval.blocks.size(), 8u);
    for (const auto& b : inst.eval.blocks) EXPECT_EQ(b.size(), 4u);
    EXPECT_EQ(rank(inst.gen_c), 19u);
    EXPECT_EQ(rank(inst.gen_d), 13u);
    for (std::size_t i = 0; i < inst.gen_d.rows(); ++i) EXPECT_TRUE(in_dual(inst, inst.gen_d.row(i)));
    EXPECT_TRUE(std::is_sorted(inst.eval.points.begin(), inst.eval.points.end()));
}

TEST(Construct, ExtendedFieldExample) {
    const CodeInstance inst = build_instance(load_spec("gf7_extended.json"));
    EXPECT_TRUE(inst.eval.extended_field);
    EXPECT_EQ(inst.field().q(), 49u);
    EXPECT_EQ(inst.n(), 6u);
    ASSERT_TRUE(inst.subgroup.has_value());
    EXPECT_EQ(inst.subgroup->field(), inst.field());
    EXPECT_TRUE(multiplier_equations_hold(inst.eval.points, inst.eval.multipliers));
}

TEST(Construct, EncodeIsLinear) {
    const CodeInstance inst = gf32_example();
    const Field& F = inst.field();
    const std::vector<Element> zero(inst.k(), F.zero());
    for (const auto& c : encode(inst, zero)) EXPECT_TRUE(c.is_zero());
    for (std::size_t t = 0; t < inst.k(); ++t) {
        std::vector<Element> e(inst.k(), F.zero());
        e[t] = F.one();
        const auto c = encode(inst, e);
        EXPECT_TRUE(std::equal(c.begin(), c.end(), inst.gen_c.row(t).begin()));
    }
    // the S2 pair (0, 0) is the constant polynomial, whose codeword is u
    std::vector<Element> e(inst.k(), F.zero());
    e[inst.plan.s1.pairs.size()] = F.one();
    EXPECT_EQ(encode(inst, e), inst.eval.multipliers);
    EXPECT_EQ(code_of([&] { encode(inst, std::vector<Element>(3, F.zero())); }), ErrorCode::LengthMismatch);
}

TEST(Construct, RepairRecoversEveryPosition) {
    Rng rng(3);
    for (const auto& inst : {gf32_example(), build_instance(load_spec("gf7_extended.json"))}) {
        const Field& F = inst.field();
        for (int t = 0; t < 20; ++t) {
            std::vector<Element> msg(inst.k());
            for (auto& x : msg) x = rng.element(F);
            const auto c = encode(inst, msg);
            std::vector<std::optional<Element>> received(c.begin(), c.end());
            const std::size_t z = rng.below(inst.n());
            received[z].reset();
            const RepairResult res = repair(inst, received, z);
            EXPECT_EQ(res.value, c[z]);
            EXPECT_EQ(res.reads.size(), inst.r());
            for (auto p : res.reads) EXPECT_EQ(inst.eval.block_of[p], inst.eval.block_of[z]);
        }
    }
}

TEST(Construct, ConstantCodewordRepair) {
    const CodeInstance inst = build_instance(load_spec("gf7_extended.json"));
    const auto& u = inst.eval.multipliers;
    std::vector<std::optional<Element>> received(u.begin(), u.end());
    for (std::size_t z = 0; z < inst.n(); ++z) {
        auto r = received;
        r[z].reset();
        EXPECT_EQ(repair(inst, r, z).value, u[z]);
    }
}

TEST(Construct, RepairErrors) {
    const CodeInstance inst = gf32_example();
    std::vector<std::optional<Element>> received(inst.n(), inst.field().zero());
    EXPECT_EQ(code_of([&] { repair(inst, received, 32); }), ErrorCode::InvalidArgument);
    const auto& block = inst.eval.blocks.front();
    received[block[0]].reset();
    received[block[1]].reset();
    EXPECT_EQ(code_of([&] { repair(inst, received, block[0]); }), ErrorCode::BlockIncomplete);
    received.pop_back();
    EXPECT_EQ(code_of([&] { repair(inst, received, 0); }), ErrorCode::LengthMismatch);
}

TEST(Construct, RingProperty) {
    Rng rng(1);
    for (const auto& inst : {gf32_example(), build_instance(load_spec("gf8_additive.json")),
                             build_instance(load_spec("gf7_extended.json"))}) {
        const RingCheck rc = check_ring_property(inst.eval, rng, 50);
        EXPECT_TRUE(rc.ok());
    }
}

TEST(Construct, FamiliesOverSmallFields) {
    for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
        const Field F = Field::create(p, m);
        for (const auto& fam : search_subgroups(F)) {
            const std::size_t n = fam.max_n();
            const std::size_t r = fam.order - 1;
            if (n < r + 1 || n / 2 + 1 > n * r / (r + 1)) continue;
            const CodeInstance inst = family_instance(F, fam, n, n / 2 + 1);
            EXPECT_TRUE(multiplier_equations_hold(inst.eval.points, inst.eval.multipliers));
            for (std::size_t i = 0; i < inst.gen_d.rows(); ++i) EXPECT_TRUE(in_dual(inst, inst.gen_d.row(i)));
        }
    }
}

TEST(Construct, Errors) {
    const Field F = Field::create(2, 5);
    const AglSubgroup H = family_subgroup(F, {1, 1, 2, 0, 0});
    ConstructionRequest req{.subgroup = H};
    req.k = 19;
    req.domain = DomainKind::Explicit;
    req.explicit_domain = {F.element(0), F.element(1)};
    EXPECT_EQ(code_of([&] { construct(req); }), ErrorCode::DomainNotClosed);

    const Field F7 = Field::create(7, 1);
    ConstructionRequest mult{.subgroup = family_subgroup(F7, {1, 6, 0, 0, 0})};
    mult.k = 4;
    EXPECT_EQ(code_of([&] { construct(mult); }), ErrorCode::NotRegularOrbit);
    mult.domain = DomainKind::Orbits;
    mult.n = 12;
    EXPECT_EQ(code_of([&] { construct(mult); }), ErrorCode::BadDimension);

    ConstructionRequest small{.subgroup = family_subgroup(F7, {1, 2, 0, 0, 0})};
    EXPECT_EQ(code_of([&] { construct(small); }), ErrorCode::LocalityTooSmall);

    // sum of the nonzero elements of GF(7) is 6, so u = 1 fails at j = 0
    ConstructionRequest ones{.subgroup = family_subgroup(F7, {1, 3, 0, 0, 0})};
    ones.alpha_kind = AlphaKind::Power;
    ones.domain = DomainKind::Orbits;
    ones.n = 6;
    ones.k = 4;
    ones.multipliers = MultiplierMode::AllOnes;
    EXPECT_EQ(code_of([&] { construct(ones); }), ErrorCode::InvalidArgument);
}
