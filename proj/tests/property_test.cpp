#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "invariants.hpp"

namespace kdyck {
namespace {

TEST(Invariants, EveryPathOfTheSmallGrid) {
    std::size_t checked = 0;
    for (const auto& k : testing::multiset_grid(4, 3)) {
        for (const auto& p : enumerate(FamilySpec::k_dyck(k), {.permute_k = true}).paths) {
            const auto broken = testing::check_invariants(p);
            ASSERT_FALSE(broken) << *broken;
            ++checked;
        }
    }
    EXPECT_GT(checked, 1000u);
}

TEST(Invariants, EqualParameterFamiliesUpToFive) {
    for (Rise k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& p : enumerate(FamilySpec::k_dyck(std::vector<Rise>(n, k))).paths) {
                const auto broken = testing::check_invariants(p);
                ASSERT_FALSE(broken) << *broken;
            }
}

TEST(Oracle, WalkingAgreesWithExhaustiveInversion) {
    for (auto kind : {FamilyKind::K, FamilyKind::KPlus, FamilyKind::KMinus})
        for (const auto& k : testing::multiset_grid(3, 3)) {
            if (!testing::has_family(kind, k)) continue;
            std::string first;
            EXPECT_EQ(testing::oracle_mismatches(kind, k, &first).first, 0u) << first;
        }
}

TEST(RoundTrip, RandomMediumPaths) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = testing::random_k(1 + trial % 30, 12, rng);
        const auto d = testing::random_path(k, 1, rng);
        ASSERT_EQ(sweep(invert(d, FamilyKind::K)), d) << emit_steps(d);
        ASSERT_EQ(invert(sweep(d), FamilyKind::K), d) << emit_steps(d);
        const auto broken = testing::check_invariants(d);
        ASSERT_FALSE(broken) << *broken;

        const auto plus = to_plus(d);
        ASSERT_EQ(sweep(invert(plus, FamilyKind::KPlus)), plus);
        ASSERT_EQ(invert(sweep(plus), FamilyKind::KPlus), plus);
        if (ranks(d).zero_count() == 1 && !(k.size() == 1 && k[0] == 1)) {
            const auto minus = to_minus(d);
            ASSERT_EQ(sweep(invert(minus, FamilyKind::KMinus)), minus);
            ASSERT_EQ(invert(sweep(minus), FamilyKind::KMinus), minus);
        }
    }
}

}  // namespace
}  // namespace kdyck
