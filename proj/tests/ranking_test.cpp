#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kdyck/ranking.hpp"

namespace kdyck {
namespace {

TEST(Rank, RunningExample) {
    const auto r = rank(testing::running_tableau());
    EXPECT_EQ(r.columns, (std::vector<std::vector<Rank>>{
                             {0, 1, 2, 3, 4}, {0, 1, 2}, {3, 4, 5, 6, 7, 8}, {4, 5, 6, 7}}));
    EXPECT_EQ(r.by_index,
              (std::vector<Rank>{0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 7, 8}));
    EXPECT_EQ(r.rank_of(6), 2);
}

TEST(Rank, Small) {
    EXPECT_EQ(rank(Tableau({{1, 2}})).columns, (std::vector<std::vector<Rank>>{{0, 1}}));
    EXPECT_EQ(rank(Tableau({{1, 3}, {2, 4}})).columns,
              (std::vector<std::vector<Rank>>{{0, 1}, {0, 1}}));
}

TEST(Rank, ReportsUnrankableTop) {
    // Index 3 tops column 2 but index 2 sits in column 3, not ranked yet.
    EXPECT_THROW(rank(Tableau({{1, 4}, {3, 5}, {2, 6}})), InvalidInput);
}

TEST(RankCounts, RunningExample) {
    const auto counts = rank_counts(rank(testing::running_tableau()));
    EXPECT_EQ(counts.total(2), 2u);
    EXPECT_EQ(counts.top(2), 0u);
    EXPECT_EQ(counts.below_top(2), 2u);
    EXPECT_EQ(counts.total(0), 2u);
    EXPECT_EQ(counts.top(0), 2u);
    EXPECT_EQ(counts.below_top(0), 0u);
    EXPECT_EQ(counts.total(-1), 0u);
    EXPECT_EQ(counts.total(4), 3u);
    EXPECT_EQ(counts.bottom(4), 1u);
    EXPECT_EQ(counts.above_bottom(4), 2u);
    EXPECT_EQ(counts.total(9), 0u);
    EXPECT_EQ(counts.max_rank(), 8);
    for (Rank r = 0; r <= 8; ++r) {
        EXPECT_EQ(counts.total(r), counts.top(r) + counts.below_top(r));
        EXPECT_EQ(counts.total(r), counts.bottom(r) + counts.above_bottom(r));
    }
}

TEST(RankTableauJson, Shape) {
    const auto t = Tableau({{1, 3}, {2, 4}});
    EXPECT_EQ(rank_tableau_to_json(t, rank(t)).dump(),
              R"({"by_index":[0,0,1,1],"k":[1,1],"ranks":[[0,1],[0,1]]})");
}

}  // namespace
}  // namespace kdyck
