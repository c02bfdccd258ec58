#include "ruleorder/oracle.hpp"

#include <gtest/gtest.h>

using namespace ruleorder;

TEST(CountingOracle, IdentityOrderAnswersAndCounts)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    EXPECT_EQ(oracle.query_count(), 0u);
    EXPECT_TRUE(oracle.precedes(RuleId{0}, RuleId{1}));
    EXPECT_EQ(oracle.query_count(), 1u);
    EXPECT_FALSE(oracle.precedes(RuleId{2}, RuleId{1}));
    EXPECT_EQ(oracle.query_count(), 2u);
}

TEST(CountingOracle, ReversedOrder)
{
    CountingOracle oracle(GroundTruthOrder({2, 1, 0}));
    EXPECT_FALSE(oracle.precedes(RuleId{0}, RuleId{2}));
    EXPECT_TRUE(oracle.precedes(RuleId{2}, RuleId{0}));
}

TEST(CountingOracle, RejectedQueriesAreNotCounted)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    EXPECT_THROW(oracle.precedes(RuleId{1}, RuleId{1}), InvalidQuery);
    EXPECT_THROW(oracle.precedes(RuleId{0}, RuleId{3}), InvalidQuery);
    EXPECT_THROW(oracle.precedes(RuleId{7}, RuleId{0}), InvalidQuery);
    EXPECT_EQ(oracle.query_count(), 0u);
}

TEST(CountingOracle, ResetAndTranscript)
{
    CountingOracle oracle(GroundTruthOrder::identity(4));
    oracle.record_transcript(true);
    oracle.precedes(RuleId{3}, RuleId{0});
    oracle.precedes(RuleId{1}, RuleId{2});
    ASSERT_EQ(oracle.transcript().size(), 2u);
    EXPECT_EQ(oracle.transcript()[0].first, RuleId{3});
    EXPECT_EQ(oracle.transcript()[1].second, RuleId{2});

    oracle.reset();
    EXPECT_EQ(oracle.query_count(), 0u);
    EXPECT_TRUE(oracle.transcript().empty());
}

TEST(GroundTruthOrder, RejectsNonPermutations)
{
    EXPECT_THROW(GroundTruthOrder({0, 0, 1}), ValidationError);
    EXPECT_THROW(GroundTruthOrder({0, 3, 1}), ValidationError);
    EXPECT_NO_THROW(GroundTruthOrder({}));
    EXPECT_NO_THROW(GroundTruthOrder({1, 2, 0}));
}

TEST(GroundTruthOrder, SortedRulesInvertsRanks)
{
    const GroundTruthOrder order({2, 0, 1});
    const auto sorted = order.sorted_rules();
    ASSERT_EQ(sorted.size(), 3u);
    EXPECT_EQ(sorted[0], RuleId{1});
    EXPECT_EQ(sorted[1], RuleId{2});
    EXPECT_EQ(sorted[2], RuleId{0});
}
