#include "ruleorder/complexity.hpp"
#include "ruleorder/learners.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ruleorder;

namespace {

constexpr RuleId A{0}, B{1}, C{2};

LearnedSequence sequence_of(std::size_t universe, std::initializer_list<RuleId> ids)
{
    LearnedSequence seq(universe);
    std::size_t pos = 0;
    for (RuleId id : ids)
        seq.insert_at(pos++, id);
    return seq;
}

std::vector<RuleId> ids_of(const LearnedSequence& seq)
{
    return {seq.rules().begin(), seq.rules().end()};
}

std::vector<RuleId> rules_in(const std::vector<std::uint32_t>& order)
{
    std::vector<RuleId> out;
    for (auto v : order)
        out.push_back(RuleId{v});
    return out;
}

// smallest c with 2^c >= k
std::uint64_t ceil_log2_by_doubling(std::uint64_t k)
{
    std::uint64_t c = 0;
    for (std::uint64_t p = 1; p < k; p *= 2)
        ++c;
    return c;
}

// largest c with 2^c <= k
std::uint64_t floor_log2_by_halving(std::uint64_t k)
{
    std::uint64_t c = 0;
    while (k > 1) {
        k /= 2;
        ++c;
    }
    return c;
}

} // namespace

TEST(BlockInsert, IntoEmptyCostsNothing)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    LearnedSequence seq(3);
    const auto r = block_insert(seq, B, oracle);
    EXPECT_EQ(r.queries, 0u);
    EXPECT_EQ(ids_of(seq), std::vector<RuleId>{B});
}

TEST(BlockInsert, AppendsAfterScanningEverything)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    auto seq = sequence_of(3, {A, B});
    const auto r = block_insert(seq, C, oracle);
    EXPECT_EQ(r.queries, 2u);
    EXPECT_EQ(r.position, 2u);
    EXPECT_EQ(ids_of(seq), (std::vector<RuleId>{A, B, C}));
}

TEST(BlockInsert, StopsAtFirstAcceptingPosition)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    oracle.record_transcript(true);
    auto seq = sequence_of(3, {B, C});
    const auto r = block_insert(seq, A, oracle);
    EXPECT_EQ(r.queries, 1u);
    EXPECT_EQ(ids_of(seq), (std::vector<RuleId>{A, B, C}));
    ASSERT_EQ(oracle.transcript().size(), 1u);
    EXPECT_EQ(oracle.transcript()[0], std::make_pair(A, B));
}

TEST(BlockInsert, RejectsDuplicates)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    auto seq = sequence_of(3, {A, B});
    EXPECT_THROW(block_insert(seq, A, oracle), DuplicateRule);
    EXPECT_THROW(binary_insert(seq, B, oracle), DuplicateRule);
    EXPECT_EQ(oracle.query_count(), 0u);
    EXPECT_EQ(seq.size(), 2u);
}

TEST(BlockInsert, RejectsRulesOutsideUniverse)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    LearnedSequence seq(3);
    EXPECT_THROW(block_insert(seq, RuleId{3}, oracle), InvalidQuery);
}

TEST(BinaryInsert, IntoEmptyCostsNothing)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    LearnedSequence seq(3);
    EXPECT_EQ(binary_insert(seq, C, oracle).queries, 0u);
    EXPECT_EQ(seq.size(), 1u);
}

TEST(BinaryInsert, MiddleSlotTakesTwoQueries)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    oracle.record_transcript(true);
    auto seq = sequence_of(3, {A, C});
    const auto r = binary_insert(seq, B, oracle);
    EXPECT_EQ(r.queries, 2u);
    EXPECT_EQ(r.position, 1u);
    EXPECT_EQ(ids_of(seq), (std::vector<RuleId>{A, B, C}));
    ASSERT_EQ(oracle.transcript().size(), 2u);
    EXPECT_EQ(oracle.transcript()[0], std::make_pair(B, C)); // mid = 1
    EXPECT_EQ(oracle.transcript()[1], std::make_pair(B, A)); // mid = 0
}

TEST(BinaryInsert, AppendTakesOneQuery)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    auto seq = sequence_of(3, {A, B});
    const auto r = binary_insert(seq, C, oracle);
    EXPECT_EQ(r.queries, 1u);
    EXPECT_EQ(ids_of(seq), (std::vector<RuleId>{A, B, C}));
}

TEST(BinaryInsert, QueriesBoundedByLogOfSlotCount)
{
    // Every target slot among m+1 costs between floor and ceil of log2(m+1).
    for (std::uint32_t m = 1; m <= 40; ++m) {
        for (std::uint32_t slot = 0; slot <= m; ++slot) {
            // Ranks: known rules take 0..m skipping `slot`; the new rule (id m) takes `slot`.
            std::vector<std::uint32_t> ranks(m + 1);
            std::uint32_t next = 0;
            for (std::uint32_t id = 0; id < m; ++id) {
                if (next == slot)
                    ++next;
                ranks[id] = next++;
            }
            ranks[m] = slot;
            CountingOracle oracle{GroundTruthOrder(ranks)};
            LearnedSequence seq(m + 1);
            for (std::uint32_t id = 0; id < m; ++id)
                seq.insert_at(id, RuleId{id});
            const auto r = binary_insert(seq, RuleId{m}, oracle);
            EXPECT_LE(r.queries, ceil_log2_by_doubling(m + 1)) << "m=" << m << " slot=" << slot;
            EXPECT_GE(r.queries, floor_log2_by_halving(m + 1)) << "m=" << m << " slot=" << slot;
            EXPECT_EQ(r.position, slot);
        }
    }
}

TEST(LearnOrder, SingleRuleIsFree)
{
    for (auto s : {Strategy::block, Strategy::binary}) {
        for (auto m : {CostModel::comparisons_only, CostModel::comparisons_plus_placement}) {
            CountingOracle oracle(GroundTruthOrder::identity(1));
            const std::vector<RuleId> universe = {RuleId{0}};
            const auto out = learn_order(universe, oracle, s, m);
            EXPECT_EQ(out.steps, 0u);
            EXPECT_EQ(out.sequence.size(), 1u);
        }
    }
}

TEST(LearnOrder, BlockOnSortedPresentation)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    const auto universe = rules_in({0, 1, 2});
    const auto out = learn_order(universe, oracle, Strategy::block, CostModel::comparisons_only);
    EXPECT_EQ(out.queries, 3u);
    EXPECT_EQ(out.steps, 3u);
}

TEST(LearnOrder, EmptyUniverseIsAnError)
{
    CountingOracle oracle(GroundTruthOrder::identity(2));
    EXPECT_THROW(learn_order({}, oracle, Strategy::binary, CostModel::comparisons_only), EmptyUniverse);
}

TEST(LearnOrder, DuplicateInPresentationIsAnError)
{
    CountingOracle oracle(GroundTruthOrder::identity(3));
    const auto universe = rules_in({0, 1, 0});
    EXPECT_THROW(learn_order(universe, oracle, Strategy::block, CostModel::comparisons_only), DuplicateRule);
}

// Every ground truth and every presentation order for n <= 6.
TEST(LearnOrder, ExhaustiveCorrectnessAndCeilings)
{
    for (std::uint32_t n = 1; n <= 6; ++n) {
        std::vector<std::uint32_t> ranks(n);
        std::iota(ranks.begin(), ranks.end(), 0u);
        const auto block_cap = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const auto binary_cap = binary_steps(n);
        do {
            const GroundTruthOrder truth(ranks);
            const auto expected = truth.sorted_rules();
            std::vector<std::uint32_t> order(n);
            std::iota(order.begin(), order.end(), 0u);
            do {
                const auto presentation = rules_in(order);
                CountingOracle block_oracle(truth);
                CountingOracle binary_oracle(truth);
                const auto block = learn_order(presentation, block_oracle, Strategy::block, CostModel::comparisons_only);
                const auto binary =
                    learn_order(presentation, binary_oracle, Strategy::binary, CostModel::comparisons_only);
                ASSERT_EQ(ids_of(block.sequence), expected);
                ASSERT_EQ(ids_of(binary.sequence), expected);
                ASSERT_LE(block.queries, block_cap);
                ASSERT_LE(binary.queries, binary_cap);
            } while (std::next_permutation(order.begin(), order.end()));
        } while (std::next_permutation(ranks.begin(), ranks.end()));
    }
}

TEST(LearnOrder, RandomCorrectnessAndAccounting)
{
    std::mt19937_64 rng(20121017);
    for (std::uint32_t n : {50u, 500u}) {
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<std::uint32_t> ranks(n);
            std::iota(ranks.begin(), ranks.end(), 0u);
            std::shuffle(ranks.begin(), ranks.end(), rng);
            std::vector<std::uint32_t> order(n);
            std::iota(order.begin(), order.end(), 0u);
            std::shuffle(order.begin(), order.end(), rng);
            const GroundTruthOrder truth(ranks);
            const auto presentation = rules_in(order);

            for (auto s : {Strategy::block, Strategy::binary}) {
                CountingOracle plain(truth);
                CountingOracle placed(truth);
                const auto a = learn_order(presentation, plain, s, CostModel::comparisons_only);
                const auto b = learn_order(presentation, placed, s, CostModel::comparisons_plus_placement);
                ASSERT_TRUE(a.sequence.is_sorted_by(truth));
                ASSERT_EQ(a.sequence.size(), n);
                ASSERT_EQ(b.steps - a.steps, n - 1);
                ASSERT_EQ(a.queries, plain.query_count());
            }
        }
    }
}

TEST(LearnOrder, StrategiesAgreeOnFinalSequence)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 60);
        std::vector<std::uint32_t> ranks(n);
        std::iota(ranks.begin(), ranks.end(), 0u);
        std::shuffle(ranks.begin(), ranks.end(), rng);
        const GroundTruthOrder truth(ranks);
        const auto presentation = rules_in([&] {
            std::vector<std::uint32_t> v(n);
            std::iota(v.begin(), v.end(), 0u);
            std::shuffle(v.begin(), v.end(), rng);
            return v;
        }());
        CountingOracle o1(truth), o2(truth);
        const auto a = learn_order(presentation, o1, Strategy::block, CostModel::comparisons_only);
        const auto b = learn_order(presentation, o2, Strategy::binary, CostModel::comparisons_only);
        EXPECT_EQ(ids_of(a.sequence), ids_of(b.sequence));
    }
}

// The linear scan never asks about rules past the one it stops at.
TEST(LearnOrder, BlockTranscriptRespectsTransitivity)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 30);
        std::vector<std::uint32_t> ranks(n);
        std::iota(ranks.begin(), ranks.end(), 0u);
        std::shuffle(ranks.begin(), ranks.end(), rng);
        const GroundTruthOrder truth(ranks);
        CountingOracle oracle(truth);
        oracle.record_transcript(true);
        LearnedSequence seq(n);
        for (std::uint32_t id = 0; id < n; ++id) {
            const auto before = seq;
            const auto start = oracle.transcript().size();
            const auto r = block_insert(seq, RuleId{id}, oracle);
            const auto& t = oracle.transcript();
            ASSERT_EQ(t.size() - start, r.queries);
            for (std::size_t q = 0; q < r.queries; ++q) {
                ASSERT_EQ(t[start + q].first, RuleId{id});
                ASSERT_EQ(t[start + q].second, before[q]);
            }
            ASSERT_EQ(r.queries, r.position < before.size() ? r.position + 1 : before.size());
        }
    }
}
