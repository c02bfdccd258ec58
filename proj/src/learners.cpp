#include "ruleorder/learners.hpp"

#include <cassert>
#include <string>

namespace ruleorder {

std::string_view to_string(Strategy s) noexcept
{
    return s == Strategy::block ? "block" : "binary";
}

std::string_view to_string(CostModel m) noexcept
{
    return m == CostModel::comparisons_only ? "comparisons" : "comparisons-plus-placement";
}

void LearnedSequence::insert_at(std::size_t pos, RuleId id)
{
    if (id.value >= present_.size())
        throw InvalidQuery("rule " + std::to_string(id.value) + " outside universe of size " +
                           std::to_string(present_.size()));
    if (present_[id.value])
        throw DuplicateRule("rule " + std::to_string(id.value) + " is already in the sequence");
    present_[id.value] = true;
    seq_.insert(seq_.begin() + static_cast<std::ptrdiff_t>(pos), id);
}

bool LearnedSequence::is_sorted_by(const GroundTruthOrder& order) const
{
    for (std::size_t i = 1; i < seq_.size(); ++i)
        if (order.rank(seq_[i - 1]) >= order.rank(seq_[i]))
            return false;
    return true;
}

namespace {

void check_insertable(const LearnedSequence& seq, RuleId x, const CountingOracle& oracle)
{
    if (x.value >= oracle.universe_size())
        throw InvalidQuery("rule " + std::to_string(x.value) + " outside universe of size " +
                           std::to_string(oracle.universe_size()));
    if (seq.contains(x))
        throw DuplicateRule("rule " + std::to_string(x.value) + " is already in the sequence");
    assert(seq.is_sorted_by(oracle.order()) && "learned sequence must be sorted by rank");
}

} // namespace

InsertOutcome block_insert(LearnedSequence& seq, RuleId x, CountingOracle& oracle)
{
    check_insertable(seq, x, oracle);
    const auto before = oracle.query_count();

    std::size_t pos = 0;
    while (pos < seq.size() && !oracle.precedes(x, seq[pos]))
        ++pos;

    seq.insert_at(pos, x);
    return {pos, oracle.query_count() - before};
}

InsertOutcome binary_insert(LearnedSequence& seq, RuleId x, CountingOracle& oracle)
{
    check_insertable(seq, x, oracle);
    const auto before = oracle.query_count();

    std::size_t lo = 0;
    std::size_t hi = seq.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (oracle.precedes(x, seq[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }

    seq.insert_at(lo, x);
    return {lo, oracle.query_count() - before};
}

InsertOutcome insert_rule(Strategy s, LearnedSequence& seq, RuleId x, CountingOracle& oracle)
{
    return s == Strategy::block ? block_insert(seq, x, oracle) : binary_insert(seq, x, oracle);
}

std::uint64_t steps_for(CostModel model, std::uint64_t queries, std::size_t n) noexcept
{
    if (model == CostModel::comparisons_only || n == 0)
        return queries;
    return queries + (n - 1);
}

LearnOutcome learn_order(std::span<const RuleId> presentation, CountingOracle& oracle, Strategy strategy,
                         CostModel model)
{
    if (presentation.empty())
        throw EmptyUniverse("cannot learn the order of an empty rule set");

    LearnOutcome out{LearnedSequence(oracle.universe_size()), 0, 0};
    for (RuleId x : presentation)
        out.queries += insert_rule(strategy, out.sequence, x, oracle).queries;
    out.steps = steps_for(model, out.queries, presentation.size());
    return out;
}

} // namespace ruleorder
