#include "ruleorder/oracle.hpp"

#include <numeric>
#include <string>

namespace ruleorder {

bool is_permutation_of_iota(std::span<const std::uint32_t> values)
{
    std::vector<bool> seen(values.size(), false);
    for (auto v : values) {
        if (v >= values.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

GroundTruthOrder::GroundTruthOrder(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks))
{
    if (!is_permutation_of_iota(ranks_))
        throw ValidationError("rank vector of size " + std::to_string(ranks_.size()) +
                              " is not a permutation of 0.." + std::to_string(ranks_.size()) + "-1");
}

GroundTruthOrder GroundTruthOrder::identity(std::size_t n)
{
    std::vector<std::uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0u);
    return GroundTruthOrder(std::move(ranks));
}

std::vector<RuleId> GroundTruthOrder::sorted_rules() const
{
    std::vector<RuleId> out(ranks_.size());
    for (std::uint32_t id = 0; id < ranks_.size(); ++id)
        out[ranks_[id]] = RuleId{id};
    return out;
}

bool CountingOracle::precedes(RuleId a, RuleId b)
{
    const auto n = order_.size();
    if (a.value >= n || b.value >= n)
        throw InvalidQuery("rule id outside universe of size " + std::to_string(n));
    if (a == b)
        throw InvalidQuery("reflexive query on rule " + std::to_string(a.value));

    ++queries_;
    if (recording_)
        transcript_.emplace_back(a, b);
    const auto ranks = order_.ranks();
    return ranks[a.value] < ranks[b.value];
}

} // namespace ruleorder
