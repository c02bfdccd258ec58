#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ruleorder {

/// Thrown for a reflexive precedence query or an id outside the universe.
class InvalidQuery : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a rank vector or presentation order is not a permutation.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Index of a rule within a universe of n rules.
struct RuleId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(RuleId, RuleId) = default;
};

/// Hidden strict total order: rule i sits at rank()[i].
class GroundTruthOrder {
public:
    /// Validates that `ranks` is a bijection on [0, ranks.size()).
    explicit GroundTruthOrder(std::vector<std::uint32_t> ranks);

    static GroundTruthOrder identity(std::size_t n);

    std::size_t size() const noexcept { return ranks_.size(); }
    std::uint32_t rank(RuleId id) const { return ranks_.at(id.value); }
    std::span<const std::uint32_t> ranks() const noexcept { return ranks_; }

    /// Rules listed from lowest to highest rank.
    std::vector<RuleId> sorted_rules() const;

    friend bool operator==(const GroundTruthOrder&, const GroundTruthOrder&) = default;

private:
    std::vector<std::uint32_t> ranks_;
};

/// Returns true when `values` holds each integer in [0, values.size()) exactly once.
bool is_permutation_of_iota(std::span<const std::uint32_t> values);

/// Answers "does a come before b?" against a ground truth and counts every answer.
class CountingOracle {
public:
    explicit CountingOracle(GroundTruthOrder order) : order_(std::move(order)) {}

    /// Throws InvalidQuery when a == b or either id is outside the universe.
    /// A rejected query is not counted.
    bool precedes(RuleId a, RuleId b);

    std::uint64_t query_count() const noexcept { return queries_; }
    void reset() noexcept
    {
        queries_ = 0;
        transcript_.clear();
    }

    const GroundTruthOrder& order() const noexcept { return order_; }
    std::size_t universe_size() const noexcept { return order_.size(); }

    /// When enabled every answered query is appended to transcript().
    void record_transcript(bool on) noexcept { recording_ = on; }
    const std::vector<std::pair<RuleId, RuleId>>& transcript() const noexcept { return transcript_; }

private:
    GroundTruthOrder order_;
    std::uint64_t queries_ = 0;
    bool recording_ = false;
    std::vector<std::pair<RuleId, RuleId>> transcript_;
};

} // namespace ruleorder
