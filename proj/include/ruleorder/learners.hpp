#pragma once

#include "ruleorder/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ruleorder {

class DuplicateRule : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyUniverse : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Strategy { block, binary };

/// How a run is converted to a step count. comparisons_plus_placement charges
/// one extra step for every inserted rule after the first.
enum class CostModel { comparisons_only, comparisons_plus_placement };

std::string_view to_string(Strategy s) noexcept;
std::string_view to_string(CostModel m) noexcept;

/// Rules learned so far, kept in ascending rank order by the learners.
class LearnedSequence {
public:
    explicit LearnedSequence(std::size_t universe_size) : present_(universe_size, false) {}

    std::size_t size() const noexcept { return seq_.size(); }
    bool empty() const noexcept { return seq_.empty(); }
    std::size_t universe_size() const noexcept { return present_.size(); }
    RuleId operator[](std::size_t i) const { return seq_[i]; }
    std::span<const RuleId> rules() const noexcept { return seq_; }

    bool contains(RuleId id) const { return id.value < present_.size() && present_[id.value]; }

    /// Throws DuplicateRule if `id` is already present, InvalidQuery if outside the universe.
    void insert_at(std::size_t pos, RuleId id);

    /// True when ranks strictly increase along the sequence.
    bool is_sorted_by(const GroundTruthOrder& order) const;

private:
    std::vector<RuleId> seq_;
    std::vector<bool> present_;
};

struct InsertOutcome {
    std::size_t position = 0;
    std::uint64_t queries = 0;
};

/// Linear scan: test x against each known rule from the front and stop at the
/// first one x precedes; append if there is none.
InsertOutcome block_insert(LearnedSequence& seq, RuleId x, CountingOracle& oracle);

/// Binary search over the m+1 insertion slots with window [lo, hi) and
/// mid = floor((lo + hi) / 2). Uses at most ceil(log2(m + 1)) queries.
InsertOutcome binary_insert(LearnedSequence& seq, RuleId x, CountingOracle& oracle);

InsertOutcome insert_rule(Strategy s, LearnedSequence& seq, RuleId x, CountingOracle& oracle);

struct LearnOutcome {
    LearnedSequence sequence;
    std::uint64_t queries = 0;
    std::uint64_t steps = 0;
};

/// steps for a run that used `queries` comparisons to place n rules.
std::uint64_t steps_for(CostModel model, std::uint64_t queries, std::size_t n) noexcept;

/// Inserts `presentation` one rule at a time. Queries are counted from the
/// oracle's state on entry, so a shared oracle need not be reset.
LearnOutcome learn_order(std::span<const RuleId> presentation, CountingOracle& oracle, Strategy strategy,
                         CostModel model);

} // namespace ruleorder
