#pragma once

#include "ruleorder/harness.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ruleorder::detail {

std::vector<RuleId> to_rules(std::span<const std::uint32_t> ids);

void check_caps(std::size_t n, bool vary_presentation);

void validate(const RandomTrialConfig& cfg);

/// One seeded trial; a pure function of (cfg, trial).
TrialResult random_trial(const RandomTrialConfig& cfg, std::uint64_t trial);

} // namespace ruleorder::detail
