#pragma once

#include "ruleorder/complexity.hpp"
#include "ruleorder/learners.hpp"
#include "ruleorder/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ruleorder {

/// Thrown when a request exceeds the enumeration caps.
class SizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxExhaustiveFixed = 8;
inline constexpr std::size_t kMaxExhaustiveVaried = 5;

/// Random instances: one std::mt19937_64 per trial seeded with
/// splitmix64(seed + trial), then a Fisher-Yates shuffle from the back using
/// rejection-sampled bounded draws. Fully specified, so summaries are
/// reproducible across standard libraries.
inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64(seed+trial)/fisher-yates-rejection";

struct TrialResult {
    Strategy strategy = Strategy::block;
    std::size_t n = 0;
    std::uint64_t queries = 0;
    std::uint64_t steps = 0;
    bool correct = false;
    std::uint64_t provenance = 0; // seed-derived trial index or enumeration index

    friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Worst-case comparisons at n: n(n-1)/2 for block, binary_steps(n) for binary.
std::uint64_t query_ceiling(Strategy s, std::size_t n);

/// Fresh oracle per call. `presentation` must be a permutation of [0, n).
TrialResult run_trial(const GroundTruthOrder& ground_truth, std::span<const RuleId> presentation,
                      Strategy strategy, CostModel model, std::uint64_t provenance = 0);

std::vector<RuleId> identity_presentation(std::size_t n);

enum class SearchMode { exhaustive, adversarial };
std::string_view to_string(SearchMode m) noexcept;

struct WorstCaseReport {
    Strategy strategy = Strategy::block;
    CostModel model = CostModel::comparisons_only;
    SearchMode mode = SearchMode::exhaustive;
    std::size_t n = 0;
    bool vary_presentation = false;
    std::uint64_t max_queries = 0;
    std::uint64_t max_steps = 0;
    std::uint64_t instances = 0;
    bool all_correct = true;
    // First instance in lexicographic (ground truth, presentation) order that attains max_queries.
    std::vector<std::uint32_t> ground_truth;
    std::vector<std::uint32_t> presentation;

    friend bool operator==(const WorstCaseReport&, const WorstCaseReport&) = default;
};

/// Enumerates every ground truth (and every presentation order when
/// `vary_presentation`), parallelised with OpenMP. Caps: n <= 8 with a fixed
/// presentation, n <= 5 when presentations vary. Throws SizeError above them.
WorstCaseReport exhaustive_worst_case(std::size_t n, Strategy strategy, CostModel model, bool vary_presentation);

struct AdversarialInstance {
    GroundTruthOrder ground_truth;
    std::vector<RuleId> presentation;
};

/// Builds an instance that drives `strategy` to its worst case. Presentation
/// is id order. For binary, each new rule is placed at a slot of maximal
/// search depth among the current slots.
AdversarialInstance adversarial_ground_truth(std::size_t n, Strategy strategy);

/// Runs the adversarial instance and reports it as a worst case.
WorstCaseReport adversarial_worst_case(std::size_t n, Strategy strategy, CostModel model);

struct RandomTrialConfig {
    std::size_t n = 1;
    Strategy strategy = Strategy::binary;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    CostModel model = CostModel::comparisons_only;
    bool shuffle_presentation = false;
};

struct RandomSummary {
    std::size_t n = 0;
    Strategy strategy = Strategy::binary;
    CostModel model = CostModel::comparisons_only;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t min_queries = 0;
    std::uint64_t max_queries = 0;
    double mean_queries = 0.0;
    std::uint64_t ceiling = 0;
    bool all_correct = true;
    bool within_ceiling = true;

    friend bool operator==(const RandomSummary&, const RandomSummary&) = default;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Uniform random permutation of [0, n) for the given trial stream.
std::vector<std::uint32_t> random_permutation(std::size_t n, std::uint64_t seed, std::uint64_t trial);

/// One TrialResult per trial, in trial order. Trials run in parallel.
std::vector<TrialResult> random_trial_results(const RandomTrialConfig& cfg);

/// Order-insensitive reduction of a result stream.
RandomSummary summarize(const RandomTrialConfig& cfg, std::span<const TrialResult> results);

/// Throws DomainError when trials == 0.
RandomSummary random_trials(const RandomTrialConfig& cfg);

/// Serial reference implementations of the parallel kernels above. Kept for
/// equivalence tests and benchmarking; they enumerate with std::next_permutation
/// rather than by unranking.
namespace serial {
WorstCaseReport exhaustive_worst_case(std::size_t n, Strategy strategy, CostModel model, bool vary_presentation);
std::vector<TrialResult> random_trial_results(const RandomTrialConfig& cfg);
} // namespace serial

struct ComparisonTableRow {
    std::uint64_t n = 0;
    BigInt naive;
    std::uint64_t s_n = 0;
    std::uint64_t b_n = 0;
    double speedup = 0.0;
    double block_years = 0.0;
    double binary_years = 0.0;
};

inline constexpr double kStepsPerDay = 2.0;

/// Rows for n = 27 and n = 1000 at two steps per day.
std::vector<ComparisonTableRow> reproduce_comparison_table();

} // namespace ruleorder
