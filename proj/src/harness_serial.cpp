#include "ruleorder/harness.hpp"

#include "harness_detail.hpp"

#include <algorithm>
#include <numeric>

namespace ruleorder::serial {

WorstCaseReport exhaustive_worst_case(std::size_t n, Strategy strategy, CostModel model, bool vary_presentation)
{
    detail::check_caps(n, vary_presentation);

    WorstCaseReport r;
    r.strategy = strategy;
    r.model = model;
    r.mode = SearchMode::exhaustive;
    r.n = n;
    r.vary_presentation = vary_presentation;

    std::vector<std::uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0u);
    std::uint64_t index = 0;
    bool first = true;
    do {
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0u);
        const GroundTruthOrder gt(ranks);
        do {
            const auto t = run_trial(gt, detail::to_rules(order), strategy, model, index);
            r.all_correct = r.all_correct && t.correct;
            if (first || t.queries > r.max_queries) {
                first = false;
                r.max_queries = t.queries;
                r.max_steps = t.steps;
                r.ground_truth = ranks;
                r.presentation = order;
            }
            ++index;
        } while (vary_presentation && std::next_permutation(order.begin(), order.end()));
    } while (std::next_permutation(ranks.begin(), ranks.end()));

    r.instances = index;
    return r;
}

std::vector<TrialResult> random_trial_results(const RandomTrialConfig& cfg)
{
    detail::validate(cfg);
    std::vector<TrialResult> out;
    out.reserve(cfg.trials);
    for (std::uint64_t t = 0; t < cfg.trials; ++t)
        out.push_back(detail::random_trial(cfg, t));
    return out;
}

} // namespace ruleorder::serial
