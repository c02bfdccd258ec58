#include "ruleorder/harness.hpp"

#include "harness_detail.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace ruleorder {

std::string_view to_string(SearchMode m) noexcept
{
    return m == SearchMode::exhaustive ? "exhaustive" : "adversarial";
}

std::uint64_t query_ceiling(Strategy s, std::size_t n)
{
    if (n == 0)
        return 0;
    if (s == Strategy::block)
        return static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return binary_steps(n);
}

std::vector<RuleId> identity_presentation(std::size_t n)
{
    std::vector<RuleId> out(n);
    for (std::uint32_t i = 0; i < n; ++i)
        out[i] = RuleId{i};
    return out;
}

TrialResult run_trial(const GroundTruthOrder& ground_truth, std::span<const RuleId> presentation,
                      Strategy strategy, CostModel model, std::uint64_t provenance)
{
    const std::size_t n = ground_truth.size();
    if (presentation.size() != n)
        throw ValidationError("presentation order has " + std::to_string(presentation.size()) +
                              " rules, ground truth has " + std::to_string(n));
    std::vector<std::uint32_t> ids(n);
    std::transform(presentation.begin(), presentation.end(), ids.begin(), [](RuleId r) { return r.value; });
    if (!is_permutation_of_iota(ids))
        throw ValidationError("presentation order is not a permutation of the rule universe");

    CountingOracle oracle(ground_truth);
    auto learned = learn_order(presentation, oracle, strategy, model);

    TrialResult r;
    r.strategy = strategy;
    r.n = n;
    r.queries = learned.queries;
    r.steps = learned.steps;
    r.correct = learned.sequence.size() == n && learned.sequence.is_sorted_by(ground_truth);
    r.provenance = provenance;
    return r;
}

namespace {

std::uint64_t factorial_u64(std::size_t n)
{
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// Lexicographic unranking via the factorial number system.
std::vector<std::uint32_t> unrank_permutation(std::size_t n, std::uint64_t index)
{
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint32_t> out;
    out.reserve(n);
    std::uint64_t radix = factorial_u64(n);
    for (std::size_t remaining = n; remaining > 0; --remaining) {
        radix /= remaining;
        const auto digit = static_cast<std::size_t>(index / radix);
        index %= radix;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

struct LocalBest {
    std::uint64_t queries = 0;
    std::uint64_t steps = 0;
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    bool all_correct = true;

    void take(const TrialResult& r, std::uint64_t idx)
    {
        all_correct = all_correct && r.correct;
        if (index == std::numeric_limits<std::uint64_t>::max() || r.queries > queries ||
            (r.queries == queries && idx < index)) {
            queries = r.queries;
            steps = r.steps;
            index = idx;
        }
    }

    void merge(const LocalBest& o)
    {
        all_correct = all_correct && o.all_correct;
        if (o.index == std::numeric_limits<std::uint64_t>::max())
            return;
        if (index == std::numeric_limits<std::uint64_t>::max() || o.queries > queries ||
            (o.queries == queries && o.index < index)) {
            queries = o.queries;
            steps = o.steps;
            index = o.index;
        }
    }
};

// Draws uniformly from [0, bound) by rejecting the low 2^64 mod bound values.
std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = eng();
        if (r >= threshold)
            return r % bound;
    }
}

void shuffle_in_place(std::vector<std::uint32_t>& v, std::mt19937_64& eng)
{
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(bounded(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial)
{
    return std::mt19937_64(splitmix64(seed + trial));
}

// Number of comparisons the binary-insert loop makes over m elements when the
// new rule belongs at slot `target`.
std::uint64_t search_depth(std::size_t m, std::size_t target)
{
    std::size_t lo = 0;
    std::size_t hi = m;
    std::uint64_t depth = 0;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++depth;
        if (target <= mid)
            hi = mid;
        else
            lo = mid + 1;
    }
    return depth;
}

} // namespace

WorstCaseReport exhaustive_worst_case(std::size_t n, Strategy strategy, CostModel model, bool vary_presentation)
{
    detail::check_caps(n, vary_presentation);
    const std::uint64_t perms = factorial_u64(n);
    const std::uint64_t total = vary_presentation ? perms * perms : perms;
    const auto fixed_presentation = identity_presentation(n);

    LocalBest best;
#pragma omp parallel
    {
        LocalBest local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            const auto idx = static_cast<std::uint64_t>(i);
            const GroundTruthOrder gt(unrank_permutation(n, vary_presentation ? idx / perms : idx));
            const auto presentation =
                vary_presentation ? detail::to_rules(unrank_permutation(n, idx % perms)) : fixed_presentation;
            local.take(run_trial(gt, presentation, strategy, model, idx), idx);
        }
#pragma omp critical
        best.merge(local);
    }

    WorstCaseReport r;
    r.strategy = strategy;
    r.model = model;
    r.mode = SearchMode::exhaustive;
    r.n = n;
    r.vary_presentation = vary_presentation;
    r.max_queries = best.queries;
    r.max_steps = best.steps;
    r.instances = total;
    r.all_correct = best.all_correct;
    r.ground_truth = unrank_permutation(n, vary_presentation ? best.index / perms : best.index);
    if (vary_presentation) {
        r.presentation = unrank_permutation(n, best.index % perms);
    } else {
        r.presentation.resize(n);
        std::iota(r.presentation.begin(), r.presentation.end(), 0u);
    }
    return r;
}

AdversarialInstance adversarial_ground_truth(std::size_t n, Strategy strategy)
{
    if (n == 0)
        throw EmptyUniverse("adversarial instance needs n >= 1");
    auto presentation = identity_presentation(n);
    if (strategy == Strategy::block)
        return {GroundTruthOrder::identity(n), std::move(presentation)};

    // Rule ids listed in the order the adversary commits to.
    std::vector<std::uint32_t> layout;
    layout.reserve(n);
    for (std::uint32_t id = 0; id < n; ++id) {
        const std::size_t m = layout.size();
        std::size_t slot = 0;
        std::uint64_t deepest = 0;
        for (std::size_t p = 0; p <= m; ++p) {
            const auto d = search_depth(m, p);
            if (d > deepest) {
                deepest = d;
                slot = p;
            }
        }
        layout.insert(layout.begin() + static_cast<std::ptrdiff_t>(slot), id);
    }
    std::vector<std::uint32_t> ranks(n);
    for (std::uint32_t pos = 0; pos < n; ++pos)
        ranks[layout[pos]] = pos;
    return {GroundTruthOrder(std::move(ranks)), std::move(presentation)};
}

WorstCaseReport adversarial_worst_case(std::size_t n, Strategy strategy, CostModel model)
{
    const auto inst = adversarial_ground_truth(n, strategy);
    const auto t = run_trial(inst.ground_truth, inst.presentation, strategy, model);

    WorstCaseReport r;
    r.strategy = strategy;
    r.model = model;
    r.mode = SearchMode::adversarial;
    r.n = n;
    r.max_queries = t.queries;
    r.max_steps = t.steps;
    r.instances = 1;
    r.all_correct = t.correct;
    r.ground_truth.assign(inst.ground_truth.ranks().begin(), inst.ground_truth.ranks().end());
    for (RuleId id : inst.presentation)
        r.presentation.push_back(id.value);
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<std::uint32_t> random_permutation(std::size_t n, std::uint64_t seed, std::uint64_t trial)
{
    auto eng = trial_engine(seed, trial);
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    shuffle_in_place(v, eng);
    return v;
}

namespace detail {

std::vector<RuleId> to_rules(std::span<const std::uint32_t> ids)
{
    std::vector<RuleId> out(ids.size());
    std::transform(ids.begin(), ids.end(), out.begin(), [](std::uint32_t v) { return RuleId{v}; });
    return out;
}

void check_caps(std::size_t n, bool vary_presentation)
{
    if (n == 0)
        throw EmptyUniverse("exhaustive search needs n >= 1");
    const std::size_t cap = vary_presentation ? kMaxExhaustiveVaried : kMaxExhaustiveFixed;
    if (n > cap)
        throw SizeError("exhaustive search over " +
                        std::string(vary_presentation ? "ground truths and presentations" : "ground truths") +
                        " is capped at n = " + std::to_string(cap) + " (requested n = " + std::to_string(n) + ")");
}

// Shared by the parallel and serial paths: one trial is a pure function of
// (cfg, trial index).
TrialResult random_trial(const RandomTrialConfig& cfg, std::uint64_t trial)
{
    auto eng = trial_engine(cfg.seed, trial);
    std::vector<std::uint32_t> ranks(cfg.n);
    std::iota(ranks.begin(), ranks.end(), 0u);
    shuffle_in_place(ranks, eng);

    std::vector<std::uint32_t> order(cfg.n);
    std::iota(order.begin(), order.end(), 0u);
    if (cfg.shuffle_presentation)
        shuffle_in_place(order, eng);

    return run_trial(GroundTruthOrder(std::move(ranks)), to_rules(order), cfg.strategy, cfg.model, trial);
}

void validate(const RandomTrialConfig& cfg)
{
    if (cfg.trials == 0)
        throw DomainError("random_trials: trials must be at least 1");
    if (cfg.n == 0)
        throw EmptyUniverse("random_trials: n must be at least 1");
}

} // namespace detail

std::vector<TrialResult> random_trial_results(const RandomTrialConfig& cfg)
{
    detail::validate(cfg);
    std::vector<TrialResult> out(cfg.trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t)
        out[static_cast<std::size_t>(t)] = detail::random_trial(cfg, static_cast<std::uint64_t>(t));
    return out;
}

RandomSummary summarize(const RandomTrialConfig& cfg, std::span<const TrialResult> results)
{
    RandomSummary s;
    s.n = cfg.n;
    s.strategy = cfg.strategy;
    s.model = cfg.model;
    s.trials = results.size();
    s.seed = cfg.seed;
    s.ceiling = query_ceiling(cfg.strategy, cfg.n);
    if (results.empty())
        return s;

    std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t hi = 0;
    std::uint64_t sum = 0;
    bool correct = true;
    for (const auto& r : results) {
        lo = std::min(lo, r.queries);
        hi = std::max(hi, r.queries);
        sum += r.queries;
        correct = correct && r.correct;
    }
    s.min_queries = lo;
    s.max_queries = hi;
    s.mean_queries = static_cast<double>(sum) / static_cast<double>(results.size());
    s.all_correct = correct;
    s.within_ceiling = hi <= s.ceiling;
    return s;
}

RandomSummary random_trials(const RandomTrialConfig& cfg)
{
    const auto results = random_trial_results(cfg);
    return summarize(cfg, results);
}

std::vector<ComparisonTableRow> reproduce_comparison_table()
{
    std::vector<ComparisonTableRow> rows;
    for (std::uint64_t n : {27u, 1000u}) {
        ComparisonTableRow row;
        row.n = n;
        row.naive = naive_steps(n);
        row.s_n = block_steps_exact(n);
        row.b_n = binary_steps(n);
        row.speedup = speedup(n);
        row.block_years = learning_duration(row.s_n, kStepsPerDay);
        row.binary_years = learning_duration(row.b_n, kStepsPerDay);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ruleorder
