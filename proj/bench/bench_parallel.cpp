// Serial reference vs OpenMP kernels for the two enumeration-heavy workloads.
#include "ruleorder/harness.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace ruleorder;

namespace {

double time_ms(const std::function<void()>& fn, int reps)
{
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i)
        fn();
    const auto finish = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(finish - start).count() / reps;
}

void compare(const char* label, const std::function<void()>& serial_fn, const std::function<void()>& parallel_fn,
             int reps)
{
    const double s = time_ms(serial_fn, reps);
    const double p = time_ms(parallel_fn, reps);
    std::printf("%-40s serial %9.2f ms   openmp %9.2f ms   x%.2f\n", label, s, p, s / p);
}

} // namespace

int main()
{
    std::printf("threads: %d\n", omp_get_max_threads());

    for (auto strategy : {Strategy::block, Strategy::binary}) {
        char label[64];
        std::snprintf(label, sizeof label, "exhaustive n=8 %s", to_string(strategy).data());
        compare(
            label, [&] { serial::exhaustive_worst_case(8, strategy, CostModel::comparisons_only, false); },
            [&] { exhaustive_worst_case(8, strategy, CostModel::comparisons_only, false); }, 3);

        std::snprintf(label, sizeof label, "exhaustive n=5 varied %s", to_string(strategy).data());
        compare(
            label, [&] { serial::exhaustive_worst_case(5, strategy, CostModel::comparisons_only, true); },
            [&] { exhaustive_worst_case(5, strategy, CostModel::comparisons_only, true); }, 3);

        const RandomTrialConfig cfg{500, strategy, 1000, 42, CostModel::comparisons_only, true};
        std::snprintf(label, sizeof label, "random n=500 x1000 %s", to_string(strategy).data());
        compare(
            label, [&] { serial::random_trial_results(cfg); }, [&] { random_trial_results(cfg); }, 3);
    }
}
