#include "ruleorder/cli.hpp"

#include "ruleorder/format.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace ruleorder::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::map<std::string, Strategy> kStrategies = {{"block", Strategy::block}, {"binary", Strategy::binary}};

const std::map<std::string, CostModel> kCostModels = {
    {"comparisons", CostModel::comparisons_only},
    {"comparisons-only", CostModel::comparisons_only},
    {"comparisons-plus-placement", CostModel::comparisons_plus_placement},
};

const std::map<std::string, SearchMode> kModes = {{"exhaustive", SearchMode::exhaustive},
                                                  {"adversarial", SearchMode::adversarial}};

const std::map<std::string, OutputFormat> kFormats = {
    {"human", OutputFormat::human}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

std::string read_permutation_source(const std::string& arg)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec))
        return arg;
    std::ifstream in(arg);
    if (!in)
        throw std::runtime_error("cannot open permutation file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<std::uint32_t> parse_permutation(std::string_view text)
{
    std::vector<std::uint32_t> ranks;
    std::size_t data_line = 0;
    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        ++line_no;
        const auto eol = text.find('\n');
        const auto line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (line.empty() || line.front() == '#')
            continue;
        if (data_line != 0)
            throw PermutationParseError(line_no, "expected a single line of ranks (first was line " +
                                                     std::to_string(data_line) + ")");
        data_line = line_no;

        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            const auto token = trim(rest.substr(0, comma));
            std::uint32_t v = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
                throw PermutationParseError(line_no, "'" + std::string(token) + "' is not a non-negative integer");
            ranks.push_back(v);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }
    if (data_line == 0)
        throw PermutationParseError(line_no, "no ranks found");
    if (!is_permutation_of_iota(ranks))
        throw PermutationParseError(data_line, "ranks are not a permutation of 0.." + std::to_string(ranks.size() - 1));
    return ranks;
}

int exit_code_for(const TrialResult& t) noexcept
{
    return t.correct ? kExitOk : kExitInvariant;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Learn a hidden rule order with a counting comparison oracle"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::string format_name = "human";
    std::string strategy_name;
    std::string model_name = "comparisons";
    std::string mode_name = "exhaustive";
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    std::string permutation;
    bool adversarial = false;
    bool shuffle_presentation = false;
    bool vary_presentation = false;

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Number of rules")->required()->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max())); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"human", "csv", "json"}));
    };
    auto add_strategy = [&](CLI::App* sub) {
        sub->add_option("--strategy", strategy_name, "block or binary")->required()->check(CLI::IsMember(kStrategies));
    };
    auto add_cost_model = [&](CLI::App* sub) {
        sub->add_option("--cost-model", model_name, "comparisons or comparisons-plus-placement")
            ->check(CLI::IsMember(kCostModels));
    };

    auto* predict = app.add_subcommand("predict", "Closed-form step counts for n rules");
    add_n(predict);
    add_format(predict);

    auto* learn = app.add_subcommand("learn", "Run one learner against a hidden order");
    add_n(learn);
    add_strategy(learn);
    add_cost_model(learn);
    add_format(learn);
    auto* seed_opt = learn->add_option("--seed", seed, "Seed for a random ground truth");
    auto* perm_opt = learn->add_option("--permutation", permutation, "Ranks by rule id, inline or as a file path");
    auto* adv_opt = learn->add_flag("--adversarial", adversarial, "Use the worst-case instance for the strategy");
    seed_opt->excludes(perm_opt)->excludes(adv_opt);
    perm_opt->excludes(adv_opt);
    learn->add_flag("--shuffle-presentation", shuffle_presentation, "Shuffle arrival order (with --seed)");

    auto* worst = app.add_subcommand("worst-case", "Maximum step count by enumeration or construction");
    add_n(worst);
    add_strategy(worst);
    add_cost_model(worst);
    add_format(worst);
    worst->add_option("--mode", mode_name, "exhaustive or adversarial")->check(CLI::IsMember(kModes));
    worst->add_flag("--vary-presentation", vary_presentation, "Also enumerate arrival orders (exhaustive)");

    auto* random = app.add_subcommand("trials", "Seeded random trials summarised as min/mean/max");
    add_n(random);
    add_strategy(random);
    add_cost_model(random);
    add_format(random);
    random->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    random->add_option("--seed", seed, "Base seed");
    random->add_flag("--shuffle-presentation", shuffle_presentation, "Shuffle arrival order per trial");

    auto* table = app.add_subcommand("table", "Step counts for 27 and 1000 rules");
    add_format(table);

    std::vector<const char*> argv;
    argv.push_back("ruleorder");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const OutputFormat fmt = kFormats.at(format_name);
    const Strategy strategy = strategy_name.empty() ? Strategy::binary : kStrategies.at(strategy_name);
    const CostModel model = kCostModels.at(model_name);
    const SearchMode mode = kModes.at(mode_name);

    try {
        if (predict->parsed()) {
            out << render({to_record(report(n))}, fmt, false);
            return kExitOk;
        }

        if (learn->parsed()) {
            std::string source;
            TrialResult t;
            if (adversarial) {
                const auto inst = adversarial_ground_truth(n, strategy);
                t = run_trial(inst.ground_truth, inst.presentation, strategy, model);
                source = "adversarial";
            } else if (!permutation.empty()) {
                const auto ranks = parse_permutation(read_permutation_source(permutation));
                if (ranks.size() != n) {
                    err << "error: permutation has " << ranks.size() << " ranks but --n is " << n << '\n';
                    return kExitUsage;
                }
                t = run_trial(GroundTruthOrder(ranks), identity_presentation(n), strategy, model);
                source = "permutation";
            } else {
                RandomTrialConfig cfg{n, strategy, 1, seed, model, shuffle_presentation};
                t = random_trial_results(cfg).front();
                source = "seed:" + std::to_string(seed);
            }
            out << render({to_record(t, model, source)}, fmt, false);
            const int code = exit_code_for(t);
            if (code != kExitOk)
                err << "internal error: learned order does not match the ground truth\n";
            return code;
        }

        if (worst->parsed()) {
            const auto r = mode == SearchMode::exhaustive ? exhaustive_worst_case(n, strategy, model, vary_presentation)
                                                          : adversarial_worst_case(n, strategy, model);
            out << render({to_record(r)}, fmt, false);
            if (!r.all_correct) {
                err << "internal error: an instance was learned incorrectly\n";
                return kExitInvariant;
            }
            return kExitOk;
        }

        if (random->parsed()) {
            RandomTrialConfig cfg{n, strategy, trials, seed, model, shuffle_presentation};
            const auto s = random_trials(cfg);
            out << render({to_record(s)}, fmt, false);
            if (!s.all_correct || !s.within_ceiling) {
                err << "internal error: a trial was incorrect or exceeded its ceiling\n";
                return kExitInvariant;
            }
            return kExitOk;
        }

        out << render_comparison_table(reproduce_comparison_table(), fmt);
        return kExitOk;
    } catch (const PermutationParseError& e) {
        err << "error: permutation " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace ruleorder::cli
