#include "ruleorder/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace ruleorder {

std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "human")
        return OutputFormat::human;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    return std::nullopt;
}

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Record to_record(const ComplexityReport& r)
{
    Record rec;
    rec.add("n", r.n)
        .add("s_n", r.s_n)
        .add("b_n", r.b_n)
        .add("b_f_n", r.b_f_n)
        .add("log_factorial", r.log_factorial);
    if (r.speedup)
        rec.add("speedup", *r.speedup);
    else
        rec.add("speedup", std::monostate{});
    rec.add("naive", r.naive);
    return rec;
}

Record to_record(const TrialResult& t, CostModel model, std::string_view source)
{
    Record rec;
    rec.add("strategy", std::string(to_string(t.strategy)))
        .add("n", static_cast<std::uint64_t>(t.n))
        .add("cost_model", std::string(to_string(model)))
        .add("source", std::string(source))
        .add("queries", t.queries)
        .add("steps", t.steps)
        .add("correct", t.correct);
    return rec;
}

Record to_record(const WorstCaseReport& w)
{
    Record rec;
    rec.add("strategy", std::string(to_string(w.strategy)))
        .add("n", static_cast<std::uint64_t>(w.n))
        .add("mode", std::string(to_string(w.mode)))
        .add("cost_model", std::string(to_string(w.model)))
        .add("vary_presentation", w.vary_presentation)
        .add("instances", w.instances)
        .add("max_queries", w.max_queries)
        .add("max_steps", w.max_steps)
        .add("all_correct", w.all_correct)
        .add("ground_truth", w.ground_truth)
        .add("presentation", w.presentation);
    return rec;
}

Record to_record(const RandomSummary& s)
{
    Record rec;
    rec.add("strategy", std::string(to_string(s.strategy)))
        .add("n", static_cast<std::uint64_t>(s.n))
        .add("cost_model", std::string(to_string(s.model)))
        .add("trials", static_cast<std::uint64_t>(s.trials))
        .add("seed", s.seed)
        .add("generator", std::string(kGeneratorName))
        .add("min_queries", s.min_queries)
        .add("max_queries", s.max_queries)
        .add("mean_queries", s.mean_queries)
        .add("ceiling", s.ceiling)
        .add("all_correct", s.all_correct)
        .add("within_ceiling", s.within_ceiling);
    return rec;
}

Record to_record(const ComparisonTableRow& row)
{
    Record rec;
    rec.add("n", row.n)
        .add("naive", row.naive)
        .add("s_n", row.s_n)
        .add("b_n", row.b_n)
        .add("speedup", row.speedup)
        .add("block_years", row.block_years)
        .add("binary_years", row.binary_years);
    return rec;
}

namespace {

struct FlatText {
    bool human = false;

    std::string operator()(std::monostate) const { return human ? "-" : ""; }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(const BigInt& v) const { return human ? to_scientific(v) : v.str(); }
    std::string operator()(const std::vector<std::uint32_t>& v) const
    {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                out += human ? "," : " ";
            out += std::to_string(v[i]);
        }
        return out;
    }
};

struct JsonValue {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    nlohmann::ordered_json operator()(const BigInt& v) const { return v.str(); }
    nlohmann::ordered_json operator()(const std::vector<std::uint32_t>& v) const { return v; }
};

nlohmann::ordered_json to_json(const Record& rec)
{
    auto obj = nlohmann::ordered_json::object();
    for (const auto& [key, value] : rec.fields)
        obj[key] = std::visit(JsonValue{}, value);
    return obj;
}

std::string render_csv(const std::vector<Record>& records)
{
    std::string out;
    if (records.empty())
        return out;
    for (std::size_t i = 0; i < records.front().fields.size(); ++i) {
        if (i)
            out += ',';
        out += records.front().fields[i].first;
    }
    out += '\n';
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            if (i)
                out += ',';
            out += std::visit(FlatText{false}, rec.fields[i].second);
        }
        out += '\n';
    }
    return out;
}

std::string render_human(const std::vector<Record>& records)
{
    std::string out;
    for (std::size_t r = 0; r < records.size(); ++r) {
        if (r)
            out += '\n';
        std::size_t width = 0;
        for (const auto& f : records[r].fields)
            width = std::max(width, f.first.size());
        for (const auto& [key, value] : records[r].fields) {
            out += key;
            out.append(width - key.size() + 2, ' ');
            out += std::visit(FlatText{true}, value);
            out += '\n';
        }
    }
    return out;
}

std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

} // namespace

std::string render(const std::vector<Record>& records, OutputFormat fmt, bool as_array)
{
    switch (fmt) {
    case OutputFormat::csv:
        return render_csv(records);
    case OutputFormat::json: {
        if (!as_array && records.size() == 1)
            return to_json(records.front()).dump(2) + "\n";
        auto arr = nlohmann::ordered_json::array();
        for (const auto& rec : records)
            arr.push_back(to_json(rec));
        return arr.dump(2) + "\n";
    }
    case OutputFormat::human:
        break;
    }
    return render_human(records);
}

std::string render_comparison_table(const std::vector<ComparisonTableRow>& rows, OutputFormat fmt)
{
    if (fmt != OutputFormat::human) {
        std::vector<Record> records;
        for (const auto& row : rows)
            records.push_back(to_record(row));
        return render(records, fmt, true);
    }

    const std::vector<std::string> header = {"n", "n!", "S(n)", "B(n)", "speedup", "block years@2/day",
                                             "binary years@2/day"};
    std::vector<std::vector<std::string>> cells = {header};
    for (const auto& row : rows)
        cells.push_back({std::to_string(row.n), to_scientific(row.naive), std::to_string(row.s_n),
                         std::to_string(row.b_n), fixed(row.speedup, 3), fixed(row.block_years, 1),
                         fixed(row.binary_years, 1)});

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());

    std::ostringstream os;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c)
                os << "  ";
            os << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace ruleorder
