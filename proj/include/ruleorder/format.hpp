#pragma once

#include "ruleorder/complexity.hpp"
#include "ruleorder/harness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ruleorder {

enum class OutputFormat { human, csv, json };

std::optional<OutputFormat> parse_format(std::string_view s);

/// A flat report row. Keys keep insertion order so csv headers and json
/// objects line up field for field.
struct Record {
    using Value = std::variant<std::monostate, std::uint64_t, double, bool, std::string, BigInt,
                               std::vector<std::uint32_t>>;

    std::vector<std::pair<std::string, Value>> fields;

    Record& add(std::string key, Value v)
    {
        fields.emplace_back(std::move(key), std::move(v));
        return *this;
    }
};

Record to_record(const ComplexityReport& r);
Record to_record(const TrialResult& t, CostModel model, std::string_view source);
Record to_record(const WorstCaseReport& w);
Record to_record(const RandomSummary& s);
Record to_record(const ComparisonTableRow& row);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// csv: header plus one line per record. json: an object for a single
/// record when `as_array` is false, otherwise an array of objects.
/// human: aligned "key  value" lines, or aligned columns for several records.
std::string render(const std::vector<Record>& records, OutputFormat fmt, bool as_array);

/// The comparison table in the requested format. Column set is
/// n,naive,s_n,b_n,speedup,block_years,binary_years.
std::string render_comparison_table(const std::vector<ComparisonTableRow>& rows, OutputFormat fmt);

} // namespace ruleorder
