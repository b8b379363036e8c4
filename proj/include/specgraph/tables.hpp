#pragma once

#include <string>
#include <vector>

#include "specgraph/survey.hpp"

namespace specgraph {

enum class TableFormat { Csv, Markdown, Json };

TableFormat parse_table_format(const std::string& name);  // csv | md | json

/// Multi-order count table, one column per order ("m | 2 | 3 | ...").
std::string render_count_tables(const std::vector<CountTable>& tables, TableFormat fmt);

/// Per-order descriptive statistics; reals print with 4 decimals except
/// in JSON (or when full_precision is set).
std::string render_stats_table(const StatsTable& table, TableFormat fmt,
                               bool full_precision = false);

/// 4-decimal fixed rendering used by the presentation layer.
std::string format_real(double x, bool full_precision = false);

}  // namespace specgraph
