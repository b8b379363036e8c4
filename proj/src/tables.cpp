#include "specgraph/tables.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace specgraph {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "specgraph/1";

// graph6 bytes may contain '|'; escape them inside markdown cells.
std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "&#124;";
    else if (c == '\\')
      out += "\\\\";
    else
      out += c;
  }
  return out;
}

std::string opt_real(const std::optional<double>& v, bool full) {
  return v ? format_real(*v, full) : "--";
}

struct StatLine {
  std::string name;
  std::string value;
  std::string tag;
  std::string witness;
};

std::vector<StatLine> stat_lines(const StatsTable& t, bool full) {
  std::vector<StatLine> lines;
  auto moments = [&](const char* label, const std::optional<StatsRow>& row) {
    if (!row) return;
    lines.push_back({std::string("E(") + label + ")", format_real(row->mean, full), "", ""});
    lines.push_back({std::string("sigma(") + label + ")", opt_real(row->stddev, full), "", ""});
    lines.push_back({std::string("skew(") + label + ")", opt_real(row->skew, full), "", ""});
    lines.push_back({std::string("kurt(") + label + ")", opt_real(row->kurt, full), "", ""});
  };
  auto extremes = [&](const char* label, const std::optional<StatsRow>& row) {
    if (!row) return;
    lines.push_back({std::string("max(") + label + ")", format_real(row->max.value, full),
                     sign_tag(row->max.cls), row->max.graph6});
    lines.push_back({std::string("min(") + label + ")", format_real(row->min.value, full),
                     sign_tag(row->min.cls), row->min.graph6});
  };
  moments("lambda_max", t.lambda_max);
  extremes("lambda_max", t.lambda_max);
  moments("lambda_min", t.lambda_min);
  extremes("lambda_min", t.lambda_min);
  extremes("gap", t.gap);
  extremes("ind", t.ind);
  extremes("pow", t.pow);
  return lines;
}

json row_json(const StatsRow& row) {
  json j;
  j["n"] = row.n;
  j["mean"] = row.mean;
  j["std"] = row.stddev ? json(*row.stddev) : json();
  j["skew"] = row.skew ? json(*row.skew) : json();
  j["kurt"] = row.kurt ? json(*row.kurt) : json();
  j["min"] = {{"value", row.min.value}, {"graph6", row.min.graph6},
              {"class", to_string(row.min.cls)}};
  j["max"] = {{"value", row.max.value}, {"graph6", row.max.graph6},
              {"class", to_string(row.max.cls)}};
  return j;
}

}  // namespace

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "md" || name == "markdown") return TableFormat::Markdown;
  if (name == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv, md, or json)");
}

std::string format_real(double x, bool full_precision) {
  char buf[64];
  if (full_precision)
    std::snprintf(buf, sizeof buf, "%.17g", x);
  else
    std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string render_count_tables(const std::vector<CountTable>& tables, TableFormat fmt) {
  const std::vector<std::pair<std::string, uint64_t CountTable::*>> rows = {
      {"all graphs", &CountTable::all},
      {"det != 0", &CountTable::det_nonzero},
      {"det = +-1", &CountTable::det_unit},
      {"+signable", &CountTable::pos},
      {"-signable", &CountTable::neg},
      {"+-signable", &CountTable::both},
      {"all signable", &CountTable::signable},
      {"+signable (det=+-1)", &CountTable::ii_pos},
      {"-signable (det=+-1)", &CountTable::ii_neg},
      {"+-signable (det=+-1)", &CountTable::ii_both},
      {"all signable (det=+-1)", &CountTable::ii_signable},
  };

  if (fmt == TableFormat::Json) {
    json j;
    j["schema"] = kSchema;
    j["table"] = "counts";
    j["orders"] = json::array();
    for (const auto& t : tables) {
      json c;
      c["m"] = t.m;
      for (const auto& [name, member] : rows) c[name] = t.*member;
      j["orders"].push_back(c);
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  if (fmt == TableFormat::Markdown) {
    out << "| m |";
    for (const auto& t : tables) out << ' ' << t.m << " |";
    out << "\n|---|";
    for (size_t i = 0; i < tables.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& [name, member] : rows) {
      out << "| " << name << " |";
      for (const auto& t : tables) out << ' ' << t.*member << " |";
      out << '\n';
    }
  } else {  // csv
    out << "m";
    for (const auto& t : tables) out << ',' << t.m;
    out << '\n';
    for (const auto& [name, member] : rows) {
      out << name;
      for (const auto& t : tables) out << ',' << t.*member;
      out << '\n';
    }
  }
  return out.str();
}

std::string render_stats_table(const StatsTable& t, TableFormat fmt, bool full_precision) {
  if (fmt == TableFormat::Json) {
    json j;
    j["schema"] = kSchema;
    j["table"] = "stats";
    j["m"] = t.m;
    j["n"] = t.n;
    if (t.lambda_max) j["lambda_max"] = row_json(*t.lambda_max);
    if (t.lambda_min) j["lambda_min"] = row_json(*t.lambda_min);
    auto extremes_only = [](const StatsRow& row) {
      json e;
      e["min"] = {{"value", row.min.value}, {"graph6", row.min.graph6},
                  {"class", to_string(row.min.cls)}};
      e["max"] = {{"value", row.max.value}, {"graph6", row.max.graph6},
                  {"class", to_string(row.max.cls)}};
      return e;
    };
    if (t.gap) j["gap"] = extremes_only(*t.gap);
    if (t.ind) j["ind"] = extremes_only(*t.ind);
    if (t.pow) j["pow"] = extremes_only(*t.pow);
    return j.dump(2) + "\n";
  }

  const auto lines = stat_lines(t, full_precision);
  std::ostringstream out;
  if (fmt == TableFormat::Markdown) {
    out << "| statistic | m=" << t.m << " (n=" << t.n << ") | witness |\n";
    out << "|---|---|---|\n";
    for (const auto& l : lines) {
      out << "| " << l.name << " | " << l.value;
      if (!l.tag.empty()) out << ' ' << l.tag;
      out << " | " << md_escape(l.witness) << " |\n";
    }
  } else {  // csv
    out << "metric,value,tag,graph6\n";
    for (const auto& l : lines)
      out << l.name << ',' << l.value << ',' << l.tag << ',' << l.witness << '\n';
  }
  return out.str();
}

}  // namespace specgraph
