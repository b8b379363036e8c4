#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specgraph/constructions.hpp"
#include "specgraph/exact_linalg.hpp"
#include "specgraph/signability.hpp"
#include "specgraph/survey.hpp"
#include "specgraph/tables.hpp"

using namespace specgraph;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotSignable = 3;

struct FamilySpec {
  std::string name;
  std::vector<int> params;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty parameter list");
  return out;
}

FamilySpec parse_family_spec(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec must look like name:params, e.g. cycle:5");
  return {spec.substr(0, colon), parse_int_list(spec.substr(colon + 1))};
}

Graph family_graph(const std::string& spec) {
  const FamilySpec f = parse_family_spec(spec);
  return make_family(f.name, f.params);
}

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const RationalMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

std::string witness_text(const SignatureVector& d) {
  std::string s;
  for (int8_t v : d) s += v > 0 ? '+' : '-';
  return s;
}

// ---- classify ----------------------------------------------------------

struct ClassifyArgs {
  std::string input;  // graph6 bytes, empty when --family given
  std::string family;
  bool show_pinv = false;
  bool full_precision = false;
  std::string format = "md";
};

int run_classify(const ClassifyArgs& args) {
  const Graph g = args.family.empty() ? parse_graph6(args.input) : family_graph(args.family);
  if (!is_connected(g)) {
    std::cerr << "error: graph is disconnected\n";
    return kExitUsage;
  }
  const RationalMatrix pinv = mp_pseudoinverse_exact(to_rational(adjacency_matrix(g)));
  const Classification cls = classify_pseudoinverse(pinv);
  const BigInt det = det_integer(adjacency_matrix(g));
  const SpectralIndices idx = indices_of_graph(g);
  const bool full = args.full_precision;

  if (parse_table_format(args.format) == TableFormat::Json) {
    json j;
    j["schema"] = "specgraph/1";
    j["graph6"] = encode_graph6(g);
    j["order"] = g.order();
    j["det"] = det.get_str();
    j["classification"] = to_string(cls.kind);
    if (cls.pos_witness) j["positive_witness"] = witness_text(*cls.pos_witness);
    if (cls.neg_witness) j["negative_witness"] = witness_text(*cls.neg_witness);
    j["indices"] = {{"lambda_max", idx.lambda_max}, {"lambda_min", idx.lambda_min},
                    {"lambda_plus", idx.lambda_plus}, {"lambda_minus", idx.lambda_minus},
                    {"gap", idx.gap}, {"ind", idx.ind}, {"pow", idx.pow}};
    if (args.show_pinv) j["pinv"] = matrix_json(pinv);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "graph6: " << encode_graph6(g) << '\n';
    std::cout << "order: " << g.order() << '\n';
    std::cout << "det: " << det.get_str() << '\n';
    std::cout << "classification: " << to_string(cls.kind) << '\n';
    if (cls.pos_witness) std::cout << "positive witness: " << witness_text(*cls.pos_witness) << '\n';
    if (cls.neg_witness) std::cout << "negative witness: " << witness_text(*cls.neg_witness) << '\n';
    std::cout << "lambda_max: " << format_real(idx.lambda_max, full) << '\n';
    std::cout << "lambda_min: " << format_real(idx.lambda_min, full) << '\n';
    std::cout << "lambda_plus: " << format_real(idx.lambda_plus, full) << '\n';
    std::cout << "lambda_minus: " << format_real(idx.lambda_minus, full) << '\n';
    std::cout << "gap: " << format_real(idx.gap, full) << '\n';
    std::cout << "ind: " << format_real(idx.ind, full) << '\n';
    std::cout << "pow: " << format_real(idx.pow, full) << '\n';
    if (args.show_pinv) std::cout << "pinv:\n" << matrix_text(pinv);
  }
  return cls.signable() ? kExitOk : kExitNotSignable;
}

// ---- survey ------------------------------------------------------------

struct SurveyArgs {
  int order = 0;
  std::string input;
  std::string format = "md";
  int workers = 1;
  double zero_tol = kDefaultZeroTol;
  bool full_precision = false;
};

std::vector<std::string> load_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> survey_input(const SurveyArgs& args) {
  if (!args.input.empty()) return load_lines(args.input);
  if (const char* dir = std::getenv("SPECGRAPH_DATA_DIR")) {
    const auto path =
        std::filesystem::path(dir) / ("graph" + std::to_string(args.order) + "c.g6");
    if (std::filesystem::exists(path)) return load_lines(path.string());
  }
  if (args.order >= 2 && args.order <= 7) return census_lines(args.order, args.workers);
  throw std::runtime_error("no census for order " + std::to_string(args.order) +
                           ": pass --input or set SPECGRAPH_DATA_DIR");
}

int run_survey(const SurveyArgs& args) {
  const auto lines = survey_input(args);
  SurveyOptions opt;
  opt.workers = args.workers;
  opt.zero_tol = args.zero_tol;
  const SurveyResult res = classify_stream(lines, opt);
  for (const auto& err : res.errors) std::cerr << "warning: " << err << '\n';
  if (res.disconnected > 0)
    std::cerr << "warning: " << res.disconnected << " disconnected graph(s) rejected\n";
  for (const auto& r : res.records)
    if (r.m != args.order) {
      std::cerr << "error: found order " << r.m << " graph, expected " << args.order << '\n';
      return kExitUsage;
    }

  const TableFormat fmt = parse_table_format(args.format);
  const CountTable counts = count_tables(res.records);
  const StatsTable all_stats = stats_table(res.records, false);
  const StatsTable ii_stats = stats_table(res.records, true);
  if (fmt == TableFormat::Json) {
    json j;
    j["schema"] = "specgraph/1";
    j["counts"] = json::parse(render_count_tables({counts}, fmt));
    j["signable_stats"] = json::parse(render_stats_table(all_stats, fmt));
    j["integrally_invertible_stats"] = json::parse(render_stats_table(ii_stats, fmt));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "# counts (order " << args.order << ")\n";
    std::cout << render_count_tables({counts}, fmt) << '\n';
    std::cout << "# signable graphs\n";
    std::cout << render_stats_table(all_stats, fmt, args.full_precision) << '\n';
    std::cout << "# signable integrally invertible graphs\n";
    std::cout << render_stats_table(ii_stats, fmt, args.full_precision);
  }
  return kExitOk;
}

// ---- construct ---------------------------------------------------------

struct ConstructArgs {
  std::string family;       // "cycle:5", "kmm-e:4", "corona", "multipart"
  std::string parts;        // for multipart
  std::string base;         // family spec for corona/multipart
  bool pinv = false;
  bool closed_form = false;
};

struct Construction {
  Graph graph;
  std::optional<RationalMatrix> closed_form;
};

Construction build_construction(const ConstructArgs& args) {
  if (args.family == "corona") {
    if (args.base.empty()) throw std::invalid_argument("corona needs --base");
    const Graph base = family_graph(args.base);
    const IntMatrix inv = corona_inverse_closed_form(base);
    return {corona(base), to_rational(inv)};
  }
  if (args.family == "multipart") {
    if (args.parts.empty()) throw std::invalid_argument("multipart needs a parts list");
    PartitionSpec spec;
    spec.parts = parse_int_list(args.parts);
    if (!args.base.empty()) spec.base = family_graph(args.base);
    return {multipartitioned_expand(spec), pinv_multipartitioned(spec)};
  }
  const FamilySpec f = parse_family_spec(args.family);
  const Graph g = make_family(f.name, f.params);
  std::optional<RationalMatrix> closed;
  if (f.name == "cycle")
    closed = pinv_cycle_closed_form(f.params[0]);
  else if (f.name == "path")
    closed = pinv_path_closed_form(f.params[0]);
  else if (f.name == "bipartite" || f.name == "complete_bipartite")
    closed = pinv_complete_bipartite(f.params[0], f.params[1]);
  else if (f.name == "star")
    closed = pinv_complete_bipartite(f.params[0] - 1, 1);
  else if (f.name == "kmm-e" || f.name == "kmm_minus_e")
    closed = pinv_kmm_minus_e(f.params[0]);
  return {g, std::move(closed)};
}

int run_construct(const ConstructArgs& args) {
  const Construction c = build_construction(args);
  std::cout << encode_graph6(c.graph) << '\n';
  if (args.pinv)
    std::cout << "pinv:\n"
              << matrix_text(mp_pseudoinverse_exact(to_rational(adjacency_matrix(c.graph))));
  if (args.closed_form) {
    if (!c.closed_form) {
      std::cerr << "error: no closed-form pseudoinverse for this family\n";
      return kExitUsage;
    }
    std::cout << "closed form:\n" << matrix_text(*c.closed_form);
    const RationalMatrix exact = mp_pseudoinverse_exact(to_rational(adjacency_matrix(c.graph)));
    if (*c.closed_form == exact) {
      std::cout << "match: exact\n";
    } else {
      std::cout << "match: MISMATCH\n";
      return 1;
    }
  }
  return kExitOk;
}

// ---- fixtures ----------------------------------------------------------

struct FixturesArgs {
  int max_order = 8;
  std::string dir = ".";
  int workers = 1;
};

int run_fixtures(const FixturesArgs& args) {
  if (args.max_order < 2 || args.max_order > 10)
    throw std::invalid_argument("fixtures support orders 2..10");
  std::filesystem::create_directories(args.dir);
  json manifest;
  manifest["schema"] = "specgraph/1";
  manifest["orders"] = json::array();
  std::vector<std::string> prev;
  for (int m = 2; m <= args.max_order; ++m) {
    std::vector<std::string> lines;
    if (m <= 7)
      lines = census_lines(m, args.workers);
    else
      lines = extend_census_lines(prev, args.workers);
    const auto path =
        std::filesystem::path(args.dir) / ("graph" + std::to_string(m) + "c.g6");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& line : lines) out << line << '\n';
    char checksum[32];
    std::snprintf(checksum, sizeof checksum, "%016llx",
                  static_cast<unsigned long long>(census_checksum(lines)));
    manifest["orders"].push_back({{"m", m},
                                  {"count", lines.size()},
                                  {"fnv1a", checksum},
                                  {"file", path.filename().string()}});
    std::cerr << "order " << m << ": " << lines.size() << " graphs -> " << path.string() << '\n';
    prev = std::move(lines);
  }
  std::ofstream mf(std::filesystem::path(args.dir) / "manifest.json");
  mf << manifest.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Moore-Penrose pseudoinverses, signability, and spectral surveys of graphs"};
  app.require_subcommand(1);

  ClassifyArgs cls_args;
  auto* cls = app.add_subcommand("classify", "classify one graph (exit 3 when not signable)");
  cls->add_option("graph6", cls_args.input, "graph6 line");
  cls->add_option("--family", cls_args.family, "family spec, e.g. cycle:4 or complete:3");
  cls->add_flag("--pinv", cls_args.show_pinv, "print the exact pseudoinverse");
  cls->add_flag("--full-precision", cls_args.full_precision, "print reals at full precision");
  cls->add_option("--format", cls_args.format, "csv, md, or json")->default_val("md");

  SurveyArgs survey_args;
  auto* survey = app.add_subcommand("survey", "classify a census and emit count/stats tables");
  survey->add_option("--order", survey_args.order, "graph order")->required();
  survey->add_option("--input", survey_args.input, "graph6 file (one graph per line)");
  survey->add_option("--format", survey_args.format, "csv, md, or json")->default_val("md");
  survey->add_option("--workers", survey_args.workers, "worker threads")->default_val(1);
  survey->add_option("--zero-tol", survey_args.zero_tol, "eigenvalue zero tolerance")
      ->default_val(kDefaultZeroTol);
  survey->add_flag("--full-precision", survey_args.full_precision);

  ConstructArgs con_args;
  auto* con = app.add_subcommand("construct", "build a family graph and its oracle matrices");
  con->add_option("family", con_args.family, "family spec, or 'corona' / 'multipart'")->required();
  con->add_option("parts", con_args.parts, "multipart sizes, e.g. 1,2,1,1");
  con->add_option("--base", con_args.base, "base family spec, e.g. path:4");
  con->add_flag("--pinv", con_args.pinv, "print the exact pseudoinverse");
  con->add_flag("--pinv-closed-form", con_args.closed_form,
                "print the closed-form pseudoinverse and verify it exactly");

  FixturesArgs fix_args;
  auto* fix = app.add_subcommand("fixtures", "write census .g6 files plus a checksum manifest");
  fix->add_option("--max-order", fix_args.max_order, "largest order to write")->default_val(8);
  fix->add_option("--dir", fix_args.dir, "output directory")->required();
  fix->add_option("--workers", fix_args.workers, "worker threads")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(cls)) {
      if (cls_args.input.empty() == cls_args.family.empty()) {
        std::cerr << "error: pass exactly one of <graph6> or --family\n";
        return kExitUsage;
      }
      return run_classify(cls_args);
    }
    if (app.got_subcommand(survey)) {
      if (survey_args.workers < 1 ||
          !(survey_args.zero_tol > 0 && survey_args.zero_tol < 1e-3)) {
        std::cerr << "error: workers must be >= 1 and zero tolerance in (0, 1e-3)\n";
        return kExitUsage;
      }
      return run_survey(survey_args);
    }
    if (app.got_subcommand(con)) return run_construct(con_args);
    if (app.got_subcommand(fix)) return run_fixtures(fix_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
