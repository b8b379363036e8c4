#include "specgraph/survey.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "specgraph/exact_linalg.hpp"

namespace specgraph {

namespace {

constexpr size_t kChunk = 256;  // fixed chunking keeps results worker-independent

struct LineOutcome {
  std::optional<SurveyRecord> record;
  std::optional<std::string> error;
  bool disconnected = false;
};

LineOutcome process_line(const std::string& raw, size_t line_no, double zero_tol) {
  LineOutcome out;
  std::string line = raw;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) return out;
  if (line == ">>graph6<<") return out;  // optional stream header
  Graph g(1);
  try {
    g = parse_graph6(line);
  } catch (const std::exception& e) {
    out.error = "line " + std::to_string(line_no) + ": " + e.what();
    return out;
  }
  if (!is_connected(g)) {
    out.disconnected = true;
    out.error = "line " + std::to_string(line_no) + ": disconnected graph rejected";
    return out;
  }
  if (g.order() < 2) {
    out.error = "line " + std::to_string(line_no) + ": order 1 has no spectral indices";
    return out;
  }
  SurveyRecord rec;
  rec.graph6 = line;
  rec.m = g.order();
  const IntMatrix a = adjacency_matrix(g);
  rec.det = det_integer(a);
  const RationalMatrix pinv = mp_pseudoinverse_exact(to_rational(a));
  rec.cls = classify_pseudoinverse(pinv);
  rec.idx = spectral_indices(graph_spectrum(g, zero_tol));
  out.record = std::move(rec);
  return out;
}

}  // namespace

SurveyResult classify_stream(const std::vector<std::string>& lines, const SurveyOptions& opt) {
  if (opt.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!(opt.zero_tol > 0 && opt.zero_tol < 1e-3))
    throw std::invalid_argument("zero tolerance must lie in (0, 1e-3)");

  const size_t n = lines.size();
  std::vector<LineOutcome> outcomes(n);
  const size_t chunks = (n + kChunk - 1) / kChunk;

  auto run_chunk = [&](size_t ci) {
    const size_t lo = ci * kChunk;
    const size_t hi = std::min(n, lo + kChunk);
    for (size_t i = lo; i < hi; ++i) outcomes[i] = process_line(lines[i], i + 1, opt.zero_tol);
  };

  if (opt.workers == 1 || chunks <= 1) {
    for (size_t ci = 0; ci < chunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t ci = next.fetch_add(1); ci < chunks; ci = next.fetch_add(1)) run_chunk(ci);
    };
    std::vector<std::thread> pool;
    const int w = std::min<int>(opt.workers, static_cast<int>(chunks));
    pool.reserve(w);
    for (int t = 0; t < w; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SurveyResult res;
  res.lines = n;
  for (auto& o : outcomes) {
    if (o.record) res.records.push_back(std::move(*o.record));
    if (o.error) res.errors.push_back(std::move(*o.error));
    if (o.disconnected) ++res.disconnected;
  }
  return res;
}

SurveyResult classify_file(const std::string& path, const SurveyOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return classify_stream(lines, opt);
}

std::vector<std::string> census_lines(int m, int workers) {
  std::vector<std::string> lines;
  for (const Graph& g : enumerate_connected_graphs(m, workers))
    lines.push_back(encode_graph6(g));
  return lines;
}

std::vector<std::string> extend_census_lines(const std::vector<std::string>& prev, int workers) {
  std::vector<Graph> graphs;
  graphs.reserve(prev.size());
  for (const auto& line : prev) graphs.push_back(parse_graph6(line));
  std::vector<std::string> out;
  for (const Graph& g : extend_connected_census(graphs, workers))
    out.push_back(encode_graph6(g));
  return out;
}

uint64_t census_checksum(const std::vector<std::string>& lines) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (const auto& line : lines) {
    for (char c : line) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  return h;
}

CountTable count_tables(const std::vector<SurveyRecord>& records) {
  CountTable t;
  if (!records.empty()) t.m = records.front().m;
  for (const auto& r : records) {
    ++t.all;
    const bool nonzero = r.det != 0;
    const bool unit = r.det == 1 || r.det == -1;
    if (nonzero) ++t.det_nonzero;
    if (unit) ++t.det_unit;
    switch (r.cls.kind) {
      case SignKind::PositiveOnly:
        ++t.pos;
        if (unit) ++t.ii_pos;
        break;
      case SignKind::NegativeOnly:
        ++t.neg;
        if (unit) ++t.ii_neg;
        break;
      case SignKind::Both:
        ++t.both;
        if (unit) ++t.ii_both;
        break;
      case SignKind::NotSignable:
        break;
    }
  }
  t.signable = t.pos + t.neg + t.both;
  t.ii_signable = t.ii_pos + t.ii_neg + t.ii_both;
  return t;
}

double index_value(const SpectralIndices& idx, IndexKind kind) {
  switch (kind) {
    case IndexKind::LambdaMax: return idx.lambda_max;
    case IndexKind::LambdaMin: return idx.lambda_min;
    case IndexKind::Gap: return idx.gap;
    case IndexKind::Ind: return idx.ind;
    case IndexKind::Pow: return idx.pow;
  }
  return 0;
}

const char* to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::LambdaMax: return "lambda_max";
    case IndexKind::LambdaMin: return "lambda_min";
    case IndexKind::Gap: return "gap";
    case IndexKind::Ind: return "ind";
    case IndexKind::Pow: return "pow";
  }
  return "?";
}

namespace {

constexpr double kTieTol = 1e-9;

void take_extreme(std::optional<ExtremeWitness>& cur, double x, const std::string& g6,
                  SignKind cls, bool want_min) {
  if (!cur) {
    cur = ExtremeWitness{x, g6, cls};
    return;
  }
  const double diff = x - cur->value;
  const bool better = want_min ? diff < -kTieTol : diff > kTieTol;
  const bool tie = std::abs(diff) <= kTieTol;
  if (better || (tie && g6 < cur->graph6)) cur = ExtremeWitness{x, g6, cls};
}

}  // namespace

void StatsAccumulator::add(double x, const std::string& canonical_g6, SignKind cls) {
  ++count;
  const long double lx = x;
  sum += lx;
  sum2 += lx * lx;
  sum3 += lx * lx * lx;
  sum4 += lx * lx * lx * lx;
  take_extreme(min, x, canonical_g6, cls, true);
  take_extreme(max, x, canonical_g6, cls, false);
}

void StatsAccumulator::merge(const StatsAccumulator& o) {
  count += o.count;
  sum += o.sum;
  sum2 += o.sum2;
  sum3 += o.sum3;
  sum4 += o.sum4;
  if (o.min) take_extreme(min, o.min->value, o.min->graph6, o.min->cls, true);
  if (o.max) take_extreme(max, o.max->value, o.max->graph6, o.max->cls, false);
}

double StatsAccumulator::mean() const { return count ? double(sum / count) : 0.0; }

std::optional<double> StatsAccumulator::stddev() const {
  if (count < 2) return std::nullopt;
  const long double mu = sum / count;
  long double var = (sum2 - count * mu * mu) / (count - 1);
  if (var < 0) var = 0;
  return double(sqrtl(var));
}

std::optional<double> StatsAccumulator::skewness() const {
  if (count < 2) return std::nullopt;
  const long double mu = sum / count;
  const long double m2 = sum2 / count - mu * mu;
  if (m2 <= 0) return std::nullopt;
  const long double m3 = sum3 / count - 3 * mu * (sum2 / count) + 2 * mu * mu * mu;
  return double(m3 / powl(m2, 1.5L));
}

std::optional<double> StatsAccumulator::kurtosis() const {
  if (count < 2) return std::nullopt;
  const long double mu = sum / count;
  const long double m2 = sum2 / count - mu * mu;
  if (m2 <= 0) return std::nullopt;
  const long double m4 =
      sum4 / count - 4 * mu * (sum3 / count) + 6 * mu * mu * (sum2 / count) - 3 * mu * mu * mu * mu;
  return double(m4 / (m2 * m2));
}

std::optional<StatsRow> descriptive_stats(const std::vector<const SurveyRecord*>& recs,
                                          IndexKind kind) {
  if (recs.empty()) return std::nullopt;
  StatsAccumulator acc;
  for (const SurveyRecord* r : recs) {
    const Graph g = parse_graph6(r->graph6);
    const std::string canon =
        g.order() <= kMaxCanonicalOrder ? canonical_form(g) : r->graph6;
    acc.add(index_value(r->idx, kind), canon, r->cls.kind);
  }
  StatsRow row;
  row.n = acc.count;
  row.mean = acc.mean();
  row.stddev = acc.stddev();
  row.skew = acc.skewness();
  row.kurt = acc.kurtosis();
  row.min = *acc.min;
  row.max = *acc.max;
  return row;
}

std::vector<const SurveyRecord*> filter_signable(const std::vector<SurveyRecord>& records) {
  std::vector<const SurveyRecord*> out;
  for (const auto& r : records)
    if (r.cls.signable()) out.push_back(&r);
  return out;
}

std::vector<const SurveyRecord*> filter_ii_signable(const std::vector<SurveyRecord>& records) {
  std::vector<const SurveyRecord*> out;
  for (const auto& r : records)
    if (r.cls.signable() && (r.det == 1 || r.det == -1)) out.push_back(&r);
  return out;
}

StatsTable stats_table(const std::vector<SurveyRecord>& records, bool integrally_invertible_only) {
  const auto sel = integrally_invertible_only ? filter_ii_signable(records)
                                              : filter_signable(records);
  StatsTable t;
  if (!records.empty()) t.m = records.front().m;
  t.n = sel.size();
  t.lambda_max = descriptive_stats(sel, IndexKind::LambdaMax);
  t.lambda_min = descriptive_stats(sel, IndexKind::LambdaMin);
  t.gap = descriptive_stats(sel, IndexKind::Gap);
  t.ind = descriptive_stats(sel, IndexKind::Ind);
  t.pow = descriptive_stats(sel, IndexKind::Pow);
  return t;
}

double approx_graph_count(int m) {
  if (m < 2) throw std::invalid_argument("approx_graph_count needs m >= 2");
  const double d = m - 9;
  return 261080.0 * std::pow(10.0, 1.4 * d + 0.09 * d * d);
}

double approx_partition_count(int m) {
  if (m < 1) throw std::invalid_argument("approx_partition_count needs m >= 1");
  return std::exp(M_PI * std::sqrt(2.0 * m / 3.0)) / (4.0 * m * std::sqrt(3.0));
}

}  // namespace specgraph
