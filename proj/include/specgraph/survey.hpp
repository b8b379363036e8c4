#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/signability.hpp"

namespace specgraph {

struct SurveyRecord {
  std::string graph6;
  int m = 0;
  BigInt det;
  Classification cls;
  SpectralIndices idx;
};

struct SurveyOptions {
  int workers = 1;
  double zero_tol = kDefaultZeroTol;
};

struct SurveyResult {
  std::vector<SurveyRecord> records;  // input order
  std::vector<std::string> errors;    // "line N: message"
  size_t disconnected = 0;
  size_t lines = 0;
};

/// Classifies a graph6 stream: exact determinant and signability, numeric
/// spectral indices. Connectivity is verified; rejects are counted.
/// Results are deterministic and independent of the worker count.
SurveyResult classify_stream(const std::vector<std::string>& lines,
                             const SurveyOptions& opt = {});
SurveyResult classify_file(const std::string& path, const SurveyOptions& opt = {});

/// Canonical graph6 lines of the built-in census (2 <= m <= 7).
std::vector<std::string> census_lines(int m, int workers = 1);

/// Census lines for order m+1 from a complete census of order m.
std::vector<std::string> extend_census_lines(const std::vector<std::string>& prev,
                                             int workers = 1);

/// FNV-1a hash of the lines, for fixture manifests.
uint64_t census_checksum(const std::vector<std::string>& lines);

struct CountTable {
  int m = 0;
  uint64_t all = 0;
  uint64_t det_nonzero = 0;
  uint64_t det_unit = 0;  // det = +-1
  uint64_t pos = 0, neg = 0, both = 0, signable = 0;
  // the same signability split restricted to det = +-1
  uint64_t ii_pos = 0, ii_neg = 0, ii_both = 0, ii_signable = 0;
};

CountTable count_tables(const std::vector<SurveyRecord>& records);

enum class IndexKind { LambdaMax, LambdaMin, Gap, Ind, Pow };
double index_value(const SpectralIndices& idx, IndexKind kind);
const char* to_string(IndexKind kind);

struct ExtremeWitness {
  double value = 0;
  std::string graph6;  // canonical bytes
  SignKind cls = SignKind::NotSignable;
};

/// Mergeable moment accumulator: count, power sums in extended precision,
/// extremes with witnesses. Ties within 1e-9 keep the lexicographically
/// smallest canonical graph6.
struct StatsAccumulator {
  uint64_t count = 0;
  long double sum = 0, sum2 = 0, sum3 = 0, sum4 = 0;
  std::optional<ExtremeWitness> min, max;

  void add(double x, const std::string& canonical_g6, SignKind cls);
  void merge(const StatsAccumulator& o);

  double mean() const;
  std::optional<double> stddev() const;    // sample, N-1
  std::optional<double> skewness() const;  // population central moments
  std::optional<double> kurtosis() const;  // non-excess
};

struct StatsRow {
  uint64_t n = 0;
  double mean = 0;
  std::optional<double> stddev, skew, kurt;
  ExtremeWitness min, max;
};

/// Moments and extremes of one spectral index over the given records
/// (callers filter to signable or integrally-invertible-signable first);
/// nothing for an empty selection.
std::optional<StatsRow> descriptive_stats(const std::vector<const SurveyRecord*>& recs,
                                          IndexKind kind);

std::vector<const SurveyRecord*> filter_signable(const std::vector<SurveyRecord>& records);
std::vector<const SurveyRecord*> filter_ii_signable(const std::vector<SurveyRecord>& records);

/// Full per-order statistics block: moments for lambda_max/lambda_min,
/// extremes for all five indices.
struct StatsTable {
  int m = 0;
  uint64_t n = 0;
  std::optional<StatsRow> lambda_max, lambda_min, gap, ind, pow;
};

StatsTable stats_table(const std::vector<SurveyRecord>& records, bool integrally_invertible_only);

/// c_m ~ w0 * 10^(w1 (m-9) + w2 (m-9)^2), exact at m = 9.
double approx_graph_count(int m);

/// Hardy-Ramanujan partition asymptotic: exp(pi sqrt(2m/3)) / (4 m sqrt(3)).
double approx_partition_count(int m);

}  // namespace specgraph
