#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specgraph/constructions.hpp"
#include "specgraph/survey.hpp"
#include "specgraph/tables.hpp"

using namespace specgraph;

namespace {

bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

// Partition numbers by the classic coin-style dynamic program.
std::vector<unsigned long long> partition_counts(int up_to) {
  std::vector<unsigned long long> p(up_to + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= up_to; ++part)
    for (int total = part; total <= up_to; ++total) p[total] += p[total - part];
  return p;
}

}  // namespace

TEST_CASE("classify_stream reproduces the order-5 and order-6 columns") {
  const auto five = classify_stream(census_lines(5));
  REQUIRE(five.records.size() == 21);
  const CountTable t5 = count_tables(five.records);
  CHECK(t5.pos == 3);
  CHECK(t5.neg == 1);
  CHECK(t5.both == 4);
  CHECK(t5.signable == 8);
  CHECK(t5.det_nonzero == 8);
  CHECK(t5.det_unit == 0);

  const auto six = classify_stream(census_lines(6));
  const CountTable t6 = count_tables(six.records);
  CHECK(t6.all == 112);
  CHECK(t6.det_nonzero == 52);
  CHECK(t6.det_unit == 29);
  CHECK(t6.signable == 47);
  CHECK(t6.ii_pos == 20);
  CHECK(t6.ii_neg == 4);
  CHECK(t6.ii_both == 4);

  CHECK(classify_stream({}).records.empty());
}

TEST_CASE("stream rejects bad lines but keeps going") {
  std::vector<std::string> lines = {
      "Bw",            // K3
      ":sparse",       // sparse6 -> parse error
      "C?",            // 4 isolated vertices -> disconnected
      "",              // blank, skipped
      ">>graph6<<",    // header, skipped
      "Bg\r",          // P3, CRLF-terminated
      "@",             // K1: no indices
  };
  const auto res = classify_stream(lines);
  CHECK(res.records.size() == 2);
  CHECK(res.records[1].graph6 == "Bg");
  CHECK(res.disconnected == 1);
  REQUIRE(res.errors.size() == 3);
  CHECK(res.errors[0].find("line 2") == 0);
  CHECK(res.errors[1].find("line 3") == 0);
  CHECK(res.errors[2].find("line 7") == 0);
}

TEST_CASE("worker count does not change the result bytes") {
  const auto lines = census_lines(6);
  SurveyOptions one;
  SurveyOptions four;
  four.workers = 4;
  const auto a = classify_stream(lines, one);
  const auto b = classify_stream(lines, four);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].graph6 == b.records[i].graph6);
    CHECK(a.records[i].det == b.records[i].det);
    CHECK(a.records[i].cls.kind == b.records[i].cls.kind);
  }
  const std::string ta = render_stats_table(stats_table(a.records, false), TableFormat::Markdown);
  const std::string tb = render_stats_table(stats_table(b.records, false), TableFormat::Markdown);
  CHECK(ta == tb);
}

TEST_CASE("accumulator merge is associative across random shards") {
  const auto res = classify_stream(census_lines(6));
  const auto sel = filter_signable(res.records);

  StatsAccumulator whole;
  std::vector<std::pair<double, std::string>> items;
  for (const SurveyRecord* r : sel) {
    const std::string canon = canonical_form(parse_graph6(r->graph6));
    items.emplace_back(index_value(r->idx, IndexKind::LambdaMax), canon);
    whole.add(items.back().first, canon, r->cls.kind);
  }

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const size_t cut1 = rng() % items.size();
    const size_t cut2 = cut1 + rng() % (items.size() - cut1);
    StatsAccumulator a, b, c;
    for (size_t i = 0; i < cut1; ++i) a.add(items[i].first, items[i].second, sel[i]->cls.kind);
    for (size_t i = cut1; i < cut2; ++i) b.add(items[i].first, items[i].second, sel[i]->cls.kind);
    for (size_t i = cut2; i < items.size(); ++i)
      c.add(items[i].first, items[i].second, sel[i]->cls.kind);
    StatsAccumulator left = a;
    left.merge(b);
    left.merge(c);
    StatsAccumulator right = b;
    right.merge(c);
    StatsAccumulator total = a;
    total.merge(right);
    for (const StatsAccumulator* acc : {&left, &total}) {
      CHECK(acc->count == whole.count);
      CHECK(close(acc->mean(), whole.mean(), 1e-12));
      CHECK(close(*acc->stddev(), *whole.stddev(), 1e-12));
      CHECK(close(*acc->kurtosis(), *whole.kurtosis(), 1e-12));
      CHECK(acc->min->graph6 == whole.min->graph6);
      CHECK(acc->max->graph6 == whole.max->graph6);
    }
  }
}

TEST_CASE("count consistency and determinant parity") {
  for (int m = 3; m <= 6; ++m) {
    const auto res = classify_stream(census_lines(m));
    const CountTable t = count_tables(res.records);
    CHECK(t.pos + t.neg + t.both == t.signable);
    CHECK(t.ii_signable <= t.signable);
    if (m % 2 == 1) CHECK(t.det_unit == 0);
  }
}

TEST_CASE("statistics conventions: the two-graph fingerprint") {
  // Over the two signable integrally invertible order-4 graphs the stated
  // conventions give sigma = 0.3904, skew = 0, kurt = 1.
  const auto res = classify_stream(census_lines(4));
  const auto t = stats_table(res.records, true);
  REQUIRE(t.n == 2);
  REQUIRE(t.lambda_max.has_value());
  CHECK(close(t.lambda_max->mean, 1.8941, 1e-4));
  CHECK(close(*t.lambda_max->stddev, 0.3904, 1e-4));
  CHECK(close(*t.lambda_max->skew, 0.0, 1e-12));
  CHECK(close(*t.lambda_max->kurt, 1.0, 1e-12));
}

TEST_CASE("order 3 column: one graph, moments absent") {
  const auto res = classify_stream(census_lines(3));
  const auto t = stats_table(res.records, false);
  REQUIRE(t.n == 1);
  CHECK(close(t.lambda_max->mean, std::sqrt(2.0)));
  CHECK_FALSE(t.lambda_max->stddev.has_value());
  CHECK_FALSE(t.lambda_max->skew.has_value());
  CHECK_FALSE(t.lambda_max->kurt.has_value());
}

TEST_CASE("extremal witnesses reproduce their values when reclassified") {
  const auto res = classify_stream(census_lines(6));
  const auto t = stats_table(res.records, false);
  for (const auto* row : {&*t.lambda_max, &*t.lambda_min, &*t.gap, &*t.ind, &*t.pow}) {
    for (const ExtremeWitness* w : {&row->min, &row->max}) {
      const Graph g = parse_graph6(w->graph6);
      CHECK(classify(g).kind == w->cls);
    }
  }
  REQUIRE(t.pow.has_value());
  const SpectralIndices idx = indices_of_graph(parse_graph6(t.pow->min.graph6));
  CHECK(close(idx.pow, t.pow->min.value));
  CHECK(close(t.pow->min.value, 2.0 * std::sqrt(5.0)));  // star S6
}

TEST_CASE("graph count approximation formula") {
  CHECK(approx_graph_count(9) == doctest::Approx(261080.0));
  CHECK(approx_graph_count(10) == doctest::Approx(261080.0 * std::pow(10.0, 1.49)));
  CHECK(approx_graph_count(10) / 11716571.0 > 0.5);
  CHECK(approx_graph_count(10) / 11716571.0 < 1.5);
  CHECK(approx_graph_count(8) == doctest::Approx(261080.0 * std::pow(10.0, -1.31)));
  CHECK(std::abs(approx_graph_count(8) - 12787.0) < 1.0);
}

TEST_CASE("partition count approximation against the DP oracle") {
  const auto p = partition_counts(100);
  CHECK(p[10] == 42);
  CHECK(p[100] == 190569292ull);
  CHECK(approx_partition_count(10) == doctest::Approx(48.104).epsilon(1e-3));
  CHECK(approx_partition_count(1) == doctest::Approx(1.8773).epsilon(1e-3));
  CHECK(std::abs(approx_partition_count(100) / double(p[100]) - 1.0) < 0.05);
}

TEST_CASE("table rendering") {
  const auto res = classify_stream(census_lines(4));
  const CountTable t = count_tables(res.records);

  const std::string md = render_count_tables({t}, TableFormat::Markdown);
  CHECK(md.find("| m | 4 |") == 0);
  CHECK(md.find("| all graphs | 6 |") != std::string::npos);

  const std::string csv = render_count_tables({t}, TableFormat::Csv);
  CHECK(csv.find("m,4") == 0);

  const std::string json_text = render_count_tables({t}, TableFormat::Json);
  CHECK(json_text.find("\"schema\": \"specgraph/1\"") != std::string::npos);

  const auto st = stats_table(res.records, false);
  const std::string sj = render_stats_table(st, TableFormat::Json);
  for (const char* key : {"\"mean\"", "\"std\"", "\"skew\"", "\"kurt\"", "\"min\"", "\"max\"",
                          "\"graph6\"", "\"class\"", "\"schema\""})
    CHECK(sj.find(key) != std::string::npos);

  const std::string empty_csv = render_count_tables({}, TableFormat::Csv);
  CHECK(empty_csv == "m\nall graphs\ndet != 0\ndet = +-1\n+signable\n-signable\n+-signable\n"
                     "all signable\n+signable (det=+-1)\n-signable (det=+-1)\n"
                     "+-signable (det=+-1)\nall signable (det=+-1)\n");

  // 4-decimal presentation by default, full precision on request.
  CHECK(format_real(2.0 * std::sqrt(5.0)) == "4.4721");
  CHECK(format_real(2.0 * std::sqrt(5.0), true).substr(0, 6) == "4.4721");
}

TEST_CASE("census checksum changes with content") {
  const auto a = census_lines(4);
  auto b = a;
  b.pop_back();
  CHECK(census_checksum(a) != census_checksum(b));
  CHECK(census_checksum(a) == census_checksum(census_lines(4)));
}

TEST_CASE("survey option validation") {
  SurveyOptions bad_workers;
  bad_workers.workers = 0;
  CHECK_THROWS_AS(classify_stream({"Bw"}, bad_workers), std::invalid_argument);
  SurveyOptions bad_tol;
  bad_tol.zero_tol = 1e-2;
  CHECK_THROWS_AS(classify_stream({"Bw"}, bad_tol), std::invalid_argument);
}
