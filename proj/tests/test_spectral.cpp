#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specgraph/constructions.hpp"
#include "specgraph/exact_linalg.hpp"
#include "specgraph/spectral.hpp"

using namespace specgraph;

namespace {

bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

std::vector<double> random_symmetric(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> a(size_t(n) * n, 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const double v = u(rng);
      a[size_t(r) * n + c] = v;
      a[size_t(c) * n + r] = v;
    }
  return a;
}

}  // namespace

TEST_CASE("documented spectra") {
  const Spectrum c4 = graph_spectrum(cycle_graph(4));
  REQUIRE(c4.values.size() == 4);
  CHECK(close(c4.values[0], 2.0));
  CHECK(close(c4.values[1], 0.0));
  CHECK(close(c4.values[2], 0.0));
  CHECK(close(c4.values[3], -2.0));

  const Spectrum s5 = graph_spectrum(star_graph(5));
  CHECK(close(s5.values.front(), 2.0));
  CHECK(close(s5.values.back(), -2.0));
  for (int i = 1; i <= 3; ++i) CHECK(close(s5.values[i], 0.0));

  // K_{4,4} minus an edge: four nonzeros and four zeros.
  const Spectrum k44e = graph_spectrum(kmm_minus_e(4));
  const double r = std::sqrt(21.0);
  CHECK(close(k44e.values[0], (3.0 + r) / 2.0));
  CHECK(close(k44e.values[1], (-3.0 + r) / 2.0));
  CHECK(close(k44e.values[6], (3.0 - r) / 2.0));
  CHECK(close(k44e.values[7], -(3.0 + r) / 2.0));
  for (int i = 2; i <= 5; ++i) CHECK(close(k44e.values[i], 0.0));
}

TEST_CASE("trace of a simple-graph spectrum vanishes") {
  for (const Graph& g : enumerate_connected_graphs(6)) {
    const Spectrum s = graph_spectrum(g);
    double sum = 0;
    for (double v : s.values) sum += v;
    CHECK(std::abs(sum) <= 1e-12 * 6 * std::max(1.0, std::abs(s.values.front())));
    CHECK(s.values.front() > 0);
    CHECK(s.values.back() < 0);
  }
}

TEST_CASE("eigenpair residuals stay below the contract bound") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + int(rng() % 15);
    const auto a = random_symmetric(rng, n);
    const EigenSystem sys = eigen_system_symmetric(a, n);
    double norm = 0;
    for (double v : a) norm += v * v;
    norm = std::sqrt(norm);
    const double bound = 10.0 * n * std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);
    for (int k = 0; k < n; ++k) {
      double resid = 0;
      for (int r = 0; r < n; ++r) {
        double av = 0;
        for (int c = 0; c < n; ++c) av += a[size_t(r) * n + c] * sys.vectors[size_t(c) * n + k];
        const double d = av - sys.values[k] * sys.vectors[size_t(r) * n + k];
        resid += d * d;
      }
      CHECK(std::sqrt(resid) <= bound);
    }
  }
  CHECK_THROWS_AS(eigenvalues_symmetric({0, 1, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("spectral indices of the documented graphs") {
  const SpectralIndices c4 = indices_of_graph(cycle_graph(4));
  CHECK(close(c4.gap, 4.0));
  CHECK(close(c4.ind, 2.0));
  CHECK(close(c4.pow, 4.0));

  const SpectralIndices s10 = indices_of_graph(star_graph(10));
  CHECK(close(s10.pow, 6.0));

  const SpectralIndices k33 = indices_of_graph(complete_bipartite(3, 3));
  CHECK(close(k33.gap, 6.0));
  CHECK(close(k33.ind, 3.0));
  CHECK(close(k33.pow, 6.0));

  Spectrum one_signed;
  one_signed.values = {2.0, 1.0};
  CHECK_THROWS_AS(spectral_indices(one_signed), std::domain_error);
  Spectrum zeros;
  zeros.values = {0.0, 0.0};
  CHECK_THROWS_AS(spectral_indices(zeros), std::domain_error);
}

TEST_CASE("reciprocal indices from the exact pseudoinverse") {
  // P3: A+ = A/2, lambda_max(A+) = sqrt(2)/2, gap = 2 sqrt(2).
  const SpectralIndices p3 = reciprocal_indices_from_pinv(adjacency_matrix(path_graph(3)));
  CHECK(close(p3.gap, 2.0 * std::sqrt(2.0)));

  // Invertible adjacency: reciprocals are exact.
  const SpectralIndices p4 = reciprocal_indices_from_pinv(adjacency_matrix(path_graph(4)));
  const SpectralIndices p4d = indices_of_graph(path_graph(4));
  CHECK(close(p4.gap, p4d.gap));
  CHECK(close(p4.ind, p4d.ind));

  // K_{2,3}: lambda_plus = sqrt(6).
  const SpectralIndices k23 = reciprocal_indices_from_pinv(adjacency_matrix(complete_bipartite(2, 3)));
  CHECK(close(k23.lambda_plus, std::sqrt(6.0)));
}

TEST_CASE("reciprocal property across the order-6 census") {
  for (const Graph& g : enumerate_connected_graphs(6)) {
    const SpectralIndices direct = indices_of_graph(g);
    const SpectralIndices recip = reciprocal_indices_from_pinv(adjacency_matrix(g));
    const double scale = std::max(1.0, std::abs(direct.gap));
    CHECK(std::abs(direct.gap - recip.gap) <= 1e-9 * scale);
    CHECK(std::abs(direct.ind - recip.ind) <= 1e-9 * scale);
  }
}

TEST_CASE("eigenvalue bounds with the documented equality cases") {
  for (int m = 2; m <= 6; ++m) {
    const std::string km = canonical_form(complete_graph(m));
    const std::string pm = canonical_form(path_graph(m));
    const std::string kb = canonical_form(complete_bipartite((m + 1) / 2, m / 2));
    for (const Graph& g : enumerate_connected_graphs(m)) {
      const Spectrum s = graph_spectrum(g);
      const double lmax = s.values.front();
      const double lmin = s.values.back();
      CHECK(lmax <= m - 1 + 1e-9);
      CHECK(lmax >= 2.0 * std::cos(M_PI / (m + 1)) - 1e-9);
      CHECK(lmin >= -std::sqrt(double(m / 2) * ((m + 1) / 2)) - 1e-9);
      const std::string canon = canonical_form(g);
      if (std::abs(lmax - (m - 1)) <= 1e-9) CHECK(canon == km);
      if (std::abs(lmax - 2.0 * std::cos(M_PI / (m + 1))) <= 1e-9) CHECK(canon == pm);
      if (std::abs(lmin + std::sqrt(double(m / 2) * ((m + 1) / 2))) <= 1e-9) CHECK(canon == kb);
    }
  }
}
