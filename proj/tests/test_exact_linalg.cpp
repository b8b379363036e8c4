#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specgraph/constructions.hpp"
#include "specgraph/exact_linalg.hpp"
#include "specgraph/graph.hpp"

using namespace specgraph;

namespace {

RationalMatrix scaled_adjacency(const Graph& g, const Rational& factor) {
  RationalMatrix m = to_rational(adjacency_matrix(g));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) *= factor;
  return m;
}

bool is_integer_matrix(const RationalMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c).get_den() != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("determinants of the documented adjacency matrices") {
  CHECK(det_integer(adjacency_matrix(complete_graph(3))) == 2);
  CHECK(det_integer(adjacency_matrix(cycle_graph(4))) == 0);
  CHECK(det_integer(adjacency_matrix(path_graph(4))) == 1);
  CHECK(det_integer(adjacency_matrix(path_graph(2))) == -1);
  CHECK(det_integer(IntMatrix::identity(5)) == 1);
  CHECK(det_integer(IntMatrix(0, 0)) == 1);
}

TEST_CASE("Bareiss elimination handles zero pivots via row swaps") {
  IntMatrix m(3, 3);
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(2, 2) = 5;
  CHECK(det_integer(m) == -30);
}

TEST_CASE("rref pivots and rank") {
  const auto id = rank_and_rref(RationalMatrix::identity(3));
  CHECK(id.pivots == std::vector<int>{0, 1, 2});

  const auto k22 = rank_and_rref(to_rational(adjacency_matrix(complete_bipartite(2, 2))));
  CHECK(k22.pivots.size() == 2);

  const auto zero = rank_and_rref(RationalMatrix(3, 3));
  CHECK(zero.pivots.empty());
}

TEST_CASE("pseudoinverse of the documented matrices") {
  // P3: A+ = A/2
  const Graph p3 = path_graph(3);
  CHECK(mp_pseudoinverse_exact(to_rational(adjacency_matrix(p3))) ==
        scaled_adjacency(p3, Rational(1, 2)));

  // K_{2,3}: A+ = A/6
  const Graph k23 = complete_bipartite(2, 3);
  CHECK(mp_pseudoinverse_exact(to_rational(adjacency_matrix(k23))) ==
        scaled_adjacency(k23, Rational(1, 6)));

  CHECK(mp_pseudoinverse_exact(RationalMatrix(4, 4)) == RationalMatrix(4, 4));

  RationalMatrix asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(mp_pseudoinverse_exact(asym), std::invalid_argument);
}

TEST_CASE("Penrose axiom verification") {
  const Graph p3 = path_graph(3);
  CHECK(verify_mp_axioms(to_rational(adjacency_matrix(p3)),
                         scaled_adjacency(p3, Rational(1, 2))));

  const RationalMatrix k3 = to_rational(adjacency_matrix(complete_graph(3)));
  CHECK(verify_mp_axioms(k3, *invert_exact(k3)));

  // A itself is not the pseudoinverse of C4 since A^3 = 4A != A.
  const RationalMatrix c4 = to_rational(adjacency_matrix(cycle_graph(4)));
  CHECK_FALSE(verify_mp_axioms(c4, c4));
}

TEST_CASE("pseudoinverse invariants over every connected graph of order <= 6") {
  for (int m = 2; m <= 6; ++m) {
    for (const Graph& g : enumerate_connected_graphs(m)) {
      const RationalMatrix a = to_rational(adjacency_matrix(g));
      const RationalMatrix x = mp_pseudoinverse_exact(a);
      CHECK(verify_mp_axioms(a, x));
      CHECK(mp_pseudoinverse_exact(x) == a);  // (A+)+ = A
      CHECK(rank_and_rref(x).pivots.size() == rank_and_rref(a).pivots.size());
    }
  }
}

TEST_CASE("odd order forces an even determinant") {
  for (int m : {3, 5}) {
    for (const Graph& g : enumerate_connected_graphs(m)) {
      CHECK(det_integer(adjacency_matrix(g)) % 2 == 0);
    }
  }
}

TEST_CASE("det = +-1 exactly when the inverse is integral") {
  for (int m = 2; m <= 6; ++m) {
    for (const Graph& g : enumerate_connected_graphs(m)) {
      const BigInt det = det_integer(adjacency_matrix(g));
      if (det == 0) continue;
      const auto inv = invert_exact(to_rational(adjacency_matrix(g)));
      REQUIRE(inv.has_value());
      CHECK(is_integer_matrix(*inv) == (det == 1 || det == -1));
    }
  }
}

TEST_CASE("group inverse agrees with the pseudoinverse on symmetric input") {
  for (const Graph& g : enumerate_connected_graphs(5)) {
    const RationalMatrix a = to_rational(adjacency_matrix(g));
    CHECK(group_inverse(a) == mp_pseudoinverse_exact(a));
  }
}
