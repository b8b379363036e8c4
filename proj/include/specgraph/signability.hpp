#pragma once

#include <optional>
#include <vector>

#include "specgraph/matrix.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

enum class SignKind { NotSignable, PositiveOnly, NegativeOnly, Both };

const char* to_string(SignKind k);
/// Table tag for extreme witnesses: "(+)", "(-)", "(±)"; empty for NotSignable.
const char* sign_tag(SignKind k);

/// Elementwise exact signs over {-1, 0, +1}.
struct SignPattern {
  int n = 0;
  std::vector<int8_t> s;
  int8_t at(int i, int j) const { return s[size_t(i) * n + j]; }
};

SignPattern sign_pattern(const RationalMatrix& m);

/// Diagonal +-1 signature as a vector; first entry pinned to +1 to
/// quotient the D <-> -D symmetry.
using SignatureVector = std::vector<int8_t>;

enum class SignTarget { Positive, Negative };

/// Signature making every signed entry non-negative (Positive) or
/// non-positive (Negative), found by parity union-find over the
/// constraints d_i d_j = sign(M_ij); absence is a normal result.
std::optional<SignatureVector> find_signature(const SignPattern& p, SignTarget target);

struct Classification {
  SignKind kind = SignKind::NotSignable;
  std::optional<SignatureVector> pos_witness;
  std::optional<SignatureVector> neg_witness;
  bool signable() const { return kind != SignKind::NotSignable; }
};

/// Four-way classification of an already-computed symmetric pseudoinverse.
Classification classify_pseudoinverse(const RationalMatrix& pinv);

/// Computes the exact pseudoinverse of the adjacency matrix, decides both
/// signabilities, and verifies any witness by a direct sign check.
Classification classify(const Graph& g);

/// Oracle: tries all 2^(n-1) signatures for both targets. n <= 20.
Classification brute_force_signability(const RationalMatrix& m);

/// Undirected graph with non-negative rational edge weights; diagonal
/// entries are loop weights.
struct WeightedGraph {
  explicit WeightedGraph(RationalMatrix w) : weights(std::move(w)) {}
  RationalMatrix weights;
  int order() const { return weights.rows(); }
};

/// D A+ D when positively signable, else -D A+ D when negatively
/// signable, else nothing.
std::optional<WeightedGraph> pseudo_inverse_graph(const Graph& g);

/// True iff pseudo-inverting the weighted pseudo-inverse graph returns
/// the original adjacency matrix exactly. Throws std::domain_error for a
/// non-signable graph.
bool involution_check(const Graph& g);

struct Homothety {
  std::optional<Rational> kappa_rational;
  double kappa = 0;
  std::vector<int> perm;  // weights[i][j] = kappa * A[perm[i]][perm[j]]
};

/// Searches for kappa > 0 and a permutation with W = kappa P A P^T, where
/// W is the weighted pseudo-inverse adjacency. kappa is taken from the
/// spectral radii and verified exactly when recognized as rational.
/// Requires a signable graph of order <= 10.
std::optional<Homothety> homothety_check(const Graph& g);

/// Continued-fraction reconstruction of a rational from a double;
/// denominator capped at max_den, relative tolerance rel_tol.
std::optional<Rational> rationalize(double x, double rel_tol = 1e-9,
                                    unsigned long max_den = 1000000);

}  // namespace specgraph
