#include "specgraph/signability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "specgraph/exact_linalg.hpp"

namespace specgraph {

const char* to_string(SignKind k) {
  switch (k) {
    case SignKind::NotSignable: return "NotSignable";
    case SignKind::PositiveOnly: return "PositiveOnly";
    case SignKind::NegativeOnly: return "NegativeOnly";
    case SignKind::Both: return "Both";
  }
  return "?";
}

const char* sign_tag(SignKind k) {
  switch (k) {
    case SignKind::NotSignable: return "";
    case SignKind::PositiveOnly: return "(+)";
    case SignKind::NegativeOnly: return "(-)";
    case SignKind::Both: return "(±)";
  }
  return "";
}

SignPattern sign_pattern(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("sign_pattern requires a symmetric matrix");
  SignPattern p;
  p.n = m.rows();
  p.s.resize(size_t(p.n) * p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) p.s[size_t(i) * p.n + j] = static_cast<int8_t>(sgn(m(i, j)));
  return p;
}

namespace {

// Union-find with parity to the root: d_i = d_root xor parity(i).
struct ParityUnionFind {
  std::vector<int> parent;
  std::vector<int8_t> parity;

  explicit ParityUnionFind(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int8_t> find(int x) {
    int8_t p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }

  // Adds d_a * d_b = (-1)^want_flip; false on contradiction.
  bool merge(int a, int b, bool want_flip) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    const int8_t rel = static_cast<int8_t>(pa ^ pb ^ (want_flip ? 1 : 0));
    if (ra == rb) return rel == 0;
    parent[rb] = ra;
    parity[rb] = rel;
    return true;
  }
};

bool signs_ok(const SignPattern& p, const SignatureVector& d, SignTarget target) {
  for (int i = 0; i < p.n; ++i)
    for (int j = i; j < p.n; ++j) {
      const int v = d[i] * d[j] * p.at(i, j);
      if (target == SignTarget::Positive ? v < 0 : v > 0) return false;
    }
  return true;
}

}  // namespace

std::optional<SignatureVector> find_signature(const SignPattern& p, SignTarget target) {
  const int n = p.n;
  const int8_t bad_diag = target == SignTarget::Positive ? -1 : 1;
  for (int i = 0; i < n; ++i)
    if (p.at(i, i) == bad_diag) return std::nullopt;

  ParityUnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int8_t s = p.at(i, j);
      if (s == 0) continue;
      if (target == SignTarget::Negative) s = -s;
      // need d_i d_j = s
      if (!uf.merge(i, j, s < 0)) return std::nullopt;
    }

  // Anchor each component at its smallest vertex with +1; vertex 0 is the
  // smallest of its component, so the first entry is +1.
  SignatureVector d(n, 0);
  std::vector<int8_t> anchor(n, -1);
  for (int i = 0; i < n; ++i) {
    auto [root, par] = uf.find(i);
    if (anchor[root] < 0) anchor[root] = par;
    d[i] = (par ^ anchor[root]) ? -1 : 1;
  }
  return d;
}

Classification classify_pseudoinverse(const RationalMatrix& pinv) {
  const SignPattern p = sign_pattern(pinv);
  Classification c;
  c.pos_witness = find_signature(p, SignTarget::Positive);
  c.neg_witness = find_signature(p, SignTarget::Negative);
  if (c.pos_witness && !signs_ok(p, *c.pos_witness, SignTarget::Positive))
    throw std::logic_error("positive witness failed direct sign check");
  if (c.neg_witness && !signs_ok(p, *c.neg_witness, SignTarget::Negative))
    throw std::logic_error("negative witness failed direct sign check");
  if (c.pos_witness && c.neg_witness)
    c.kind = SignKind::Both;
  else if (c.pos_witness)
    c.kind = SignKind::PositiveOnly;
  else if (c.neg_witness)
    c.kind = SignKind::NegativeOnly;
  else
    c.kind = SignKind::NotSignable;
  return c;
}

Classification classify(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("classify requires a connected graph");
  return classify_pseudoinverse(mp_pseudoinverse_exact(to_rational(adjacency_matrix(g))));
}

Classification brute_force_signability(const RationalMatrix& m) {
  const SignPattern p = sign_pattern(m);
  const int n = p.n;
  if (n > 20) throw std::invalid_argument("brute_force_signability supports n <= 20");
  Classification c;
  const uint32_t count = n > 1 ? (uint32_t{1} << (n - 1)) : 1;
  for (SignTarget target : {SignTarget::Positive, SignTarget::Negative}) {
    for (uint32_t mask = 0; mask < count; ++mask) {
      SignatureVector d(n, 1);
      for (int i = 1; i < n; ++i)
        if ((mask >> (i - 1)) & 1u) d[i] = -1;
      if (signs_ok(p, d, target)) {
        (target == SignTarget::Positive ? c.pos_witness : c.neg_witness) = std::move(d);
        break;
      }
    }
  }
  if (c.pos_witness && c.neg_witness)
    c.kind = SignKind::Both;
  else if (c.pos_witness)
    c.kind = SignKind::PositiveOnly;
  else if (c.neg_witness)
    c.kind = SignKind::NegativeOnly;
  return c;
}

namespace {

RationalMatrix signed_matrix(const RationalMatrix& m, const SignatureVector& d, bool negate) {
  const int n = m.rows();
  RationalMatrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      w(i, j) = m(i, j) * (d[i] * d[j]);
      if (negate) w(i, j) = -w(i, j);
    }
  return w;
}

// Non-negative weighted adjacency of the pseudo-inverse graph for an
// already-classified pseudoinverse.
std::optional<RationalMatrix> signed_pinv(const RationalMatrix& pinv, const Classification& c) {
  if (c.pos_witness) return signed_matrix(pinv, *c.pos_witness, false);
  if (c.neg_witness) return signed_matrix(pinv, *c.neg_witness, true);
  return std::nullopt;
}

}  // namespace

std::optional<WeightedGraph> pseudo_inverse_graph(const Graph& g) {
  const RationalMatrix pinv = mp_pseudoinverse_exact(to_rational(adjacency_matrix(g)));
  const Classification c = classify_pseudoinverse(pinv);
  auto w = signed_pinv(pinv, c);
  if (!w) return std::nullopt;
  return WeightedGraph(std::move(*w));
}

bool involution_check(const Graph& g) {
  const RationalMatrix a = to_rational(adjacency_matrix(g));
  const RationalMatrix pinv = mp_pseudoinverse_exact(a);
  const Classification c = classify_pseudoinverse(pinv);
  auto w = signed_pinv(pinv, c);
  if (!w) throw std::domain_error("involution_check requires a signable graph");
  const RationalMatrix w_pinv = mp_pseudoinverse_exact(*w);
  const Classification c2 = classify_pseudoinverse(w_pinv);
  auto back = signed_pinv(w_pinv, c2);
  if (!back) return false;
  return *back == a;
}

std::optional<Rational> rationalize(double x, double rel_tol, unsigned long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double tol = rel_tol * std::max(1.0, std::abs(x));
  // Continued-fraction convergents p/q of x.
  double frac = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(frac);
    if (std::abs(fl) > 1e15) return std::nullopt;
    const long long a = static_cast<long long>(fl);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 < 0 || static_cast<unsigned long long>(q2) > max_den) return std::nullopt;
    if (q2 != 0 && std::abs(static_cast<double>(p2) / static_cast<double>(q2) - x) <= tol) {
      Rational r(BigInt(static_cast<long>(p2)), BigInt(static_cast<long>(q2)));
      r.canonicalize();
      return r;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = frac - fl;
    if (rem < 1e-15) return std::nullopt;
    frac = 1.0 / rem;
  }
  return std::nullopt;
}

namespace {

// Backtracking search in ascending candidate order; the first hit is the
// lexicographically smallest permutation.
struct HomothetySearch {
  const RationalMatrix& w;
  const IntMatrix& a;
  const Rational& kappa;
  int n;
  std::vector<Rational> wanted_rowsum;  // kappa * degree for each A-vertex
  std::vector<Rational> w_rowsum;
  std::vector<int> perm;
  std::vector<bool> used;

  bool dfs(int i) {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (w_rowsum[i] != wanted_rowsum[v]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        const Rational want = a(v, perm[k]) != 0 ? kappa : Rational(0);
        if (w(i, k) != want) ok = false;
      }
      if (!ok) continue;
      perm[i] = v;
      used[v] = true;
      if (dfs(i + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Homothety> homothety_check(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw std::invalid_argument("homothety_check supports order <= 10");
  const RationalMatrix a = to_rational(adjacency_matrix(g));
  const RationalMatrix pinv = mp_pseudoinverse_exact(a);
  const Classification c = classify_pseudoinverse(pinv);
  auto w = signed_pinv(pinv, c);
  if (!w) throw std::domain_error("homothety_check requires a signable graph");

  for (int i = 0; i < n; ++i)
    if ((*w)(i, i) != 0) return std::nullopt;  // loops cannot match kappa P A P^T

  const Spectrum sw = eigenvalues_symmetric(to_double(*w), n);
  const Spectrum sa = graph_spectrum(g);
  const double kappa_num = sw.values.front() / sa.values.front();

  const IntMatrix adj = adjacency_matrix(g);
  if (auto kq = rationalize(kappa_num)) {
    HomothetySearch search{*w, adj, *kq, n, {}, {}, std::vector<int>(n), std::vector<bool>(n)};
    search.wanted_rowsum.resize(n);
    search.w_rowsum.resize(n);
    for (int v = 0; v < n; ++v) search.wanted_rowsum[v] = (*kq) * g.degree(v);
    for (int i = 0; i < n; ++i) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += (*w)(i, j);
      search.w_rowsum[i] = s;
    }
    if (search.dfs(0)) {
      Homothety h;
      h.kappa_rational = *kq;
      h.kappa = kq->get_d();
      h.perm = std::move(search.perm);
      return h;
    }
    return std::nullopt;
  }

  // Irrational kappa: numeric match at 1e-9.
  const std::vector<double> wd = to_double(*w);
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  const double tol = 1e-9 * std::max(1.0, std::abs(sw.values.front()));
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        const double want = g.has_edge(v, perm[k]) ? kappa_num : 0.0;
        if (std::abs(wd[size_t(i) * n + k] - want) > tol) ok = false;
      }
      if (!ok) continue;
      perm[i] = v;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (dfs(dfs, 0)) {
    Homothety h;
    h.kappa = kappa_num;
    h.perm = std::move(perm);
    return h;
  }
  return std::nullopt;
}

}  // namespace specgraph
