#pragma once

// Shared helpers for the unit and acceptance tests: random samplers and
// independent brute-force oracles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "raagrep/graph.hpp"
#include "raagrep/obstruction.hpp"
#include "raagrep/quat.hpp"
#include "raagrep/words.hpp"

namespace testing_support {

using namespace raagrep;

inline Quaternion random_s3(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Quaternion q{g(rng), g(rng), g(rng), g(rng)};
  return (1.0 / q.norm()) * q;
}

inline Quaternion random_s2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Quaternion q{0, g(rng), g(rng), g(rng)};
  return (1.0 / q.norm()) * q;
}

inline Quaternion perturb(const Quaternion& q, double eps, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-eps, eps);
  return q + Quaternion{u(rng), u(rng), u(rng), u(rng)};
}

/// Haar-ish random unitary from the QR factorization of a complex Gaussian.
inline CMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix z(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) z(r, c) = {g(rng), g(rng)};
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < n; ++c) q.col(c) *= std::polar(1.0, std::arg(rr(c, c)));
  return q;
}

inline CMatrix random_special_unitary(Eigen::Index n, std::mt19937_64& rng) {
  CMatrix u = random_unitary(n, rng);
  const std::complex<double> d = u.determinant();
  return u * std::pow(d, -1.0 / static_cast<double>(n));
}

/// An SU(n) element P diag(e^{i a_1}, ..., e^{i a_n}) P^* with angles summing
/// to zero. `degenerate` repeats the first angle.
inline CMatrix random_torus_element(const CMatrix& p, std::mt19937_64& rng, bool degenerate = false) {
  const Eigen::Index n = p.rows();
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> a(static_cast<std::size_t>(n));
  double sum = 0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    a[static_cast<std::size_t>(k)] = degenerate && k > 0 ? a[0] : angle(rng);
    sum += a[static_cast<std::size_t>(k)];
  }
  a.back() = -sum;
  CMatrix d = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) d(k, k) = std::polar(1.0, a[static_cast<std::size_t>(k)]);
  return p * d * p.adjoint();
}

struct CommutingTuple {
  Graph graph;
  MatrixRepresentation x;
};

/// Commuting tuple in SU(n) on `vertices` vertices: each vertex draws from
/// one of two randomly conjugated maximal tori or from the center, and edges
/// are a random subset of the commuting pairs.
inline CommutingTuple random_commuting_tuple(std::size_t vertices, Eigen::Index n, std::mt19937_64& rng) {
  const CMatrix p0 = random_special_unitary(n, rng), p1 = random_special_unitary(n, rng);
  std::uniform_int_distribution<int> kind(0, 4);
  std::bernoulli_distribution coin(0.7);
  MatrixRepresentation x{GroupTag::SU, {}};
  for (std::size_t v = 0; v < vertices; ++v) {
    const int k = kind(rng);
    if (k == 4) {
      std::uniform_int_distribution<int> root(0, static_cast<int>(n) - 1);
      x.values.push_back(std::polar(1.0, 2 * std::numbers::pi * root(rng) / static_cast<double>(n)) *
                         CMatrix::Identity(n, n));
    } else {
      x.values.push_back(random_torus_element(k < 2 ? p0 : p1, rng, k % 2 == 1));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices; ++a)
    for (std::size_t b = a + 1; b < vertices; ++b) {
      const double c = (x.values[a] * x.values[b] - x.values[b] * x.values[a]).norm();
      if (c < 1e-12 && coin(rng)) edges.push_back({a, b});
    }
  return {Graph::with_indexed_names(vertices, std::move(edges)), std::move(x)};
}

/// Lexicographically least shortest word reachable from `w` by swapping
/// adjacent commuting letters and deleting adjacent inverse pairs.
/// Breadth-first closure; independent of normalize().
inline Word closure_canonical(const Graph& k, const Word& w) {
  std::set<Word, bool (*)(const Word&, const Word&)> seen(+[](const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  std::deque<Word> queue{w};
  seen.insert(w);
  Word best = w;
  auto better = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (better(cur, best)) best = cur;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Word next;
      if (cur[i].vertex == cur[i + 1].vertex && cur[i].exponent == -cur[i + 1].exponent) {
        next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      } else if (cur[i].vertex != cur[i + 1].vertex && k.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return best;
}

/// All words of exactly `len` letters over the vertices of k.
inline void all_words(const Graph& k, std::size_t len, Word& prefix, std::vector<Word>& out) {
  if (prefix.size() == len) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    for (int e : {1, -1}) {
      prefix.push_back({v, e});
      all_words(k, len, prefix, out);
      prefix.pop_back();
    }
}

inline std::vector<Word> all_words_up_to(const Graph& k, std::size_t max_len) {
  std::vector<Word> out;
  Word prefix;
  for (std::size_t len = 0; len <= max_len; ++len) all_words(k, len, prefix, out);
  return out;
}

inline Word random_word(const Graph& k, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), vertex(0, k.vertex_count() - 1);
  std::bernoulli_distribution inv(0.5);
  Word w(len(rng));
  for (auto& l : w) l = {vertex(rng), inv(rng) ? -1 : 1};
  return w;
}

inline EdgeMarking random_marking(const Graph& k, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  EdgeMarking m(k.edge_count());
  for (auto& s : m) s = coin(rng) ? Sign::minus : Sign::plus;
  return m;
}

/// 2-degeneracy by dynamic programming over vertex subsets: S is peelable
/// iff it is empty or some v in S has at most 2 neighbors in S and S - v is
/// peelable. Independent of the greedy ordering.
inline bool two_degenerate_oracle(const Graph& k) {
  const std::size_t n = k.vertex_count();
  std::vector<char> ok(std::size_t{1} << n, 0);
  ok[0] = 1;
  for (std::size_t s = 1; s < ok.size(); ++s) {
    for (std::size_t v = 0; v < n && !ok[s]; ++v) {
      if (!(s >> v & 1)) continue;
      std::size_t deg = 0;
      for (std::size_t u : k.neighbors(v)) deg += s >> u & 1;
      if (deg <= 2 && ok[s & ~(std::size_t{1} << v)]) ok[s] = 1;
    }
  }
  return ok.back();
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w, ++bit)
      if (mask >> bit & 1) edges.push_back({v, w});
  return Graph::with_indexed_names(n, std::move(edges));
}

}  // namespace testing_support
