#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "spexcess/errors.hpp"

namespace spexcess::testing {

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    try {
      return Graph::from_edges(n, edges);
    } catch (const DisconnectedError&) {
    }
  }
}

Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> random_suite(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(2, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.75);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) {
    const int n = order(rng);
    out.push_back(k % 2 == 0 ? random_connected(rng, n, density(rng)) : random_tree(rng, n));
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

Eigen::MatrixXi floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = n + 1;
  Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, inf);
  for (int u = 0; u < n; ++u) d(u, u) = 0;
  for (auto [u, v] : g.edges()) d(u, v) = d(v, u) = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return d;
}

Matrix lagrange_idempotent(const Matrix& a, const std::vector<double>& lambdas, int i) {
  const auto n = a.rows();
  Matrix prod = Matrix::Identity(n, n);
  double phi = 1.0;
  for (int j = 0; j < static_cast<int>(lambdas.size()); ++j) {
    if (j == i) continue;
    prod = prod * (a - lambdas[j] * Matrix::Identity(n, n));
    phi *= lambdas[i] - lambdas[j];
  }
  return prod / phi;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace spexcess::testing
