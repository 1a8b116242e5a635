#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spexcess/graph.hpp"

namespace spexcess::testing {

/// G(n, p) resampled until connected.
Graph random_connected(std::mt19937_64& rng, int n, double p);
/// Uniform random recursive tree: vertex k attaches to a uniform earlier vertex.
Graph random_tree(std::mt19937_64& rng, int n);
/// Alternating ER graphs and trees with 2 ≤ n ≤ max_n.
std::vector<Graph> random_suite(std::uint64_t seed, int count, int max_n = 12);

Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Floyd–Warshall hop distances, independent of the BFS in graph-core.
Eigen::MatrixXi floyd_warshall(const Graph& g);

/// (1/φ_i)·Π_{j≠i}(A − λ_j I).
Matrix lagrange_idempotent(const Matrix& a, const std::vector<double>& lambdas, int i);

double max_abs(const Matrix& m);

}  // namespace spexcess::testing
