#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spexcess {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Edge = std::pair<int, int>;

enum class GraphFormat { edgelist, graph6 };

/// Finite, simple, connected, undirected graph on vertices 0..n-1.
///
/// Immutable once built; the adjacency matrix is stored dense.
class Graph {
 public:
  /// Validates and builds. Throws LoopOrMultiEdgeError, DisconnectedError,
  /// or ParseError (fewer than two vertices, ids out of range).
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const Matrix& adjacency() const { return adjacency_; }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return neighbors_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::string> labels_;
  Matrix adjacency_;
};

/// Reads a whole graph from `in`.
///
/// edgelist: one "u v" pair per line, '#' starts a comment. When every token
/// is a non-negative integer the tokens are the vertex ids; otherwise vertices
/// are numbered in order of first appearance and the tokens kept as labels.
///
/// graph6: standard encoding, optional ">>graph6<<" header, n < 2^18.
Graph load_graph(std::istream& in, GraphFormat format);
Graph parse_edgelist(std::string_view text);
Graph parse_graph6(std::string_view text);

std::string to_edgelist(const Graph& g);
std::string to_graph6(const Graph& g);

/// Hop distances and everything derived from them.
struct DistanceData {
  Eigen::MatrixXi dist;
  /// A_0..A_D as 0/1 matrices.
  std::vector<Matrix> distance_matrices;
  std::vector<int> eccentricity;
  int diameter = 0;
  /// spheres[u][i] = vertices at distance exactly i from u, i = 0..ecc(u).
  std::vector<std::vector<std::vector<int>>> spheres;

  int order() const { return static_cast<int>(eccentricity.size()); }
  /// Γ_i(u); empty for i < 0 or i > ecc(u).
  std::span<const int> sphere(int u, int i) const;
  /// N_i(u) = Γ_0(u) ∪ … ∪ Γ_i(u), sorted ascending.
  std::vector<int> ball(int u, int i) const;
};

DistanceData distance_data(const Graph& g);

struct DegreeProfile {
  std::vector<int> degrees;
  bool is_regular = false;
};

DegreeProfile degree_profile(const Graph& g);

}  // namespace spexcess
