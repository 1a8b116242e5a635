#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spexcess/analysis.hpp"

namespace spexcess {

struct IntersectionTriple {
  double c = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Two vertices of the same sphere Γ_i(u) whose counts differ.
struct Counterexample {
  int i = 0;
  int v = 0;
  int w = 0;
  std::string which;  // "c", "a" or "b"
  double value_v = 0.0;
  double value_w = 0.0;

  std::string describe() const;
};

struct PseudoDistanceRegularity {
  int vertex = 0;
  bool holds = false;
  /// Perron-weighted numbers per sphere i = 0..ε_u, read off the first vertex.
  std::vector<IntersectionTriple> numbers;
  std::optional<Counterexample> counterexample;
};

/// Constancy of c*_i(v), a*_i(v), b*_i(v) over each sphere Γ_i(u).
PseudoDistanceRegularity is_pseudo_dr_around(int u, const Graph& g, const DistanceData& dd,
                                             const PerronWeights& pw, double tol);

struct DistanceRegularity {
  bool holds = false;
  /// {b_0..b_{D-1}; c_1..c_D}; a_i alongside. Filled only when holds.
  std::vector<int> b;
  std::vector<int> c;
  std::vector<int> a;
  std::optional<std::string> counterexample;

  std::string intersection_array() const;
};

DistanceRegularity is_distance_regular(const Graph& g, const DistanceData& dd);

struct DistancePolynomiality {
  bool holds = false;
  /// ‖A_i − proj(A_i)‖_F onto span{I, A, …, A^d}, i = 0..D.
  std::vector<double> residuals;
};

/// Least squares of every A_i over the adjacency algebra, using the matrix
/// inner product (1/n)·tr(MN). Holds iff every residual ≤ tol·n.
DistancePolynomiality is_distance_polynomial(const Graph& g, const DistanceData& dd,
                                             const Spectrum& spectrum, double tol);

/// Largest m ≤ min(D, d) with p_i(A) = A_i entrywise for all i ≤ m.
/// Throws InvariantViolation if m ≥ 2 on a nonregular graph.
int partial_dr_level(const Graph& g, const DistanceData& dd, const PolySequence& global,
                     const Idempotents& idem, double tol);

struct Classification {
  bool is_regular = false;
  DistanceRegularity distance_regular;
  std::vector<PseudoDistanceRegularity> pseudo_dr;  // per vertex
  int partial_dr_level = 0;
  DistancePolynomiality distance_polynomial;
  std::vector<int> extremal_vertices;

  std::vector<int> pseudo_dr_vertices() const;
};

Classification classify(const Analysis& a);

}  // namespace spexcess
