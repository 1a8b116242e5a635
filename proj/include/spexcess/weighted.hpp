#pragma once

#include <vector>

#include "spexcess/graph.hpp"
#include "spexcess/poly.hpp"
#include "spexcess/spectral.hpp"

namespace spexcess {

/// Perron-weighted distance matrices A*_i = A_i ∘ αα^T.
struct WeightedMatrices {
  Matrix jstar;
  std::vector<Matrix> astar;  // i = 0..D
  std::vector<Matrix> sstar;  // S*_j = Σ_{i≤j} A*_i

  int diameter() const { return static_cast<int>(astar.size()) - 1; }
  /// S*_j, with S*_j = J* for j ≥ D.
  const Matrix& partial_sum(int j) const;
};

WeightedMatrices weighted_matrices(const DistanceData& dd, const PerronWeights& pw);

/// ⟨M, N⟩ = (1/n)·tr(MN) on symmetric matrices.
double matrix_inner_product(const Matrix& m, const Matrix& n);

struct ExcessStats {
  int n = 0;
  int diameter = 0;
  /// ball_norms(u, j) = ‖ρ_{N_j(u)}‖², j = 0..D.
  Matrix ball_norms;
  /// sphere_norms(u, i) = ‖ρ_{Γ_i(u)}‖², i = 0..D.
  Matrix sphere_norms;
  /// H*_{≤j} = n / Σ_u α_u²/‖ρ_{N_j(u)}‖², j = 0..D.
  std::vector<double> harmonic_means;
  /// δ*_i = (1/n) Σ_u α_u² ‖ρ_{Γ_i(u)}‖², i = 0..D.
  std::vector<double> delta_stars;
  /// p_{≥D}(λ_0) = n − q_{D−1}(λ_0).
  double spectral_excess = 0.0;
  /// δ*_u = (1/α_u) Σ_{v∼u} α_v.
  std::vector<double> avg_weighted_degree;

  /// H*_{≤j}; equals n for j ≥ D.
  double harmonic_mean(int j) const;
  double n_minus_harmonic() const { return n - harmonic_mean(diameter - 1); }
  double delta_star_d() const { return delta_stars.back(); }
};

ExcessStats excess_stats(const Graph& g, const DistanceData& dd, const PerronWeights& pw,
                         const PolySequence& global);

}  // namespace spexcess
