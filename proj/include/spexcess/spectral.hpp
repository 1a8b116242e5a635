#pragma once

#include <vector>

#include "spexcess/graph.hpp"

namespace spexcess {

struct SpectralOptions {
  /// Jacobi stops once the off-diagonal Frobenius norm drops below tol·‖A‖_F.
  double tol = 1e-12;
  /// Eigenvalues within group_tol·max(1, |λ_0|) of their neighbour share a class.
  double group_tol = 1e-7;
  int max_sweeps = 30;
};

/// Full eigendecomposition of a dense symmetric matrix.
struct Eigenpairs {
  Vector values;   // descending
  Matrix vectors;  // orthonormal columns, first nonzero entry positive
  int sweeps = 0;
};

/// Cyclic-by-row Jacobi. Throws ConvergenceError past `max_sweeps`.
Eigenpairs jacobi_eigensolver(const Matrix& symmetric, double tol, int max_sweeps);

/// Distinct eigenvalues λ_0 > … > λ_d of the adjacency matrix.
struct Spectrum {
  std::vector<double> lambdas;
  std::vector<int> multiplicities;
  /// Columns of raw.vectors belonging to each distinct eigenvalue.
  std::vector<std::vector<int>> classes;
  Eigenpairs raw;

  int d() const { return static_cast<int>(lambdas.size()) - 1; }
  int order() const { return static_cast<int>(raw.values.size()); }
  double lambda0() const { return lambdas.front(); }
};

Spectrum eigendecompose(const Graph& g, const SpectralOptions& options = {});

/// Perron vector in the two normalizations. ρ(u) = α_u e_u, so ‖ρ_u‖ = α_u.
struct PerronWeights {
  Vector alpha;  // ‖α‖² = n
  Vector nu;     // min component 1

  double rho(int u) const { return alpha[u]; }
  /// ‖ρ_X‖² = Σ_{v∈X} α_v².
  template <class Range>
  double rho_norm_sq(const Range& vertices) const {
    double s = 0.0;
    for (int v : vertices) s += alpha[v] * alpha[v];
    return s;
  }
};

/// Throws NonPositiveEigenvectorError if some entry is not clearly positive.
PerronWeights perron_weights(const Spectrum& spectrum, double tol = 1e-12);

/// Spectral projectors E_0..E_d.
struct Idempotents {
  std::vector<Matrix> E;
};

Idempotents idempotents(const Spectrum& spectrum);

/// p(A) = Σ_i p(λ_i) E_i for any function sampled at the distinct eigenvalues.
Matrix spectral_combination(const Idempotents& idem, const std::vector<double>& values);

struct LocalSpectrum {
  int vertex = 0;
  /// m_u(λ_i) = (E_i)_{uu}, raw values (not thresholded).
  std::vector<double> local_multiplicities;
  /// Indices i with m_u(λ_i) > presence_tol, ascending; always starts at 0.
  std::vector<int> local_eigenvalues;
  int du = 0;
  int eccentricity = 0;
  bool is_extremal = false;

  bool has(int i) const;
};

LocalSpectrum local_spectrum(int u, const Idempotents& idem, const DistanceData& dd,
                             double presence_tol = 1e-9);

}  // namespace spexcess
