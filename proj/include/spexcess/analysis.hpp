#pragma once

#include <vector>

#include "spexcess/graph.hpp"
#include "spexcess/poly.hpp"
#include "spexcess/spectral.hpp"
#include "spexcess/weighted.hpp"

namespace spexcess {

struct AnalysisOptions {
  SpectralOptions spectral;
  /// m_u(λ_i) at or below this is an exact zero; decides d_u.
  double presence_tol = 1e-9;
  /// Relative tolerance for equality verdicts and matrix certificates.
  double eq_tol = 1e-7;
  /// Relative tolerance for the combinatorial oracles.
  double classify_tol = 1e-7;
};

/// Every spectral and combinatorial quantity of one graph, computed once.
struct Analysis {
  Graph graph;
  AnalysisOptions options;
  DistanceData distances{};
  DegreeProfile degrees{};
  Spectrum spectrum{};
  PerronWeights perron{};
  Idempotents idem{};
  std::vector<LocalSpectrum> local_spectra{};
  PolySequence global{};
  std::vector<PolySequence> local{};
  Poly hoffman{};
  WeightedMatrices weighted{};
  ExcessStats stats{};

  int order() const { return graph.order(); }
  int diameter() const { return distances.diameter; }
  int d() const { return spectrum.d(); }
  /// min_u d_u.
  int min_local_degree() const;
  /// p(A), evaluated through the idempotents.
  Matrix at_adjacency(const Poly& p) const;
  /// Σ_i values[i]·E_i for values tabulated on the eigenvalues.
  Matrix at_adjacency(const Vector& values) const;
};

Analysis analyze_graph(Graph g, const AnalysisOptions& options = {});

}  // namespace spexcess
