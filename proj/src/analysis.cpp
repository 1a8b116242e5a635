#include "spexcess/analysis.hpp"

#include <algorithm>

namespace spexcess {

int Analysis::min_local_degree() const {
  int m = local_spectra.front().du;
  for (const auto& ls : local_spectra) m = std::min(m, ls.du);
  return m;
}

Matrix Analysis::at_adjacency(const Poly& p) const {
  return evaluate_spectrally(p, spectrum, idem);
}

Matrix Analysis::at_adjacency(const Vector& values) const {
  return evaluate_spectrally(values, idem);
}

Analysis analyze_graph(Graph g, const AnalysisOptions& options) {
  Analysis a{.graph = std::move(g), .options = options};
  a.distances = distance_data(a.graph);
  a.degrees = degree_profile(a.graph);
  a.spectrum = eigendecompose(a.graph, options.spectral);
  a.perron = perron_weights(a.spectrum);
  a.idem = idempotents(a.spectrum);

  a.global = predistance_polynomials(global_context(a.spectrum));
  a.hoffman = hoffman_polynomial(a.global, a.spectrum);

  const int n = a.graph.order();
  a.local_spectra.reserve(n);
  a.local.reserve(n);
  for (int u = 0; u < n; ++u) {
    a.local_spectra.push_back(local_spectrum(u, a.idem, a.distances, options.presence_tol));
    a.local.push_back(predistance_polynomials(local_context(a.spectrum, a.local_spectra.back()),
                                              a.perron.alpha[u]));
  }

  a.weighted = weighted_matrices(a.distances, a.perron);
  a.stats = excess_stats(a.graph, a.distances, a.perron, a.global);
  return a;
}

}  // namespace spexcess
