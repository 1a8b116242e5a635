#include "spexcess/weighted.hpp"

#include <algorithm>

#include "spexcess/errors.hpp"

namespace spexcess {

const Matrix& WeightedMatrices::partial_sum(int j) const {
  if (j < 0) throw DegreeError("partial sum index must be non-negative");
  return sstar[std::min<std::size_t>(j, sstar.size() - 1)];
}

WeightedMatrices weighted_matrices(const DistanceData& dd, const PerronWeights& pw) {
  WeightedMatrices wm;
  wm.jstar = pw.alpha * pw.alpha.transpose();
  Matrix running = Matrix::Zero(wm.jstar.rows(), wm.jstar.cols());
  for (const Matrix& ai : dd.distance_matrices) {
    wm.astar.push_back(ai.cwiseProduct(wm.jstar));
    running += wm.astar.back();
    wm.sstar.push_back(running);
  }
  return wm;
}

double matrix_inner_product(const Matrix& m, const Matrix& n) {
  return m.cwiseProduct(n).sum() / static_cast<double>(m.rows());
}

double ExcessStats::harmonic_mean(int j) const {
  if (j < 0) throw DegreeError("harmonic mean index must be non-negative");
  if (j >= diameter) return n;
  return harmonic_means[j];
}

ExcessStats excess_stats(const Graph& g, const DistanceData& dd, const PerronWeights& pw,
                         const PolySequence& global) {
  if (global.context.kind != ContextKind::global)
    throw HypothesisError("excess statistics need the global sequence");
  const int n = g.order();
  const int big_d = dd.diameter;

  ExcessStats s;
  s.n = n;
  s.diameter = big_d;
  s.sphere_norms = Matrix::Zero(n, big_d + 1);
  s.ball_norms = Matrix::Zero(n, big_d + 1);
  for (int u = 0; u < n; ++u) {
    double ball = 0.0;
    for (int i = 0; i <= big_d; ++i) {
      const double sphere = pw.rho_norm_sq(dd.sphere(u, i));
      ball += sphere;
      s.sphere_norms(u, i) = sphere;
      s.ball_norms(u, i) = ball;
    }
  }

  for (int j = 0; j <= big_d; ++j) {
    double denom = 0.0;
    for (int u = 0; u < n; ++u) denom += pw.alpha[u] * pw.alpha[u] / s.ball_norms(u, j);
    s.harmonic_means.push_back(n / denom);
  }
  for (int i = 0; i <= big_d; ++i) {
    double acc = 0.0;
    for (int u = 0; u < n; ++u) acc += pw.alpha[u] * pw.alpha[u] * s.sphere_norms(u, i);
    s.delta_stars.push_back(acc / n);
  }

  const auto q = global.sums_at_lambda0();
  s.spectral_excess = big_d >= 1 ? n - q[big_d - 1] : 0.0;

  for (int u = 0; u < n; ++u) {
    double acc = 0.0;
    for (int v : g.neighbors(u)) acc += pw.alpha[v];
    s.avg_weighted_degree.push_back(acc / pw.alpha[u]);
  }
  return s;
}

}  // namespace spexcess
