#include "spexcess/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "spexcess/errors.hpp"

namespace spexcess {

namespace {

bool close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

std::string Counterexample::describe() const {
  std::ostringstream os;
  os << which << "_" << i << " differs on sphere " << i << ": vertex " << v << " gives "
     << value_v << ", vertex " << w << " gives " << value_w;
  return os.str();
}

PseudoDistanceRegularity is_pseudo_dr_around(int u, const Graph& g, const DistanceData& dd,
                                             const PerronWeights& pw, double tol) {
  PseudoDistanceRegularity out;
  out.vertex = u;
  out.holds = true;
  const int ecc = dd.eccentricity[u];
  for (int i = 0; i <= ecc; ++i) {
    auto sphere = dd.sphere(u, i);
    std::optional<IntersectionTriple> first;
    int first_vertex = -1;
    for (int v : sphere) {
      IntersectionTriple t;
      for (int w : g.neighbors(v)) {
        const int dw = dd.dist(u, w);
        if (dw == i - 1) t.c += pw.alpha[w];
        else if (dw == i) t.a += pw.alpha[w];
        else t.b += pw.alpha[w];
      }
      t.c /= pw.alpha[v];
      t.a /= pw.alpha[v];
      t.b /= pw.alpha[v];
      if (!first) {
        first = t;
        first_vertex = v;
        continue;
      }
      if (out.counterexample) continue;
      const std::pair<const char*, std::pair<double, double>> parts[] = {
          {"c", {first->c, t.c}}, {"a", {first->a, t.a}}, {"b", {first->b, t.b}}};
      for (const auto& [name, values] : parts) {
        if (!close(values.first, values.second, tol)) {
          out.holds = false;
          out.counterexample = Counterexample{i, first_vertex, v, name, values.first, values.second};
          break;
        }
      }
    }
    out.numbers.push_back(*first);
  }
  return out;
}

std::string DistanceRegularity::intersection_array() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
  os << ";";
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << "}";
  return os.str();
}

DistanceRegularity is_distance_regular(const Graph& g, const DistanceData& dd) {
  const int n = g.order();
  const int big_d = dd.diameter;
  std::vector<std::array<int, 3>> reference(big_d + 1, {-1, -1, -1});
  DistanceRegularity out;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int i = dd.dist(u, v);
      std::array<int, 3> counts{0, 0, 0};
      for (int w : g.neighbors(v)) ++counts[dd.dist(u, w) - i + 1];
      if (reference[i][0] < 0) {
        reference[i] = counts;
      } else if (counts != reference[i]) {
        std::ostringstream os;
        os << "vertex pair (" << u << "," << v << ") at distance " << i
           << " has (c,a,b) = (" << counts[0] << "," << counts[1] << "," << counts[2]
           << "), expected (" << reference[i][0] << "," << reference[i][1] << ","
           << reference[i][2] << ")";
        out.counterexample = os.str();
        return out;
      }
    }
  }
  out.holds = true;
  for (int i = 0; i <= big_d; ++i) {
    if (i < big_d) out.b.push_back(reference[i][2]);
    if (i > 0) out.c.push_back(reference[i][0]);
    out.a.push_back(reference[i][1]);
  }
  return out;
}

DistancePolynomiality is_distance_polynomial(const Graph& g, const DistanceData& dd,
                                             const Spectrum& spectrum, double tol) {
  const int n = g.order();
  auto inner = [n](const Matrix& x, const Matrix& y) { return x.cwiseProduct(y).sum() / n; };

  // Orthonormal basis of span{I, A, …, A^d}; candidate k is A·Q_{k-1}.
  std::vector<Matrix> basis{Matrix::Identity(n, n)};
  for (int k = 1; k <= spectrum.d(); ++k) {
    Matrix cand = g.adjacency() * basis.back();
    cand = 0.5 * (cand + cand.transpose()).eval();
    const double before = std::sqrt(inner(cand, cand));
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& q : basis) cand -= inner(cand, q) * q;
    const double norm = std::sqrt(inner(cand, cand));
    if (norm <= 1e-10 * before) break;
    basis.push_back(cand / norm);
  }

  DistancePolynomiality out;
  out.holds = true;
  for (const Matrix& ai : dd.distance_matrices) {
    Matrix residual = ai;
    for (const Matrix& q : basis) residual -= inner(ai, q) * q;
    const double r = residual.norm();
    out.residuals.push_back(r);
    if (r > tol * n) out.holds = false;
  }
  return out;
}

int partial_dr_level(const Graph& g, const DistanceData& dd, const PolySequence& global,
                     const Idempotents& idem, double tol) {
  const int limit = std::min(dd.diameter, global.top());
  int level = 0;
  for (int i = 1; i <= limit; ++i) {
    const Matrix pi = evaluate_spectrally(Vector(global.values.row(i).transpose()), idem);
    if ((pi - dd.distance_matrices[i]).cwiseAbs().maxCoeff() > tol) break;
    level = i;
  }
  if (level >= 2 && !degree_profile(g).is_regular)
    throw InvariantViolation("partially distance-regular graph of level >= 2 is not regular");
  return level;
}

std::vector<int> Classification::pseudo_dr_vertices() const {
  std::vector<int> out;
  for (const auto& p : pseudo_dr)
    if (p.holds) out.push_back(p.vertex);
  return out;
}

Classification classify(const Analysis& a) {
  Classification c;
  const double tol = a.options.classify_tol;
  c.is_regular = a.degrees.is_regular;
  c.distance_regular = is_distance_regular(a.graph, a.distances);
  for (int u = 0; u < a.order(); ++u) {
    c.pseudo_dr.push_back(is_pseudo_dr_around(u, a.graph, a.distances, a.perron, tol));
    if (a.local_spectra[u].is_extremal) c.extremal_vertices.push_back(u);
  }
  c.partial_dr_level = partial_dr_level(a.graph, a.distances, a.global, a.idem, tol);
  c.distance_polynomial = is_distance_polynomial(a.graph, a.distances, a.spectrum, tol);
  return c;
}

}  // namespace spexcess
