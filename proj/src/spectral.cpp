#include "spexcess/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spexcess/errors.hpp"

namespace spexcess {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index q = 1; q < a.cols(); ++q)
    for (Eigen::Index p = 0; p < q; ++p) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

// Zeroes a(p, q) by a plane rotation applied on both sides; accumulates into v.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Eigenpairs jacobi_eigensolver(const Matrix& symmetric, double tol, int max_sweeps) {
  if (!(tol > 0.0 && tol < 1.0)) throw NumericalError("eigensolver tolerance must lie in (0, 1)");
  const Eigen::Index n = symmetric.rows();
  Matrix a = symmetric;
  Matrix v = Matrix::Identity(n, n);
  const double target = tol * symmetric.norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) >= target) {
    if (sweeps == max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(max_sweeps) +
                             " sweeps");
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  Eigenpairs out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    Vector col = v.col(order[k]);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(col[i]) > 1e-8) {
        if (col[i] < 0.0) col = -col;
        break;
      }
    }
    out.vectors.col(k) = col;
  }
  return out;
}

Spectrum eigendecompose(const Graph& g, const SpectralOptions& options) {
  Spectrum s;
  s.raw = jacobi_eigensolver(g.adjacency(), options.tol, options.max_sweeps);

  const Vector& values = s.raw.values;
  const double gap = options.group_tol * std::max(1.0, std::abs(values[0]));
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k - 1] - values[k] > gap) s.classes.emplace_back();
    s.classes.back().push_back(static_cast<int>(k));
  }
  for (const auto& cls : s.classes) {
    double sum = 0.0;
    for (int k : cls) sum += values[k];
    s.lambdas.push_back(sum / static_cast<double>(cls.size()));
    s.multiplicities.push_back(static_cast<int>(cls.size()));
  }
  if (s.multiplicities.front() != 1)
    throw NumericalError("largest eigenvalue grouped with multiplicity " +
                         std::to_string(s.multiplicities.front()) +
                         "; the grouping tolerance is too coarse");
  return s;
}

PerronWeights perron_weights(const Spectrum& spectrum, double tol) {
  const int n = spectrum.order();
  if (spectrum.multiplicities.empty() || spectrum.multiplicities.front() != 1)
    throw NumericalError("Perron vector requires a simple largest eigenvalue");
  Vector v0 = spectrum.raw.vectors.col(spectrum.classes.front().front());
  if (v0.sum() < 0.0) v0 = -v0;

  PerronWeights pw;
  pw.alpha = std::sqrt(static_cast<double>(n)) * v0 / v0.norm();
  const double smallest = pw.alpha.minCoeff();
  if (smallest <= tol)
    throw NonPositiveEigenvectorError("Perron vector has a non-positive entry (" +
                                      std::to_string(smallest) + ")");
  pw.nu = pw.alpha / smallest;
  return pw;
}

Idempotents idempotents(const Spectrum& spectrum) {
  Idempotents idem;
  idem.E.reserve(spectrum.classes.size());
  for (const auto& cls : spectrum.classes) {
    Matrix basis(spectrum.order(), static_cast<Eigen::Index>(cls.size()));
    for (std::size_t k = 0; k < cls.size(); ++k)
      basis.col(static_cast<Eigen::Index>(k)) = spectrum.raw.vectors.col(cls[k]);
    idem.E.push_back(basis * basis.transpose());
  }
  return idem;
}

Matrix spectral_combination(const Idempotents& idem, const std::vector<double>& values) {
  Matrix out = Matrix::Zero(idem.E.front().rows(), idem.E.front().cols());
  for (std::size_t i = 0; i < idem.E.size(); ++i)
    if (values[i] != 0.0) out += values[i] * idem.E[i];
  return out;
}

bool LocalSpectrum::has(int i) const {
  return std::binary_search(local_eigenvalues.begin(), local_eigenvalues.end(), i);
}

LocalSpectrum local_spectrum(int u, const Idempotents& idem, const DistanceData& dd,
                             double presence_tol) {
  LocalSpectrum ls;
  ls.vertex = u;
  for (std::size_t i = 0; i < idem.E.size(); ++i) {
    const double m = idem.E[i](u, u);
    ls.local_multiplicities.push_back(m);
    if (i == 0 || m > presence_tol) ls.local_eigenvalues.push_back(static_cast<int>(i));
  }
  ls.du = static_cast<int>(ls.local_eigenvalues.size()) - 1;
  ls.eccentricity = dd.eccentricity[u];
  ls.is_extremal = ls.eccentricity == ls.du;
  return ls;
}

}  // namespace spexcess
