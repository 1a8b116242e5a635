#include "spexcess/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spexcess/errors.hpp"

namespace spexcess {

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Poly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0.0;
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::times_x() const {
  if (coeffs_.empty()) return {};
  std::vector<double> c(coeffs_.size() + 1, 0.0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return Poly(std::move(c));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Matrix evaluate_at_matrix(const Poly& p, const Matrix& a) {
  const auto n = a.rows();
  Matrix acc = Matrix::Zero(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a;
    acc.diagonal().array() += *it;
  }
  return acc;
}

Vector evaluate_at_vector(const Poly& p, const Matrix& a, const Vector& x) {
  Vector acc = Vector::Zero(x.size());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = a * acc + *it * x;
  return acc;
}

Matrix evaluate_spectrally(const Poly& p, const Spectrum& spectrum, const Idempotents& idem) {
  std::vector<double> values;
  values.reserve(spectrum.lambdas.size());
  for (double lambda : spectrum.lambdas) values.push_back(p(lambda));
  return spectral_combination(idem, values);
}

Matrix evaluate_spectrally(const Vector& values, const Idempotents& idem) {
  return spectral_combination(idem, std::vector<double>(values.begin(), values.end()));
}

InnerProductContext global_context(const Spectrum& spectrum) {
  InnerProductContext ctx;
  ctx.kind = ContextKind::global;
  const double n = spectrum.order();
  for (std::size_t i = 0; i < spectrum.lambdas.size(); ++i) {
    ctx.nodes.push_back(spectrum.lambdas[i]);
    ctx.weights.push_back(spectrum.multiplicities[i] / n);
    ctx.eigen_index.push_back(static_cast<int>(i));
  }
  ctx.spectrum = spectrum.lambdas;
  return ctx;
}

InnerProductContext local_context(const Spectrum& spectrum, const LocalSpectrum& local) {
  InnerProductContext ctx;
  ctx.kind = ContextKind::local;
  ctx.vertex = local.vertex;
  for (int i : local.local_eigenvalues) {
    ctx.nodes.push_back(spectrum.lambdas[i]);
    ctx.weights.push_back(local.local_multiplicities[i]);
    ctx.eigen_index.push_back(i);
  }
  ctx.spectrum = spectrum.lambdas;
  return ctx;
}

double inner_product(const Poly& p, const Poly& q, const InnerProductContext& ctx) {
  const int limit = ctx.max_degree();
  if (p.degree() > limit || q.degree() > limit)
    throw DegreeError("degree " + std::to_string(std::max(p.degree(), q.degree())) +
                      " exceeds the context dimension " + std::to_string(limit));
  double s = 0.0;
  for (std::size_t i = 0; i < ctx.nodes.size(); ++i)
    s += ctx.weights[i] * p(ctx.nodes[i]) * q(ctx.nodes[i]);
  return s;
}

double inner_product(const Vector& p_values, const Vector& q_values,
                     const InnerProductContext& ctx) {
  double s = 0.0;
  for (std::size_t i = 0; i < ctx.nodes.size(); ++i)
    s += ctx.weights[i] * p_values[ctx.eigen_index[i]] * q_values[ctx.eigen_index[i]];
  return s;
}

std::vector<double> PolySequence::values_at_lambda0() const {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < values.rows(); ++i) out.push_back(values(i, 0));
  return out;
}

std::vector<double> PolySequence::sums_at_lambda0() const {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < sum_values.rows(); ++i) out.push_back(sum_values(i, 0));
  return out;
}

PolySequence predistance_polynomials(const InnerProductContext& ctx,
                                     std::optional<double> alpha_u) {
  if ((ctx.kind == ContextKind::local) != alpha_u.has_value())
    throw HypothesisError("alpha_u must be supplied exactly for a local context");
  if (ctx.nodes.size() < 2)
    throw DegenerateMeasureError("measure needs at least two support points");
  for (double w : ctx.weights)
    if (!(w > 0.0)) throw DegenerateMeasureError("measure has a non-positive weight");

  PolySequence seq;
  seq.context = ctx;
  seq.lambda0 = ctx.nodes.front();
  seq.scale = alpha_u ? *alpha_u * *alpha_u : 1.0;
  const int m = ctx.max_degree();
  const auto nodes = static_cast<Eigen::Index>(ctx.nodes.size());

  // Orthonormal φ_k on the nodes, stored as √w·φ_k so the measure is the
  // Euclidean product: x·φ_k = β_k φ_{k-1} + a_k φ_k + β_{k+1} φ_{k+1}.
  Vector x(nodes), sqrt_w(nodes);
  for (Eigen::Index i = 0; i < nodes; ++i) {
    x[i] = ctx.nodes[i];
    sqrt_w[i] = std::sqrt(ctx.weights[i]);
  }
  Matrix phi(nodes, m + 1);
  phi.col(0) = sqrt_w / sqrt_w.norm();
  std::vector<double> a(m + 1, 0.0), beta(m + 1, 0.0);
  const double mass = sqrt_w.squaredNorm();
  for (int k = 0; k <= m; ++k) {
    Vector v = x.cwiseProduct(phi.col(k));
    a[k] = v.dot(phi.col(k));
    if (k == m) break;
    const double before = v.norm();
    v -= a[k] * phi.col(k);
    if (k > 0) v -= beta[k] * phi.col(k - 1);
    for (int pass = 0; pass < 2; ++pass) v -= phi.leftCols(k + 1) * (phi.leftCols(k + 1).transpose() * v);
    beta[k + 1] = v.norm();
    if (!(beta[k + 1] > 1e-10 * std::max(before, 1e-300)))
      throw DegenerateMeasureError("Gram matrix is numerically singular at degree " +
                                   std::to_string(k + 1));
    phi.col(k + 1) = v / beta[k + 1];
  }

  // At the nodes, φ_k comes straight from the orthonormal vectors; the
  // recurrence extends it to the rest of the spectrum and to coefficients.
  const auto& spectrum = ctx.spectrum;
  const auto points = static_cast<Eigen::Index>(spectrum.size());
  std::vector<Eigen::Index> node_of(points, -1);
  for (Eigen::Index i = 0; i < nodes; ++i) node_of[ctx.eigen_index[i]] = i;
  Matrix phi_all(m + 1, points);
  std::vector<Poly> phi_poly{Poly::constant(1.0 / std::sqrt(mass))};
  for (Eigen::Index k = 0; k < points; ++k) phi_all(0, k) = 1.0 / std::sqrt(mass);
  for (int k = 0; k < m; ++k) {
    Poly next = phi_poly[k].times_x() - a[k] * phi_poly[k];
    if (k > 0) next -= beta[k] * phi_poly[k - 1];
    phi_poly.push_back((1.0 / beta[k + 1]) * next);
    for (Eigen::Index t = 0; t < points; ++t) {
      double val = (spectrum[t] - a[k]) * phi_all(k, t);
      if (k > 0) val -= beta[k] * phi_all(k - 1, t);
      phi_all(k + 1, t) = val / beta[k + 1];
    }
  }
  for (Eigen::Index t = 0; t < points; ++t)
    if (node_of[t] >= 0)
      phi_all.col(t) = phi.row(node_of[t]).transpose() / sqrt_w[node_of[t]];

  // ‖c·φ_k‖² = c² = scale·c·φ_k(λ_0), so c = scale·φ_k(λ_0).
  const int top_index = ctx.eigen_index.front();
  std::vector<double> factor(m + 1);
  for (int k = 0; k <= m; ++k) factor[k] = seq.scale * phi_all(k, top_index);
  seq.values.resize(m + 1, points);
  seq.sum_values.resize(m + 1, points);
  Poly running;
  for (int k = 0; k <= m; ++k) {
    seq.polys.push_back(factor[k] * phi_poly[k]);
    running += seq.polys.back();
    seq.sums.push_back(running);
    seq.values.row(k) = factor[k] * phi_all.row(k);
    seq.sum_values.row(k) = seq.values.row(k);
    if (k > 0) seq.sum_values.row(k) += seq.sum_values.row(k - 1);
  }

  auto& r = seq.recurrence;
  r.a = a;
  r.b.assign(m + 1, 0.0);
  r.c.assign(m + 1, 0.0);
  for (int i = 0; i < m; ++i) {
    r.b[i] = factor[i + 1] * beta[i + 1] / factor[i];
    r.c[i + 1] = factor[i] * beta[i + 1] / factor[i + 1];
  }
  return seq;
}

Poly hoffman_product_form(const std::vector<double>& nodes, double n) {
  Poly prod = Poly::constant(1.0);
  double pi0 = 1.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    prod = prod * Poly({-nodes[i], 1.0});
    pi0 *= nodes[0] - nodes[i];
  }
  return (n / pi0) * prod;
}

Poly hoffman_polynomial(const PolySequence& global, const Spectrum& spectrum) {
  if (global.context.kind != ContextKind::global)
    throw HypothesisError("Hoffman polynomial needs the global sequence");
  const Poly h = global.sums.back();
  const double n = spectrum.order();
  const auto top = global.sum_values.rows() - 1;
  for (std::size_t i = 0; i < spectrum.lambdas.size(); ++i) {
    const double expected = i == 0 ? n : 0.0;
    const double got = global.sum_values(top, static_cast<Eigen::Index>(i));
    if (std::abs(got - expected) > 1e-8 * n)
      throw InvariantViolation("H(lambda_" + std::to_string(i) + ") = " + std::to_string(got));
  }
  // Compare as polynomials through their values, each against the size of
  // the terms Horner sums, since the coefficients inherit the conditioning
  // of the monomial basis.
  const Poly product = hoffman_product_form(spectrum.lambdas, n);
  const Poly diff = h - product;
  for (double x : spectrum.lambdas) {
    double size = n;
    for (int k = 0; k <= h.degree(); ++k)
      size += (std::abs(h.coeff(k)) + std::abs(product.coeff(k))) * std::pow(std::abs(x), k);
    if (std::abs(diff(x)) > 1e-8 * size)
      throw InvariantViolation("Hoffman polynomial disagrees with its product form");
  }
  return h;
}

Poly local_prehoffman(const PolySequence& local) { return local.sums.back(); }

}  // namespace spexcess
