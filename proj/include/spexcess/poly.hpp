#pragma once

#include <optional>
#include <vector>

#include "spexcess/graph.hpp"
#include "spexcess/spectral.hpp"

namespace spexcess {

/// Real polynomial in the monomial basis; coeffs[k] multiplies x^k.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs);

  static Poly constant(double c) { return Poly({c}); }
  static Poly identity() { return Poly({0.0, 1.0}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int k) const;

  double operator()(double x) const;

  Poly times_x() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(double s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(double s, Poly p) { return p *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  void trim();

  std::vector<double> coeffs_;
};

/// p(A) by Horner's scheme.
Matrix evaluate_at_matrix(const Poly& p, const Matrix& a);
/// p(A)·x by Horner's scheme, without forming p(A).
Vector evaluate_at_vector(const Poly& p, const Matrix& a, const Vector& x);
/// p(A) = Σ_i p(λ_i) E_i.
Matrix evaluate_spectrally(const Poly& p, const Spectrum& spectrum, const Idempotents& idem);
/// Σ_i values[i]·E_i, for a polynomial given by its values at the eigenvalues.
Matrix evaluate_spectrally(const Vector& values, const Idempotents& idem);

enum class ContextKind { global, local };

/// A discrete measure on eigenvalues. The global measure puts m(λ_i)/n on
/// every λ_i; the u-local one puts m_u(λ_i) on the local eigenvalues of u.
struct InnerProductContext {
  ContextKind kind = ContextKind::global;
  int vertex = -1;
  std::vector<double> nodes;
  std::vector<double> weights;
  /// Position of each node among the distinct eigenvalues of the graph.
  std::vector<int> eigen_index;
  /// Every distinct eigenvalue of the graph, in spectrum order.
  std::vector<double> spectrum;

  /// Highest admissible degree: d (global) or d_u (local).
  int max_degree() const { return static_cast<int>(nodes.size()) - 1; }
};

InnerProductContext global_context(const Spectrum& spectrum);
InnerProductContext local_context(const Spectrum& spectrum, const LocalSpectrum& local);

/// Σ_i w_i p(λ_i) q(λ_i). Throws DegreeError past max_degree().
double inner_product(const Poly& p, const Poly& q, const InnerProductContext& ctx);
/// The same, for polynomials given by their values on ctx.spectrum.
double inner_product(const Vector& p_values, const Vector& q_values,
                     const InnerProductContext& ctx);

/// x·p_i = b_{i-1} p_{i-1} + a_i p_i + c_{i+1} p_{i+1}, with c[0] = 0 and
/// b[m] = 0. At the top index the identity holds on the nodes only.
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

struct PolySequence {
  InnerProductContext context;
  double lambda0 = 0.0;
  /// ‖p_i‖² = scale·p_i(λ_0): 1 for the global family, α_u² for the local one.
  double scale = 1.0;
  std::vector<Poly> polys;
  /// sums[j] = p_0 + … + p_j.
  std::vector<Poly> sums;
  Recurrence recurrence;
  /// values(i, k) = p_i(μ_k) and sum_values(j, k) = q_j(μ_k) over ctx.spectrum.
  /// Computed from the recurrence; prefer these to Horner on the coefficients,
  /// which loses accuracy once λ_0 is well separated from the rest.
  Matrix values;
  Matrix sum_values;

  int top() const { return static_cast<int>(polys.size()) - 1; }
  std::vector<double> values_at_lambda0() const;
  std::vector<double> sums_at_lambda0() const;
};

/// Orthogonal family for `ctx` normalized so that ‖p_i‖² = scale·p_i(λ_0),
/// built by the Stieltjes procedure with full reorthogonalization.
/// `alpha_u` must be given exactly when the context is local.
PolySequence predistance_polynomials(const InnerProductContext& ctx,
                                     std::optional<double> alpha_u = std::nullopt);

/// H = q_d. Throws InvariantViolation if H(λ_i) ≠ n·δ_{0i} or H differs from
/// its product form.
Poly hoffman_polynomial(const PolySequence& global, const Spectrum& spectrum);

/// (n/π_0)·Π_{i≥1}(x − μ_i) with π_0 = Π_{i≥1}(λ_0 − μ_i), nodes[0] = λ_0.
Poly hoffman_product_form(const std::vector<double>& nodes, double n);

/// H^u = q^u_{d_u}.
Poly local_prehoffman(const PolySequence& local);

}  // namespace spexcess
