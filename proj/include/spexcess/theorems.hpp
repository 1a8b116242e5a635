#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spexcess/analysis.hpp"
#include "spexcess/classify.hpp"

namespace spexcess {

enum class TheoremId { P31, T32, T33, T34, P35, P36, T37, T38 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

/// How a scalar equality relates to its certificate. The scalar gaps are
/// Cauchy–Schwarz defects, quadratic in the certificate residual, so at equal
/// tolerances only certificate ⇒ scalar is checkable.
enum class Implication { iff, scalar_implies_certificate, certificate_implies_scalar };

/// lhs ≤ rhs (or lhs = rhs when `inequality` is false). slack = rhs − lhs.
struct Comparison {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool inequality = true;
  bool scalar_equal = false;
  /// 0 < |slack| < 100·eqTol (relative): too close to call.
  bool ambiguous = false;
  /// Outcome of the certificate tied to this comparison, if any.
  std::optional<bool> certified;
  Implication implication = Implication::certificate_implies_scalar;

  bool equality_holds() const { return scalar_equal && certified.value_or(true); }
  bool sound(double eq_tol) const;
  bool consistent() const;
};

Comparison compare(std::string label, double lhs, double rhs, double eq_tol,
                   bool inequality = true);

/// A matrix, vector or constancy identity that must accompany equality.
struct Certificate {
  std::string label;
  double residual = 0.0;
  bool holds = false;
};

struct Witness {
  std::string name;
  std::variant<bool, double, Vector, Matrix> value;
};

struct TheoremReport {
  TheoremId id = TheoremId::P31;
  std::optional<int> vertex;
  std::optional<int> j;
  std::optional<int> m;

  Comparison main;
  std::vector<Comparison> links;
  bool equality_holds = false;

  std::vector<Certificate> certificates;
  /// Agreement between the spectral verdict and the combinatorial oracle.
  std::optional<bool> oracle_agrees;
  std::vector<Witness> witnesses;
  std::string verdict;

  /// Every inequality-type comparison has slack ≥ −eqTol (relative).
  bool sound(double eq_tol) const;
  /// Scalar verdicts and their certificates agree; ambiguous ones are skipped.
  bool consistent() const;
};

/// r(λ_0)/‖r‖_u ≤ ‖ρ_{N_j(u)}‖/α_u for deg r ≤ j ≤ d_u.
TheoremReport check_local_bound(const Analysis& a, int u, int j, const Poly& r);

/// p^u_{d_u}(λ_0) against ‖ρ_{Γ_{d_u}(u)}‖²; equality iff pseudo-distance-regular around u.
TheoremReport check_local_spet(const Analysis& a, const Classification& c, int u);

/// δ*_D ≤ p_{≥D}(λ_0), equality iff A*_D = p_{≥D}(A).
TheoremReport check_lee_weng(const Analysis& a);

/// q_j(λ_0) ≤ H*_{≤j} for j ≤ min_u d_u, equality iff q_j(A) = S*_j.
TheoremReport check_harmonic_bound(const Analysis& a, int j);

/// (q_{m−1}+q_m)(λ_0) ≤ H*_{≤m−1}+H*_{≤m} together with the matrix conditions
/// q_j(A) = S*_j for j = m−1, m. `id` is P35 (matrix conditions decide
/// equality) or P36 (scalar equality plus conditions plus regularity).
TheoremReport check_partial_drg(const Analysis& a, const Classification& c, int m,
                                TheoremId id = TheoremId::P36);

/// p_{≥D}(λ_0) ≥ n − H*_{≤D−1} ≥ δ*_D.
TheoremReport check_chain(const Analysis& a);

/// δ*_D = p_{≥D}(λ_0) and δ*_{D−1} = p_{D−1}(λ_0) imply distance-polynomial.
TheoremReport check_distance_polynomial_sufficient(const Analysis& a, const Classification& c);

/// Every check at every admissible parameter.
std::vector<TheoremReport> run_all_checks(const Analysis& a, const Classification& c);

}  // namespace spexcess
