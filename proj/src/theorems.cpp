#include "spexcess/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "spexcess/errors.hpp"

namespace spexcess {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 8> kNames{{
    {TheoremId::P31, "P31"},
    {TheoremId::T32, "T32"},
    {TheoremId::T33, "T33"},
    {TheoremId::T34, "T34"},
    {TheoremId::P35, "P35"},
    {TheoremId::P36, "P36"},
    {TheoremId::T37, "T37"},
    {TheoremId::T38, "T38"},
}};

double relative_scale(double x, double y) { return std::max({1.0, std::abs(x), std::abs(y)}); }

Certificate matrix_certificate(std::string label, const Matrix& computed, const Matrix& target,
                               double eq_tol) {
  Certificate c;
  c.label = std::move(label);
  c.residual = (computed - target).cwiseAbs().maxCoeff();
  c.holds = c.residual <= eq_tol * std::max(1.0, target.cwiseAbs().maxCoeff());
  return c;
}

Certificate flag_certificate(std::string label, bool holds) {
  return Certificate{std::move(label), holds ? 0.0 : 1.0, holds};
}

// p(A)e_u through the idempotents, for p tabulated on the eigenvalues.
Vector column_at(const Analysis& a, const Vector& values, int u) {
  Vector out = Vector::Zero(a.order());
  for (std::size_t i = 0; i < a.idem.E.size(); ++i)
    if (values[i] != 0.0) out += values[i] * a.idem.E[i].col(u);
  return out;
}

Vector tabulate(const Analysis& a, const Poly& p) {
  Vector out(a.spectrum.lambdas.size());
  for (std::size_t i = 0; i < a.spectrum.lambdas.size(); ++i) out[i] = p(a.spectrum.lambdas[i]);
  return out;
}

Vector row(const Matrix& table, int i) { return table.row(i).transpose(); }

void check_vertex(const Analysis& a, int u) {
  if (u < 0 || u >= a.order())
    throw HypothesisError("vertex " + std::to_string(u) + " out of range");
}

// p_{≥D} = H − q_{D−1}, tabulated on the eigenvalues.
Vector excess_values(const Analysis& a) {
  const auto& t = a.global.sum_values;
  return row(t, static_cast<int>(t.rows()) - 1) - row(t, a.diameter() - 1);
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (auto [value, name] : kNames)
    if (value == id) return name;
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (auto [value, name] : kNames)
    if (name == text) return value;
  return std::nullopt;
}

Comparison compare(std::string label, double lhs, double rhs, double eq_tol, bool inequality) {
  Comparison c;
  c.label = std::move(label);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.inequality = inequality;
  const double scale = relative_scale(lhs, rhs);
  c.scalar_equal = std::abs(c.slack) <= eq_tol * scale;
  c.ambiguous = !c.scalar_equal && std::abs(c.slack) < 100.0 * eq_tol * scale;
  return c;
}

bool Comparison::sound(double eq_tol) const {
  return !inequality || slack >= -eq_tol * relative_scale(lhs, rhs);
}

bool Comparison::consistent() const {
  if (!certified || ambiguous) return true;
  switch (implication) {
    case Implication::iff:
      return scalar_equal == *certified;
    case Implication::scalar_implies_certificate:
      return !scalar_equal || *certified;
    case Implication::certificate_implies_scalar:
      return !*certified || scalar_equal;
  }
  return true;
}

bool TheoremReport::sound(double eq_tol) const {
  return main.sound(eq_tol) &&
         std::all_of(links.begin(), links.end(),
                     [eq_tol](const Comparison& c) { return c.sound(eq_tol); });
}

bool TheoremReport::consistent() const {
  return main.consistent() && std::all_of(links.begin(), links.end(),
                                          [](const Comparison& c) { return c.consistent(); });
}

namespace {

TheoremReport local_bound(const Analysis& a, int u, int j, const Vector& r) {
  const auto& ls = a.local_spectra[u];
  const double eq_tol = a.options.eq_tol;
  const double norm = std::sqrt(inner_product(r, r, a.local[u].context));
  if (!(norm > 0.0)) throw HypothesisError("r has zero u-local norm");

  const double alpha_u = a.perron.alpha[u];
  const double ball = a.stats.ball_norms(u, std::min(j, a.diameter()));

  TheoremReport rep;
  rep.id = TheoremId::P31;
  rep.vertex = u;
  rep.j = j;
  rep.main = compare("r(lambda_0)/||r||_u <= ||rho_{N_j(u)}||/alpha_u",
                     r[0] / norm, std::sqrt(ball) / alpha_u, eq_tol);

  const Vector column = column_at(a, r, u) / norm;
  Vector target = Vector::Zero(a.order());
  for (int v : a.distances.ball(u, j)) target[v] = a.perron.alpha[v] / std::sqrt(ball);
  rep.certificates.push_back(
      matrix_certificate("r(A)e_u/||r||_u = rho_{N_j(u)}/||rho_{N_j(u)}||", column, target, eq_tol));
  rep.main.certified = rep.certificates.back().holds;
  rep.equality_holds = rep.main.equality_holds();

  rep.witnesses.push_back({"normalizedColumn", column});
  rep.witnesses.push_back({"normalizedBallVector", target});
  rep.witnesses.push_back({"extremal", ls.is_extremal});

  std::ostringstream v;
  if (rep.equality_holds)
    v << "equality at vertex " << u << " for j = " << j << (ls.is_extremal ? " (extremal vertex)" : " (vertex not extremal)");
  else if (rep.main.ambiguous)
    v << "numerically ambiguous at vertex " << u;
  else if (rep.main.scalar_equal)
    v << "scalar equality without the vector identity at vertex " << u << " for j = " << j;
  else
    v << "strict inequality at vertex " << u << " for j = " << j;
  rep.verdict = v.str();
  return rep;
}

}  // namespace

TheoremReport check_local_bound(const Analysis& a, int u, int j, const Poly& r) {
  check_vertex(a, u);
  const int du = a.local_spectra[u].du;
  if (j < 0 || j > du)
    throw DegreeError("j = " + std::to_string(j) + " outside 0..d_u = " + std::to_string(du));
  if (r.degree() > j)
    throw DegreeError("deg r = " + std::to_string(r.degree()) + " exceeds j = " +
                      std::to_string(j));
  return local_bound(a, u, j, tabulate(a, r));
}

TheoremReport check_local_spet(const Analysis& a, const Classification& c, int u) {
  check_vertex(a, u);
  const double eq_tol = a.options.eq_tol;
  const auto& ls = a.local_spectra[u];
  const auto& seq = a.local[u];
  const int du = ls.du;
  const double excess = ls.eccentricity >= du ? a.stats.sphere_norms(u, du) : 0.0;

  TheoremReport rep;
  rep.id = TheoremId::T32;
  rep.vertex = u;
  rep.main = compare("||rho_{Gamma_{d_u}(u)}||^2 <= p^u_{d_u}(lambda_0)", excess,
                     seq.values(du, 0), eq_tol);

  // p^u_i(A)e_u = α_u ρ_{Γ_i(u)} for every i ≤ d_u.
  double residual = 0.0;
  double scale = 1.0;
  const double alpha_u = a.perron.alpha[u];
  for (int i = 0; i <= du; ++i) {
    Vector target = Vector::Zero(a.order());
    for (int v : a.distances.sphere(u, i)) target[v] = alpha_u * a.perron.alpha[v];
    residual = std::max(residual, (column_at(a, row(seq.values, i), u) - target).cwiseAbs().maxCoeff());
    scale = std::max(scale, target.cwiseAbs().maxCoeff());
  }
  rep.certificates.push_back(
      {"p^u_i(A)e_u = alpha_u rho_{Gamma_i(u)} for i <= d_u", residual, residual <= eq_tol * scale});
  rep.main.certified = rep.certificates.back().holds;
  rep.equality_holds = rep.main.equality_holds();

  const auto& oracle = c.pseudo_dr[u];
  // The certificate decides even when the scalar gap is too small to call.
  rep.oracle_agrees = rep.equality_holds == oracle.holds;
  rep.witnesses.push_back({"du", static_cast<double>(du)});
  rep.witnesses.push_back({"eccentricity", static_cast<double>(ls.eccentricity)});
  rep.witnesses.push_back({"oraclePseudoDistanceRegular", oracle.holds});

  std::ostringstream v;
  if (rep.equality_holds)
    v << "pseudo-distance-regular around vertex " << u;
  else
    v << "not pseudo-distance-regular around vertex " << u;
  if (rep.main.ambiguous) v << " (scalar gap numerically ambiguous)";
  if (!*rep.oracle_agrees) v << " (DISAGREES with the combinatorial oracle)";
  rep.verdict = v.str();
  return rep;
}

TheoremReport check_lee_weng(const Analysis& a) {
  const double eq_tol = a.options.eq_tol;
  const int big_d = a.diameter();
  TheoremReport rep;
  rep.id = TheoremId::T33;
  rep.main = compare("delta*_D <= p_{>=D}(lambda_0)", a.stats.delta_star_d(),
                     a.stats.spectral_excess, eq_tol);

  const Matrix excess = a.at_adjacency(excess_values(a));
  rep.certificates.push_back(
      matrix_certificate("A*_D = p_{>=D}(A)", excess, a.weighted.astar[big_d], eq_tol));
  rep.main.certified = rep.certificates.back().holds;
  rep.equality_holds = rep.main.equality_holds();
  rep.witnesses.push_back({"p_geD(A)", excess});
  rep.witnesses.push_back({"A*_D", a.weighted.astar[big_d]});

  if (rep.main.ambiguous)
    rep.verdict = "numerically ambiguous";
  else if (rep.equality_holds)
    rep.verdict = "equality: A*_D = p_{>=D}(A)";
  else if (rep.main.scalar_equal)
    rep.verdict = "scalar equality without A*_D = p_{>=D}(A)";
  else
    rep.verdict = "strict inequality: average weighted excess below the spectral excess";
  return rep;
}

TheoremReport check_harmonic_bound(const Analysis& a, int j) {
  const int limit = a.min_local_degree();
  if (j < 0 || j > limit)
    throw HypothesisError("j = " + std::to_string(j) + " outside 0..min_u d_u = " +
                          std::to_string(limit));
  const double eq_tol = a.options.eq_tol;
  const Vector qj = row(a.global.sum_values, j);

  TheoremReport rep;
  rep.id = TheoremId::T34;
  rep.j = j;
  rep.main = compare("q_j(lambda_0) <= H*_{<=j}", qj[0],
                     a.stats.harmonic_mean(j), eq_tol);

  const Matrix value = a.at_adjacency(qj);
  const Matrix& target = a.weighted.partial_sum(j);
  rep.certificates.push_back(matrix_certificate("q_j(A) = S*_j", value, target, eq_tol));
  rep.main.certified = rep.certificates.back().holds;
  rep.equality_holds = rep.main.equality_holds();

  Vector eta(a.order());
  for (int u = 0; u < a.order(); ++u)
    eta[u] = value(u, u) / (a.perron.alpha[u] * a.perron.alpha[u]);
  rep.witnesses.push_back({"eta", eta});
  rep.witnesses.push_back({"q_j(A)", value});
  rep.witnesses.push_back({"S*_j", target});

  if (rep.main.ambiguous)
    rep.verdict = "numerically ambiguous";
  else if (rep.equality_holds)
    rep.verdict = "equality: q_j(A) = S*_j";
  else if (rep.main.scalar_equal)
    rep.verdict = "scalar equality without q_j(A) = S*_j";
  else
    rep.verdict = "strict inequality";
  return rep;
}

TheoremReport check_partial_drg(const Analysis& a, const Classification& c, int m,
                                TheoremId id) {
  if (id != TheoremId::P35 && id != TheoremId::P36)
    throw HypothesisError("partial distance-regularity check is P35 or P36");
  const int limit = std::min(a.diameter(), a.d());
  if (m < 1 || m > limit)
    throw HypothesisError("m = " + std::to_string(m) + " outside 1..min(D, d) = " +
                          std::to_string(limit));
  const double eq_tol = a.options.eq_tol;

  TheoremReport rep;
  rep.id = id;
  rep.m = m;
  rep.main = compare("(q_{m-1}+q_m)(lambda_0) <= H*_{<=m-1} + H*_{<=m}",
                     a.global.sum_values(m - 1, 0) + a.global.sum_values(m, 0),
                     a.stats.harmonic_mean(m - 1) + a.stats.harmonic_mean(m), eq_tol);

  for (int j : {m - 1, m}) {
    rep.certificates.push_back(matrix_certificate("q_" + std::to_string(j) + "(A) = S*_" +
                                                      std::to_string(j),
                                                  a.at_adjacency(row(a.global.sum_values, j)),
                                                  a.weighted.partial_sum(j), eq_tol));
  }
  const bool conditions = rep.certificates[0].holds && rep.certificates[1].holds;
  rep.certificates.push_back(flag_certificate("regular", c.is_regular));
  rep.main.certified = conditions && c.is_regular;

  const bool oracle_partial = c.partial_dr_level >= m;
  std::ostringstream v;
  if (id == TheoremId::P35) {
    rep.equality_holds = conditions;
    rep.oracle_agrees = conditions == oracle_partial;
    v << (conditions ? "" : "not ") << m << "-partially distance-regular";
  } else {
    rep.equality_holds = rep.main.equality_holds();
    rep.oracle_agrees =
        rep.main.ambiguous || rep.equality_holds == (c.is_regular && oracle_partial);
    if (rep.main.ambiguous)
      v << "numerically ambiguous";
    else if (rep.equality_holds)
      v << "equality: regular and " << m << "-partially distance-regular";
    else
      v << "strict inequality";
  }
  if (!*rep.oracle_agrees) v << " (DISAGREES with the combinatorial oracle)";
  rep.verdict = v.str();
  rep.witnesses.push_back({"oraclePartialLevel", static_cast<double>(c.partial_dr_level)});
  return rep;
}

TheoremReport check_chain(const Analysis& a) {
  const double eq_tol = a.options.eq_tol;
  const int big_d = a.diameter();
  const double excess = a.stats.spectral_excess;
  const double middle = a.stats.n_minus_harmonic();
  const double average = a.stats.delta_star_d();

  TheoremReport rep;
  rep.id = TheoremId::T37;

  Comparison first = compare("n - H*_{<=D-1} <= p_{>=D}(lambda_0)", middle, excess, eq_tol);
  const Matrix excess_matrix = a.at_adjacency(excess_values(a));
  rep.certificates.push_back(
      matrix_certificate("p_{>=D}(A) = A*_D", excess_matrix, a.weighted.astar[big_d], eq_tol));
  first.certified = rep.certificates.back().holds;

  Comparison second = compare("delta*_D <= n - H*_{<=D-1}", average, middle, eq_tol);
  const Vector spheres = a.stats.sphere_norms.col(big_d);
  const double spread = spheres.maxCoeff() - spheres.minCoeff();
  rep.certificates.push_back({"||rho_{Gamma_D(u)}||^2 constant over u", spread,
                              spread <= eq_tol * std::max(1.0, spheres.maxCoeff())});
  second.certified = rep.certificates.back().holds;

  rep.main = compare("delta*_D <= p_{>=D}(lambda_0)", average, excess, eq_tol);
  rep.main.certified = *first.certified && *second.certified;
  rep.links = {first, second};
  rep.equality_holds = first.equality_holds() && second.equality_holds();
  rep.witnesses.push_back({"sphereNormsAtD", spheres});

  std::ostringstream v;
  v << "p_{>=D}(lambda_0) " << (first.equality_holds() ? "=" : first.ambiguous ? "~" : ">")
    << " n - H*_{<=D-1} " << (second.equality_holds() ? "=" : second.ambiguous ? "~" : ">")
    << " delta*_D  (" << format_value(excess) << ", " << format_value(middle) << ", "
    << format_value(average) << ")";
  rep.verdict = v.str();
  return rep;
}

TheoremReport check_distance_polynomial_sufficient(const Analysis& a, const Classification& c) {
  const int big_d = a.diameter();
  if (big_d < 2) throw HypothesisError("the distance-polynomial criterion needs D >= 2");
  const double eq_tol = a.options.eq_tol;

  TheoremReport rep;
  rep.id = TheoremId::T38;
  rep.main = compare("delta*_D = p_{>=D}(lambda_0)", a.stats.delta_star_d(),
                     a.stats.spectral_excess, eq_tol);
  rep.certificates.push_back(matrix_certificate("A*_D = p_{>=D}(A)",
                                                a.at_adjacency(excess_values(a)),
                                                a.weighted.astar[big_d], eq_tol));
  rep.main.certified = rep.certificates.back().holds;

  Comparison second = compare("delta*_{D-1} = p_{D-1}(lambda_0)", a.stats.delta_stars[big_d - 1],
                              a.global.values(big_d - 1, 0), eq_tol, false);
  const bool hypotheses = rep.main.equality_holds() && second.scalar_equal;

  rep.certificates.push_back(flag_certificate("regular", c.is_regular));
  rep.certificates.push_back(flag_certificate("(D-1)-partially distance-regular",
                                              c.partial_dr_level >= big_d - 1));
  rep.certificates.push_back(flag_certificate("distance-polynomial (least-squares oracle)",
                                              c.distance_polynomial.holds));
  const bool conclusions = c.is_regular && c.partial_dr_level >= big_d - 1 &&
                           c.distance_polynomial.holds;
  // The conclusions follow from both hypotheses together, never from the second alone.
  if (rep.main.equality_holds()) second.certified = conclusions;
  second.implication = Implication::scalar_implies_certificate;
  rep.links = {second};
  rep.equality_holds = hypotheses && conclusions;
  rep.oracle_agrees = !hypotheses || conclusions;

  if (hypotheses)
    rep.verdict = conclusions ? "hypotheses hold: distance-polynomial, regular and (D-1)-partially "
                                "distance-regular"
                              : "hypotheses hold but the oracle REJECTS distance-polynomiality";
  else if (rep.main.ambiguous || second.ambiguous)
    rep.verdict = "numerically ambiguous hypotheses; no claim";
  else
    rep.verdict = "hypotheses fail; no claim";
  return rep;
}

std::vector<TheoremReport> run_all_checks(const Analysis& a, const Classification& c) {
  std::vector<TheoremReport> out;
  for (int u = 0; u < a.order(); ++u)
    for (int j = 0; j <= a.local_spectra[u].du; ++j)
      out.push_back(local_bound(a, u, j, row(a.local[u].sum_values, j)));
  for (int u = 0; u < a.order(); ++u) out.push_back(check_local_spet(a, c, u));
  out.push_back(check_lee_weng(a));
  for (int j = 0; j <= a.min_local_degree(); ++j) out.push_back(check_harmonic_bound(a, j));
  for (int m = 1; m <= std::min(a.diameter(), a.d()); ++m) {
    out.push_back(check_partial_drg(a, c, m, TheoremId::P35));
    out.push_back(check_partial_drg(a, c, m, TheoremId::P36));
  }
  out.push_back(check_chain(a));
  if (a.diameter() >= 2) out.push_back(check_distance_polynomial_sufficient(a, c));
  return out;
}

}  // namespace spexcess
