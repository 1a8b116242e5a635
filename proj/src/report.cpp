#include "spexcess/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace spexcess {

using nlohmann::json;

namespace {

json numbers(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

json numbers(const Vector& values) {
  json out = json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i) out.push_back(number(values[i]));
  return out;
}

json numbers(const Matrix& values) {
  json out = json::array();
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < values.cols(); ++c) row.push_back(number(values(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Comparison& c) {
  json out{{"label", c.label},
           {"lhs", number(c.lhs)},
           {"rhs", number(c.rhs)},
           {"slack", number(c.slack)},
           {"inequality", c.inequality},
           {"scalarEqual", c.scalar_equal},
           {"ambiguous", c.ambiguous},
           {"equalityHolds", c.equality_holds()}};
  out["certified"] = c.certified ? json(*c.certified) : json(nullptr);
  return out;
}

json witness_value(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>)
          return v;
        else if constexpr (std::is_same_v<T, double>)
          return number(v);
        else
          return numbers(v);
      },
      w.value);
}

bool is_matrix(const Witness& w) {
  if (const auto* m = std::get_if<Matrix>(&w.value)) return m->cols() > 1;
  return false;
}

}  // namespace

json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::strtod(buf, nullptr);
}

json to_json(const TheoremReport& r, bool include_witnesses) {
  json out{{"theoremId", std::string(to_string(r.id))},
           {"lhs", number(r.main.lhs)},
           {"rhs", number(r.main.rhs)},
           {"slack", number(r.main.slack)},
           {"scalarEqual", r.main.scalar_equal},
           {"ambiguous", r.main.ambiguous},
           {"equalityHolds", r.equality_holds},
           {"verdict", r.verdict}};
  out["label"] = r.main.label;
  out["vertex"] = r.vertex ? json(*r.vertex) : json(nullptr);
  out["j"] = r.j ? json(*r.j) : json(nullptr);
  out["m"] = r.m ? json(*r.m) : json(nullptr);
  out["links"] = json::array();
  for (const auto& link : r.links) out["links"].push_back(to_json(link));
  out["certificates"] = json::array();
  for (const auto& cert : r.certificates)
    out["certificates"].push_back(
        {{"label", cert.label}, {"residual", number(cert.residual)}, {"holds", cert.holds}});
  out["oracleAgrees"] = r.oracle_agrees ? json(*r.oracle_agrees) : json(nullptr);
  json witnesses = json::object();
  for (const auto& w : r.witnesses)
    if (include_witnesses || !is_matrix(w)) witnesses[w.name] = witness_value(w);
  out["witnesses"] = std::move(witnesses);
  return out;
}

json to_json(const Classification& c) {
  json out;
  out["isRegular"] = c.is_regular;
  out["isDistanceRegular"] = c.distance_regular.holds;
  if (c.distance_regular.holds) {
    out["intersectionArray"] = {{"b", c.distance_regular.b},
                                {"c", c.distance_regular.c},
                                {"a", c.distance_regular.a},
                                {"text", c.distance_regular.intersection_array()}};
  } else {
    out["intersectionArray"] = nullptr;
  }
  out["distanceRegularCounterexample"] =
      c.distance_regular.counterexample ? json(*c.distance_regular.counterexample) : json(nullptr);
  out["pseudoDRVertices"] = c.pseudo_dr_vertices();
  json per_vertex = json::array();
  for (const auto& p : c.pseudo_dr) {
    json entry{{"vertex", p.vertex}, {"holds", p.holds}};
    json triples = json::array();
    for (const auto& t : p.numbers)
      triples.push_back({{"c", number(t.c)}, {"a", number(t.a)}, {"b", number(t.b)}});
    entry["pseudoIntersectionNumbers"] = p.holds ? triples : json(nullptr);
    entry["counterexample"] = p.counterexample ? json(p.counterexample->describe()) : json(nullptr);
    per_vertex.push_back(std::move(entry));
  }
  out["pseudoDistanceRegularity"] = std::move(per_vertex);
  out["partialDRLevel"] = c.partial_dr_level;
  out["isDistancePolynomial"] = c.distance_polynomial.holds;
  out["distancePolynomialResiduals"] = numbers(c.distance_polynomial.residuals);
  out["extremalVertices"] = c.extremal_vertices;
  return out;
}

json analysis_report(const Analysis& a, const Classification& c,
                     const std::vector<TheoremReport>& reports, bool include_witnesses) {
  json doc;
  doc["schemaVersion"] = kSchemaVersion;

  doc["graph"] = {{"n", a.order()},
                  {"edges", a.graph.size()},
                  {"diameter", a.diameter()},
                  {"d", a.d()},
                  {"regular", a.degrees.is_regular},
                  {"degrees", a.degrees.degrees},
                  {"eccentricities", a.distances.eccentricity},
                  {"labels", a.graph.labels()}};

  doc["options"] = {{"tol", number(a.options.spectral.tol)},
                    {"groupTol", number(a.options.spectral.group_tol)},
                    {"presenceTol", number(a.options.presence_tol)},
                    {"eqTol", number(a.options.eq_tol)},
                    {"maxSweeps", a.options.spectral.max_sweeps}};

  doc["spectrum"] = {{"eigenvalues", numbers(a.spectrum.lambdas)},
                     {"multiplicities", a.spectrum.multiplicities},
                     {"jacobiSweeps", a.spectrum.raw.sweeps}};

  doc["perron"] = {{"lambda0", number(a.spectrum.lambda0())},
                   {"alpha", numbers(a.perron.alpha)},
                   {"nu", numbers(a.perron.nu)}};

  json vertices = json::array();
  for (int u = 0; u < a.order(); ++u) {
    const auto& ls = a.local_spectra[u];
    std::vector<double> evs;
    for (int i : ls.local_eigenvalues) evs.push_back(a.spectrum.lambdas[i]);
    vertices.push_back({{"vertex", u},
                        {"label", a.graph.labels()[u]},
                        {"degree", a.degrees.degrees[u]},
                        {"eccentricity", ls.eccentricity},
                        {"localMultiplicities", numbers(ls.local_multiplicities)},
                        {"localEigenvalues", numbers(evs)},
                        {"du", ls.du},
                        {"extremal", ls.is_extremal},
                        {"avgWeightedDegree", number(a.stats.avg_weighted_degree[u])}});
  }
  doc["vertices"] = std::move(vertices);

  json coeffs = json::array();
  for (const auto& p : a.global.polys) coeffs.push_back(numbers(p.coeffs()));
  doc["polynomials"] = {{"valuesAtLambda0", numbers(a.global.values_at_lambda0())},
                        {"sumValuesAtLambda0", numbers(a.global.sums_at_lambda0())},
                        {"coefficients", std::move(coeffs)},
                        {"hoffmanCoefficients", numbers(a.hoffman.coeffs())},
                        {"recurrence",
                         {{"a", numbers(a.global.recurrence.a)},
                          {"b", numbers(a.global.recurrence.b)},
                          {"c", numbers(a.global.recurrence.c)}}}};

  doc["excess"] = {{"spectralExcess", number(a.stats.spectral_excess)},
                   {"nMinusHarmonic", number(a.stats.n_minus_harmonic())},
                   {"deltaStarD", number(a.stats.delta_star_d())},
                   {"deltaStars", numbers(a.stats.delta_stars)},
                   {"harmonicMeans", numbers(a.stats.harmonic_means)}};

  json theorems = json::array();
  for (const auto& r : reports) theorems.push_back(to_json(r, include_witnesses));
  doc["theorems"] = std::move(theorems);
  doc["classification"] = to_json(c);
  return doc;
}

std::string pretty_summary(const Analysis& a, const Classification& c,
                           const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os.precision(10);
  os << "graph: n=" << a.order() << " |E|=" << a.graph.size() << " D=" << a.diameter()
     << " d=" << a.d() << (a.degrees.is_regular ? " regular" : " nonregular") << "\n";
  os << "spectrum:";
  for (std::size_t i = 0; i < a.spectrum.lambdas.size(); ++i)
    os << " " << a.spectrum.lambdas[i] << "^" << a.spectrum.multiplicities[i];
  os << "\nalpha:";
  for (Eigen::Index u = 0; u < a.perron.alpha.size(); ++u) os << " " << a.perron.alpha[u];
  os << "\nspectral excess p_{>=D}(lambda_0) = " << a.stats.spectral_excess
     << "\nn - H*_{<=D-1}                  = " << a.stats.n_minus_harmonic()
     << "\naverage weighted excess delta*_D = " << a.stats.delta_star_d() << "\n";
  os << "distance-regular: " << (c.distance_regular.holds ? "yes " + c.distance_regular.intersection_array() : "no")
     << "\ndistance-polynomial: " << (c.distance_polynomial.holds ? "yes" : "no")
     << "\npartially distance-regular level: " << c.partial_dr_level
     << "\npseudo-distance-regular around " << c.pseudo_dr_vertices().size() << " of "
     << a.order() << " vertices\n";
  for (const auto& r : reports) {
    if (r.id == TheoremId::P31) continue;
    os << to_string(r.id);
    if (r.vertex) os << " u=" << *r.vertex;
    if (r.j) os << " j=" << *r.j;
    if (r.m) os << " m=" << *r.m;
    os << ": " << r.verdict << "\n";
  }
  return os.str();
}

}  // namespace spexcess
