// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spexcess/analysis.hpp"
#include "spexcess/classify.hpp"
#include "spexcess/fixtures.hpp"
#include "spexcess/theorems.hpp"
#include "support.hpp"

using namespace spexcess;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

void k23_headline() {
  const auto t0 = Clock::now();
  Analysis a = analyze_graph(fixtures::complete_bipartite(2, 3));
  Classification c = classify(a);
  TheoremReport chain = check_chain(a);
  const double elapsed = seconds_since(t0);
  (void)c;

  const double pe = a.stats.spectral_excess;
  const double mid = a.stats.n_minus_harmonic();
  const double avg = a.stats.delta_star_d();
  const bool values = rel_close(pe, 1.5, 1e-9) && rel_close(mid, 25.0 / 17.0, 1e-9) &&
                      rel_close(avg, 35.0 / 24.0, 1e-9);
  const bool strict = pe > mid && mid > avg && !chain.links[0].equality_holds() &&
                      !chain.links[1].equality_holds();
  std::ostringstream d;
  d.precision(12);
  d << pe << " > " << mid << " > " << avg << " in " << elapsed << " s";
  report(1, "K_{2,3} excess chain", values && strict && elapsed < 1.0, d.str());
}

void k23_perron() {
  Analysis a = analyze_graph(fixtures::complete_bipartite(2, 3));
  double worst = 0.0;
  for (int u = 0; u < 5; ++u) {
    const double want = a.degrees.degrees[u] == 3 ? std::sqrt(5.0) / 2.0 : std::sqrt(5.0) / std::sqrt(6.0);
    worst = std::max(worst, std::abs(a.perron.alpha[u] - want));
  }
  report(2, "K_{2,3} Perron vector", worst <= 1e-9, "max deviation " + std::to_string(worst));
}

void spet_on_drgs() {
  std::vector<std::pair<std::string, Graph>> drgs{{"petersen", fixtures::petersen()}};
  for (int n = 4; n <= 8; ++n) drgs.push_back({"c" + std::to_string(n), fixtures::cycle(n)});
  for (int n = 2; n <= 5; ++n) drgs.push_back({"k" + std::to_string(n), fixtures::complete(n)});
  bool ok = true;
  std::string bad;
  std::string petersen_array;
  for (const auto& [name, g] : drgs) {
    Analysis a = analyze_graph(g);
    TheoremReport r = check_lee_weng(a);
    const double residual = r.certificates.front().residual;
    DistanceRegularity dr = is_distance_regular(a.graph, a.distances);
    if (name == "petersen") petersen_array = dr.intersection_array();
    if (!r.equality_holds || residual > 1e-6 || !dr.holds) {
      ok = false;
      bad += " " + name;
    }
  }
  ok = ok && petersen_array == "{3,2;1,1}";
  report(3, "spectral excess equality on distance-regular graphs", ok,
         ok ? "11 graphs, Petersen " + petersen_array : "failed on" + bad);
}

void p3_negative() {
  Analysis a = analyze_graph(fixtures::path(3));
  Classification c = classify(a);
  TheoremReport r = check_distance_polynomial_sufficient(a, c);
  const double residual = c.distance_polynomial.residuals.at(2);
  const bool hypotheses_fail = !(r.main.equality_holds() && r.links[0].scalar_equal);
  const bool ok = hypotheses_fail && !c.distance_polynomial.holds && residual > 0.1;
  report(4, "P_3 negative control", ok, "A_2 residual " + std::to_string(residual));
}

struct SuiteTally {
  int graphs = 0;
  int eq3 = 0, multiplicities = 0, eccentricity = 0, inequalities = 0, hoffman = 0, degree = 0;
  int t32 = 0, p35 = 0;
};

void random_suite() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::vector<Graph> graphs;
  for (const auto& nf : fixtures::bundled()) graphs.push_back(nf.graph);
  const std::size_t fixtures_count = graphs.size();
  for (const Graph& g : testing::random_suite(7, 200)) graphs.push_back(g);

  SuiteTally bad;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const bool randomized = gi >= fixtures_count;
    Analysis a = analyze_graph(g);
    Classification c = classify(a);
    const int n = g.order();
    const double lambda0 = a.spectrum.lambda0();

    if (randomized) {
      ++bad.graphs;
      const int k = a.min_local_degree();
      // Random coefficients in the basis (x/λ_0)^k.
      std::vector<double> pc(k / 2 + 1), qc(k - k / 2 + 1);
      for (std::size_t i = 0; i < pc.size(); ++i) pc[i] = coef(rng) / std::pow(lambda0, i);
      for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = coef(rng) / std::pow(lambda0, i);
      const Poly p(pc), q(qc);
      double mean = 0.0;
      for (int u = 0; u < n; ++u) mean += inner_product(p, q, a.local[u].context);
      if (std::abs(inner_product(p, q, a.global.context) - mean / n) > 1e-8) ++bad.eq3;

      bool mult_ok = true;
      for (int i = 0; i <= a.d(); ++i) {
        double s = 0.0;
        for (int u = 0; u < n; ++u) s += a.local_spectra[u].local_multiplicities[i];
        mult_ok = mult_ok && std::abs(s - a.spectrum.multiplicities[i]) <= 1e-9;
      }
      bool ecc_ok = true;
      for (const auto& ls : a.local_spectra) {
        double s = 0.0;
        for (double m : ls.local_multiplicities) s += m;
        mult_ok = mult_ok && std::abs(s - 1.0) <= 1e-9;
        ecc_ok = ecc_ok && ls.eccentricity <= ls.du;
      }
      if (!mult_ok) ++bad.multiplicities;
      if (!ecc_ok) ++bad.eccentricity;

      double sum = 0.0;
      for (double v : a.global.values_at_lambda0()) sum += v;
      bool hoff_ok = std::abs(sum - n) <= 1e-8 * n;
      for (int i = 0; i <= a.d(); ++i)
        hoff_ok = hoff_ok && std::abs(a.global.sum_values(a.d(), i) - (i == 0 ? n : 0)) <= 1e-8 * n;
      if (!hoff_ok) ++bad.hoffman;

      bool deg_ok = true;
      for (double d : a.stats.avg_weighted_degree) deg_ok = deg_ok && std::abs(d - lambda0) <= 1e-9;
      if (!deg_ok) ++bad.degree;

      bool ineq_ok = check_lee_weng(a).sound(1e-7) && check_chain(a).sound(1e-7);
      for (int j = 0; j <= a.min_local_degree(); ++j) ineq_ok = ineq_ok && check_harmonic_bound(a, j).sound(1e-7);
      for (int m = 1; m <= std::min(a.diameter(), a.d()); ++m)
        ineq_ok = ineq_ok && check_partial_drg(a, c, m, TheoremId::P36).sound(1e-7);
      if (!ineq_ok) ++bad.inequalities;
    }

    bool t32_ok = true;
    for (int u = 0; u < n; ++u) {
      TheoremReport r = check_local_spet(a, c, u);
      t32_ok = t32_ok && r.equality_holds == c.pseudo_dr[u].holds;
    }
    if (!t32_ok) ++bad.t32;
    bool p35_ok = true;
    for (int m = 1; m <= std::min(a.diameter(), a.d()); ++m)
      p35_ok = p35_ok && check_partial_drg(a, c, m, TheoremId::P35).equality_holds == (c.partial_dr_level >= m);
    if (!p35_ok) ++bad.p35;
  }
  const double elapsed = seconds_since(t0);

  const bool props = bad.graphs >= 100 && bad.eq3 == 0 && bad.multiplicities == 0 && bad.eccentricity == 0 &&
                     bad.inequalities == 0 && bad.hoffman == 0 && bad.degree == 0;
  std::ostringstream d5;
  d5 << bad.graphs << " random graphs; failures: mean-of-local " << bad.eq3 << ", multiplicities "
     << bad.multiplicities << ", eccentricity " << bad.eccentricity << ", inequalities " << bad.inequalities
     << ", Hoffman " << bad.hoffman << ", weighted degree " << bad.degree;
  report(5, "randomized property suites", props, d5.str());

  std::ostringstream d6;
  d6 << graphs.size() << " graphs; local SPET disagreements " << bad.t32 << ", partial-DR disagreements "
     << bad.p35;
  report(6, "oracle agreement", bad.t32 == 0 && bad.p35 == 0, d6.str());

  report(7, "randomized suite runtime", elapsed < 60.0, std::to_string(elapsed) + " s");
}

}  // namespace

int main() {
  k23_headline();
  k23_perron();
  spet_on_drgs();
  p3_negative();
  random_suite();
  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
