#include <doctest.h>

#include <cmath>

#include "spexcess/analysis.hpp"
#include "spexcess/classify.hpp"
#include "spexcess/theorems.hpp"
#include "support.hpp"

using namespace spexcess;
using doctest::Approx;

namespace {

constexpr int kGraphs = 150;

const std::vector<Graph>& suite() {
  static const std::vector<Graph> graphs = testing::random_suite(2024, kGraphs);
  return graphs;
}

}  // namespace

TEST_CASE("mean of local inner products equals the global one") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (const Graph& g : suite()) {
    Analysis a = analyze_graph(g);
    const int k = a.min_local_degree();
    for (int trial = 0; trial < 3; ++trial) {
      // Coefficients in the basis (x/λ_0)^k keep every value O(1).
      auto random_poly = [&](int deg) {
        std::vector<double> c(deg + 1);
        for (int i = 0; i <= deg; ++i) c[i] = coef(rng) / std::pow(a.spectrum.lambda0(), i);
        return Poly(c);
      };
      const Poly p = random_poly(k / 2), q = random_poly(k - k / 2);
      double mean = 0.0;
      for (int u = 0; u < g.order(); ++u) mean += inner_product(p, q, a.local[u].context);
      mean /= g.order();
      CHECK(std::abs(inner_product(p, q, a.global.context) - mean) <= 1e-8);
    }
  }
}

TEST_CASE("local multiplicities") {
  for (const Graph& g : suite()) {
    Analysis a = analyze_graph(g);
    const int n = g.order();
    for (int i = 0; i <= a.d(); ++i) {
      double s = 0.0;
      for (int u = 0; u < n; ++u) s += a.local_spectra[u].local_multiplicities[i];
      CHECK(std::abs(s - a.spectrum.multiplicities[i]) <= 1e-9);
    }
    for (int u = 0; u < n; ++u) {
      double s = 0.0;
      for (double m : a.local_spectra[u].local_multiplicities) s += m;
      CHECK(std::abs(s - 1.0) <= 1e-9);
      CHECK(a.local_spectra[u].eccentricity <= a.local_spectra[u].du);
    }
  }
}

TEST_CASE("predistance sums, Hoffman values and weighted degrees") {
  for (const Graph& g : suite()) {
    Analysis a = analyze_graph(g);
    const double n = g.order();
    double s = 0.0;
    for (double v : a.global.values_at_lambda0()) s += v;
    CHECK(std::abs(s - n) <= 1e-8 * n);
    for (int i = 0; i <= a.d(); ++i)
      CHECK(std::abs(a.global.sum_values(a.d(), i) - (i == 0 ? n : 0.0)) <= 1e-8 * n);
    for (double deg : a.stats.avg_weighted_degree) CHECK(std::abs(deg - a.spectrum.lambda0()) <= 1e-9);
  }
}

TEST_CASE("every inequality holds and every verdict is consistent") {
  int reports = 0;
  for (const Graph& g : suite()) {
    Analysis a = analyze_graph(g);
    Classification c = classify(a);
    for (const auto& r : run_all_checks(a, c)) {
      CAPTURE(to_string(r.id));
      CAPTURE(r.verdict);
      CHECK(r.sound(1e-7));
      CHECK(r.consistent());
      ++reports;
    }
  }
  CHECK(reports > kGraphs);
}

TEST_CASE("spectral verdicts agree with the combinatorial oracles") {
  for (const Graph& g : suite()) {
    Analysis a = analyze_graph(g);
    Classification c = classify(a);
    for (int u = 0; u < g.order(); ++u) {
      auto r = check_local_spet(a, c, u);
      CAPTURE(u);
      CHECK(r.oracle_agrees.value_or(true));
      CHECK(r.equality_holds == c.pseudo_dr[u].holds);
    }
    for (int m = 1; m <= std::min(a.diameter(), a.d()); ++m) {
      auto r = check_partial_drg(a, c, m, TheoremId::P35);
      CHECK(r.equality_holds == (c.partial_dr_level >= m));
    }
    if (a.diameter() >= 2) CHECK(check_distance_polynomial_sufficient(a, c).oracle_agrees.value_or(true));
  }
}
