#include <doctest.h>

#include <cmath>

#include "spexcess/analysis.hpp"
#include "spexcess/classify.hpp"
#include "spexcess/errors.hpp"
#include "spexcess/fixtures.hpp"
#include "spexcess/theorems.hpp"
#include "support.hpp"

using namespace spexcess;
using doctest::Approx;

namespace {

struct Bundle {
  Analysis a;
  Classification c;
  explicit Bundle(Graph g) : a(analyze_graph(std::move(g))), c(classify(a)) {}
};

const Matrix& witness_matrix(const TheoremReport& r, const std::string& name) {
  for (const auto& w : r.witnesses)
    if (w.name == name) return std::get<Matrix>(w.value);
  FAIL("missing witness " << name);
  static Matrix empty;
  return empty;
}

}  // namespace

TEST_CASE("comparison bookkeeping") {
  Comparison eq = compare("x", 1.0, 1.0 + 1e-12, 1e-7);
  CHECK(eq.scalar_equal);
  CHECK_FALSE(eq.ambiguous);
  Comparison near = compare("x", 1.0, 1.0 + 1e-6, 1e-7);
  CHECK_FALSE(near.scalar_equal);
  CHECK(near.ambiguous);
  Comparison strict = compare("x", 1.0, 2.0, 1e-7);
  CHECK(strict.slack == 1.0);
  CHECK(strict.sound(1e-7));
  CHECK_FALSE(compare("x", 2.0, 1.0, 1e-7).sound(1e-7));
  CHECK(compare("x", 2.0, 1.0, 1e-7, false).sound(1e-7));

  Comparison mismatch = compare("x", 1.0, 1.0, 1e-7);
  mismatch.certified = false;
  CHECK(mismatch.consistent());
  mismatch.implication = Implication::iff;
  CHECK_FALSE(mismatch.consistent());
  Comparison apart = compare("x", 1.0, 2.0, 1e-7);
  apart.certified = true;
  CHECK_FALSE(apart.consistent());
}

TEST_CASE("theorem ids round-trip") {
  for (auto id : {TheoremId::P31, TheoremId::T32, TheoremId::T33, TheoremId::T34, TheoremId::P35,
                  TheoremId::P36, TheoremId::T37, TheoremId::T38})
    CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK_FALSE(parse_theorem_id("T99").has_value());
}

TEST_CASE("local bound") {
  Bundle pet(fixtures::petersen());
  for (int u = 0; u < 10; ++u) {
    auto r0 = check_local_bound(pet.a, u, 0, Poly::constant(1.0));
    CHECK(r0.main.lhs == Approx(1.0));
    CHECK(r0.main.rhs == Approx(1.0));
    CHECK(r0.equality_holds);

    auto r1 = check_local_bound(pet.a, u, 1, pet.a.local[u].sums[1]);
    CHECK(r1.equality_holds);
    CHECK(pet.a.local[u].sums[1](3.0) == Approx(4.0));
    CHECK(pet.a.stats.ball_norms(u, 1) == Approx(4.0));
  }

  Bundle k23(fixtures::complete_bipartite(2, 3));
  for (int u = 0; u < 5; ++u) CHECK(check_local_bound(k23.a, u, 0, Poly::constant(1.0)).equality_holds);
  auto strict = check_local_bound(k23.a, 2, 1, Poly::identity());
  CHECK(strict.main.slack > 1e-3);
  CHECK_FALSE(strict.equality_holds);
  CHECK(strict.consistent());

  CHECK_THROWS_AS(check_local_bound(k23.a, 2, 0, Poly::identity()), DegreeError);
  CHECK_THROWS_AS(check_local_bound(k23.a, 2, 7, Poly::identity()), DegreeError);
}

TEST_CASE("local spectral excess theorem") {
  Bundle pet(fixtures::petersen());
  for (int u = 0; u < 10; ++u) {
    auto r = check_local_spet(pet.a, pet.c, u);
    CHECK(r.equality_holds);
    CHECK(r.oracle_agrees == true);
  }
  Bundle p3(fixtures::path(3));
  CHECK(check_local_spet(p3.a, p3.c, 1).equality_holds);

  Bundle k23(fixtures::complete_bipartite(2, 3));
  for (int u = 0; u < 5; ++u) {
    auto r = check_local_spet(k23.a, k23.c, u);
    CHECK(r.oracle_agrees == true);
    CHECK(r.equality_holds == k23.c.pseudo_dr[u].holds);
    CHECK(r.sound(1e-7));
  }
}

TEST_CASE("spectral excess theorem") {
  Bundle k23(fixtures::complete_bipartite(2, 3));
  auto r = check_lee_weng(k23.a);
  CHECK(r.main.lhs == Approx(35.0 / 24.0).epsilon(1e-12));
  CHECK(r.main.rhs == Approx(1.5).epsilon(1e-12));
  CHECK_FALSE(r.equality_holds);
  CHECK(r.consistent());

  Bundle pet(fixtures::petersen());
  auto e = check_lee_weng(pet.a);
  CHECK(e.equality_holds);
  CHECK(testing::max_abs(witness_matrix(e, "p_geD(A)") - pet.a.distances.distance_matrices[2]) < 1e-9);

  Bundle k2(fixtures::complete(2));
  CHECK(check_lee_weng(k2.a).equality_holds);
}

TEST_CASE("harmonic bound") {
  Bundle k23(fixtures::complete_bipartite(2, 3));
  auto r0 = check_harmonic_bound(k23.a, 0);
  CHECK(r0.main.lhs == Approx(1.0));
  CHECK(r0.main.rhs == Approx(1.0));
  CHECK(r0.main.scalar_equal);
  CHECK_FALSE(r0.certificates[0].holds);  // I ≠ diag(α_u²) off regular graphs
  CHECK_FALSE(r0.equality_holds);
  CHECK(r0.consistent());

  auto r1 = check_harmonic_bound(k23.a, 1);
  CHECK(r1.main.lhs == Approx(3.5).epsilon(1e-12));
  CHECK(r1.main.rhs == Approx(60.0 / 17.0).epsilon(1e-12));
  CHECK_FALSE(r1.equality_holds);
  CHECK_THROWS_AS(check_harmonic_bound(k23.a, k23.a.min_local_degree() + 1), HypothesisError);

  Bundle pet(fixtures::petersen());
  auto p1 = check_harmonic_bound(pet.a, 1);
  CHECK(p1.equality_holds);
  const Matrix ia = Matrix::Identity(10, 10) + pet.a.graph.adjacency();
  CHECK(testing::max_abs(witness_matrix(p1, "q_j(A)") - ia) < 1e-9);
  CHECK(check_harmonic_bound(pet.a, 0).equality_holds);
}

TEST_CASE("partial distance-regularity") {
  Bundle pet(fixtures::petersen());
  auto p = check_partial_drg(pet.a, pet.c, 2, TheoremId::P36);
  CHECK(p.equality_holds);
  CHECK(p.oracle_agrees == true);

  Bundle k23(fixtures::complete_bipartite(2, 3));
  auto k = check_partial_drg(k23.a, k23.c, 2, TheoremId::P36);
  CHECK(k.main.slack > 1e-3);
  CHECK_FALSE(k.equality_holds);
  CHECK_FALSE(k23.c.is_regular);
  for (int m = 1; m <= 2; ++m) {
    auto r35 = check_partial_drg(k23.a, k23.c, m, TheoremId::P35);
    CHECK_FALSE(r35.equality_holds);
    CHECK(r35.oracle_agrees == true);
  }

  Bundle c6(fixtures::cycle(6));
  CHECK(check_partial_drg(c6.a, c6.c, 2, TheoremId::P36).equality_holds);
  CHECK(check_partial_drg(c6.a, c6.c, 2, TheoremId::P35).equality_holds);

  CHECK_THROWS_AS(check_partial_drg(pet.a, pet.c, 0), HypothesisError);
  CHECK_THROWS_AS(check_partial_drg(pet.a, pet.c, 3), HypothesisError);
  CHECK_THROWS_AS(check_partial_drg(pet.a, pet.c, 1, TheoremId::T33), HypothesisError);
}

TEST_CASE("excess chain") {
  Bundle k23(fixtures::complete_bipartite(2, 3));
  auto r = check_chain(k23.a);
  REQUIRE(r.links.size() == 2);
  CHECK(r.links[0].slack == Approx(1.5 - 25.0 / 17.0).epsilon(1e-9));
  CHECK(r.links[1].slack == Approx(25.0 / 17.0 - 35.0 / 24.0).epsilon(1e-9));
  CHECK_FALSE(r.links[0].equality_holds());
  CHECK_FALSE(r.links[1].equality_holds());
  CHECK(r.consistent());

  Bundle pet(fixtures::petersen());
  auto e = check_chain(pet.a);
  CHECK(e.equality_holds);
  CHECK(e.links[0].lhs == Approx(6.0));
  CHECK(pet.a.stats.sphere_norms.col(2).isApproxToConstant(6.0));

  // Vertex-transitive but not distance-regular.
  Bundle circ(fixtures::circulant(8, {1, 2}));
  auto t = check_chain(circ.a);
  CHECK(t.links[1].equality_holds());
  CHECK(t.links[0].certified.has_value());
  CHECK(t.links[0].equality_holds() == *t.links[0].certified);
  CHECK(t.consistent());
}

TEST_CASE("distance-polynomial sufficient condition") {
  Bundle pet(fixtures::petersen());
  auto p = check_distance_polynomial_sufficient(pet.a, pet.c);
  CHECK(p.equality_holds);
  CHECK(p.oracle_agrees == true);

  Bundle k23(fixtures::complete_bipartite(2, 3));
  auto k = check_distance_polynomial_sufficient(k23.a, k23.c);
  CHECK_FALSE(k.equality_holds);
  CHECK_FALSE(k.main.equality_holds());
  CHECK(k.consistent());

  Bundle p3(fixtures::path(3));
  auto n = check_distance_polynomial_sufficient(p3.a, p3.c);
  CHECK_FALSE(n.equality_holds);
  CHECK_FALSE(p3.c.distance_polynomial.holds);

  Bundle k2(fixtures::complete(2));
  CHECK_THROWS_AS(check_distance_polynomial_sufficient(k2.a, k2.c), HypothesisError);
}

TEST_CASE("all checks on the bundled fixtures are sound, consistent and agree with the oracles") {
  for (const auto& nf : fixtures::bundled()) {
    CAPTURE(nf.name);
    Bundle b(nf.graph);
    for (const auto& r : run_all_checks(b.a, b.c)) {
      CAPTURE(to_string(r.id));
      CHECK(r.sound(1e-7));
      CHECK(r.consistent());
      CHECK(r.oracle_agrees.value_or(true));
    }
  }
}
