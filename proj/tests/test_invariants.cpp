#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup/invariants.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace blowup;
using namespace blowup::invariants;
using algebra::int_matrix;

namespace {

LaurentPoly poly(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return LaurentPoly::from_coeffs(0, v);
}

link::SeifertMatrix seifert_of(algebra::IntMatrix v) {
  link::SeifertMatrix s;
  s.rank = v.rows();
  s.V = std::move(v);
  return s;
}

}  // namespace

TEST_CASE("alexander_seifert examples") {
  CHECK(alexander_seifert(seifert_of(int_matrix({{-1, 1}, {0, -1}}))) == poly({1, -1, 1}));
  CHECK(alexander_seifert(seifert_of(int_matrix({{1}}))) == poly({-1, 1}));
  CHECK(alexander_seifert(seifert_of(algebra::IntMatrix(0, 0))) == LaurentPoly(1));
}

TEST_CASE("alexander_fox examples") {
  const auto tre = link::wirtinger(link::parse_pd({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}));
  CHECK(alexander_fox(tre) == poly({1, -1, 1}));
  CHECK(alexander_fox(link::wirtinger(link::LinkDiagram::unknot())) == LaurentPoly(1));
  CHECK(alexander_fox(link::wirtinger(link::LinkDiagram::unlink(2))).is_zero());
  Presentation bare = tre;
  bare.meridian_markers.reset();
  CHECK_THROWS_AS(alexander_fox(bare), Error);
}

TEST_CASE("fox jacobian of a conjugation relator") {
  // x2^-1 x1 x3 x1^-1 under x_i -> t
  Presentation p;
  p.generators = default_generator_names(3);
  p.relators = {{{1, -1}, {0, 1}, {2, 1}, {0, -1}}};
  const auto J = fox_jacobian(p);
  CHECK(J(0, 1) == -LaurentPoly::monomial(1, -1));
  CHECK(J(0, 0) == LaurentPoly::monomial(1, -1) - LaurentPoly(1));
  CHECK(J(0, 2) == LaurentPoly(1));
}

TEST_CASE("determinant_at_minus_one") {
  CHECK(determinant_at_minus_one(poly({1, -1, 1})).abs_value == 3);
  CHECK(determinant_at_minus_one(poly({1, -3, 1})).abs_value == 5);
  CHECK(determinant_at_minus_one(LaurentPoly()).abs_value == 0);
  // figure-eight through both routes
  const link::BraidWord fig8{3, {1, -2, 1, -2}};
  const auto a = alexander_seifert(link::seifert_matrix(fig8));
  CHECK(a == poly({1, -3, 1}));
  CHECK(equal_up_to_units(a, alexander_fox(link::wirtinger(link::from_braid(fig8)))));
  CHECK(determinant_at_minus_one(a).abs_value == 5);
}

TEST_CASE("branched_cover_h1 examples") {
  CHECK(branched_cover_h1(seifert_of(int_matrix({{-1, 1}, {0, -1}}))).to_string() == "Z/3");
  CHECK(branched_cover_h1(seifert_of(int_matrix({{1}}))).to_string() == "Z/2");
  const auto un = branched_cover_h1(seifert_of(int_matrix({{0}})));
  CHECK(un.rank == 1);
  CHECK(un.torsion.empty());
}

TEST_CASE("corpus invariants") {
  for (const auto& e : corpus::links()) {
    CAPTURE(e.name);
    const auto d = link::from_braid(e.braid);
    const auto inv = compute(d);
    CHECK(inv.components == e.components);
    CHECK(inv.det.abs_value == e.det);
    CHECK(inv.b1_positive == (inv.h1_branched.rank > 0));
    // rational homology sphere dichotomy
    CHECK((inv.det.abs_value != 0) == (inv.h1_branched.rank == 0));
    if (inv.det.abs_value != 0) CHECK(inv.h1_branched.order() == inv.det.abs_value);
    // symmetry
    CHECK(equal_up_to_units(inv.alexander, inv.alexander.reflected()));
    // knots: odd determinant
    if (e.components == 1) {
      CHECK(inv.det.abs_value % 2 == 1);
      CHECK(abs(eval_at(inv.alexander, 1)) == 1);
    }
    // H1 through the SNF oracle
    const auto v = link::seifert_matrix(e.braid);
    const auto [rank, torsion] = oracle::cokernel(v.V + v.V.transpose());
    CHECK(inv.h1_branched.rank == rank);
    CHECK(inv.h1_branched.torsion == torsion);
    // PD route agrees
    link::LinkDiagram pd = d;
    pd.origin = link::Origin::pd;
    pd.braid.reset();
    const auto viaPD = compute(pd);
    CHECK(viaPD.route == Route::fox);
    CHECK(equal_up_to_units(viaPD.alexander, inv.alexander));
    CHECK(viaPD.h1_branched == inv.h1_branched);
  }
}

TEST_CASE("spot values") {
  auto h1 = [](link::BraidWord b) { return compute(link::from_braid(b)).h1_branched.to_string(); };
  CHECK(h1({2, {1, 1, 1}}) == "Z/3");
  CHECK(h1({3, {1, -2, 1, -2}}) == "Z/5");
  CHECK(h1({2, {1, 1}}) == "Z/2");
  CHECK(h1({2, {}}) == "Z");
  CHECK(compute(link::from_braid({2, {1, 1}})).alexander == poly({-1, 1}));
}
