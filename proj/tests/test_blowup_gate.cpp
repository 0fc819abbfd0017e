#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blowup/blowup_gate.hpp"
#include "corpus.hpp"
#include "flow_gen.hpp"

using namespace blowup;
using namespace blowup::gate;

namespace {

bool has(const Verdict& v, Reason r) {
  return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}

HomologyElement el(std::vector<long> f, std::vector<long> t = {}) {
  return {std::vector<Integer>(f.begin(), f.end()), std::vector<Integer>(t.begin(), t.end())};
}

FlowGraph theta() {
  FlowGraph g;
  g.vertices = 2;
  g.edges = {{0, 1, el({1, 0})}, {0, 1, el({0, 1})}, {0, 1, el({-1, -1})}};
  return g;
}

}  // namespace

TEST_CASE("gate on the trefoil") {
  const auto v = gate::gate(link::from_braid({2, {1, 1, 1}}), {true});
  CHECK(v.status == Status::Obstructed);
  CHECK(has(v, Reason::ConnectedZ));
  CHECK(has(v, Reason::DeterminantNonzero));
  CHECK(v.certificates.det_z1->abs_value == 3);
}

TEST_CASE("gate on the 2-component unlink") {
  const auto v = gate::gate(link::LinkDiagram::unlink(2), {true, true});
  CHECK(v.status == Status::Admissible);
  CHECK(v.reasons.empty());
  CHECK(v.certificates.det_z1->abs_value == 0);
  CHECK(v.certificates.h1_z1->rank == 1);
}

TEST_CASE("gate on the Hopf link") {
  const auto v = gate::gate(link::from_braid({2, {1, 1}}), {true, true});
  CHECK(v.status == Status::Obstructed);
  CHECK(has(v, Reason::DeterminantNonzero));
  CHECK_FALSE(has(v, Reason::ConnectedZ));
  CHECK(v.certificates.det_z1->abs_value == 2);
  // Z1 = one unknotted component
  const auto w = gate::gate(link::from_braid({2, {1, 1}}), {true, false});
  CHECK(w.status == Status::Obstructed);
  CHECK(w.certificates.det_z1->abs_value == 1);
}

TEST_CASE("gate with empty Z1 is indeterminate") {
  const auto v = gate::gate(link::from_braid({2, {1, 1}}), {false, false});
  CHECK(v.status == Status::Indeterminate);
  CHECK(has(v, Reason::EmptyZ1));
  CHECK_FALSE(v.certificates.alexander_z1.has_value());
  const auto k = gate::gate(link::LinkDiagram::unknot(), {false});
  CHECK(k.status == Status::Obstructed);
  CHECK(has(k, Reason::ConnectedZ));
}

TEST_CASE("gate label length mismatch") {
  try {
    gate::gate(link::from_braid({2, {1, 1}}), {true});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LabelLengthMismatch);
  }
}

TEST_CASE("gate over the corpus") {
  for (const auto& e : corpus::links()) {
    CAPTURE(e.name);
    const auto d = link::from_braid(e.braid);
    const std::size_t c = d.num_components();
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
      std::vector<bool> labels(c);
      for (std::size_t i = 0; i < c; ++i) labels[i] = (mask >> i) & 1u;
      const auto v = gate::gate(d, labels);
      if (c == 1) CHECK(v.status == Status::Obstructed);
      if (v.status == Status::Obstructed) CHECK_FALSE(v.reasons.empty());
      if (v.status == Status::Admissible) {
        CHECK(c >= 2);
        CHECK(v.certificates.det_z1->abs_value == 0);
        CHECK(v.certificates.h1_z1->rank > 0);
      }
    }
  }
}

TEST_CASE("is_flow examples") {
  FlowGraph loop;
  loop.vertices = 1;
  loop.edges = {{0, 0, el({1})}};
  CHECK(is_flow(loop, {{1}, {1}}));

  CHECK(is_flow(theta(), {{2, 1, 1}, {1, -1, -1}}));
  FlowGraph two;
  two.vertices = 2;
  two.edges = {{0, 1, el({})}, {1, 0, el({})}};
  CHECK_FALSE(is_flow(two, {{1, 2}, {1, 1}}));
  CHECK_THROWS_AS(is_flow(two, {{1}, {1}}), Error);
  CHECK_THROWS_AS(is_flow(two, {{-1, 1}, {1, 1}}), Error);
}

TEST_CASE("flow_add examples") {
  const Flow f{{2, 1, 1}, {1, -1, -1}};
  CHECK(flow_add(f, Flow::zero(3)) == f);
  CHECK(flow_add(f, flow_scale(-1, f)) == Flow::zero(3));
  CHECK(flow_add(f, f) == Flow{{4, 2, 2}, {1, -1, -1}});
  CHECK_THROWS_AS(flow_add(f, Flow::zero(2)), Error);
}

TEST_CASE("homology_class examples") {
  HomologyModel h{1, {}};
  FlowGraph loop;
  loop.vertices = 1;
  loop.edges = {{0, 0, el({1})}};
  CHECK(homology_class(loop, {{3}, {1}}, h) == el({3}));
  CHECK(homology_class(loop, Flow::zero(1), h) == el({0}));
  try {
    homology_class(loop, {{Rational(1, 2)}, {1}}, h);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonIntegerWeights);
  }
  // theta graph: cycles c1 = e0 - e1, c2 = e0 - e2; flow (2,1,1) = c1 + c2
  HomologyModel h2{2, {}};
  const auto g = theta();
  const HomologyElement c1 = h2.add(g.edges[0].label, h2.scale(-1, g.edges[1].label));
  const HomologyElement c2 = h2.add(g.edges[0].label, h2.scale(-1, g.edges[2].label));
  CHECK(homology_class(g, {{2, 1, 1}, {1, -1, -1}}, h2) == h2.add(c1, c2));
}

TEST_CASE("realizable_k examples") {
  HomologyModel h{1, {}};
  auto r = realizable_k(h, el({1}), {el({0}), el({1}), el({2})});
  CHECK_FALSE(r.infinite);
  CHECK(r.ks == std::vector<Integer>{0, 1, 2});
  r = realizable_k(h, el({0}), {el({1})});
  CHECK_FALSE(r.infinite);
  CHECK(r.ks.empty());
  r = realizable_k(h, el({0}), {el({0})});
  CHECK(r.infinite);
  CHECK(r.period == 1);
  // torsion class in Z/4: 2*c = 0 hits residues 0 and 2
  HomologyModel t{0, {4}};
  r = realizable_k(t, el({}, {2}), {el({}, {0})});
  CHECK(r.infinite);
  CHECK(r.period == 2);
  CHECK(r.residues == std::vector<Integer>{0});
  r = realizable_k(HomologyModel{1, {}}, el({-2}), {el({4}), el({-4}), el({3})});
  CHECK(r.ks == std::vector<Integer>{-2, 2});
}

TEST_CASE("milnor-wood admissible set through a duality matrix") {
  HomologyModel h{1, {2}};
  const auto pd = algebra::int_matrix({{1}, {1}});
  const auto adm = admissible_from_milnor_wood({{-2}, {-1}, {0}, {1}, {2}}, pd, h);
  CHECK(adm.size() == 5);
  CHECK(adm.front() == el({-4}, {0}));
  const auto r = realizable_k(h, el({2}, {0}), adm);
  CHECK(r.ks == std::vector<Integer>{-2, -1, 0, 1, 2});
}

TEST_CASE("random flow properties") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = flowgen::random_sample(rng);
    const auto n = s.cycles.size();
    const Flow f = flow_from_signed(flowgen::combine(s, flowgen::random_coeffs(rng, n, false)));
    const Flow g = flow_from_signed(flowgen::combine(s, flowgen::random_coeffs(rng, n, false)));
    const Flow k = flow_from_signed(flowgen::combine(s, flowgen::random_coeffs(rng, n, false)));
    REQUIRE(is_flow(s.graph, f));
    CHECK(is_flow(s.graph, flow_add(f, g)));
    CHECK(flow_add(f, g) == flow_add(g, f));
    CHECK(flow_add(flow_add(f, g), k) == flow_add(f, flow_add(g, k)));
    CHECK(flow_add(f, Flow::zero(f.size())) == f);
    CHECK(flow_add(f, flow_scale(-1, f)) == Flow::zero(f.size()));

    const auto coeff = flowgen::random_coeffs(rng, n, true);
    const Flow fi = flow_from_signed(flowgen::combine(s, coeff));
    const auto cls = homology_class(s.graph, fi, s.model);
    // cycle-space oracle
    HomologyElement expect = s.model.zero();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < s.graph.edges.size(); ++i)
        expect = s.model.add(expect, s.model.scale(coeff[j].get_num() * s.cycles[j][i], s.graph.edges[i].label));
    CHECK(cls == expect);
    for (long m = -5; m <= 5; ++m)
      CHECK(homology_class(s.graph, flow_scale(m, fi), s.model) == s.model.scale(m, cls));
  }
}
