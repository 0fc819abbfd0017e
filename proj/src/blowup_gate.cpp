#include "blowup/blowup_gate.hpp"

#include <algorithm>
#include <set>

namespace blowup::gate {

std::string to_string(Status s) {
  switch (s) {
    case Status::Obstructed: return "Obstructed";
    case Status::Admissible: return "Admissible";
    case Status::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::ConnectedZ: return "ConnectedZ";
    case Reason::DeterminantNonzero: return "DeterminantNonzero";
    case Reason::EmptyZ1: return "EmptyZ1";
  }
  return "Unknown";
}

Verdict gate(const link::LinkDiagram& z, const std::vector<bool>& monodromy) {
  if (monodromy.size() != z.num_components())
    throw Error(Errc::LabelLengthMismatch, "expected " + std::to_string(z.num_components()) +
                                               " monodromy labels, got " + std::to_string(monodromy.size()));
  Verdict v;
  v.certificates.components = z.num_components();
  for (std::size_t i = 0; i < monodromy.size(); ++i)
    if (monodromy[i]) v.certificates.z1.push_back(i);

  if (z.num_components() == 1) v.reasons.push_back(Reason::ConnectedZ);

  if (!v.certificates.z1.empty()) {
    const auto inv = invariants::compute(link::sublink(z, v.certificates.z1));
    v.certificates.alexander_z1 = inv.alexander;
    v.certificates.det_z1 = inv.det;
    v.certificates.h1_z1 = inv.h1_branched;
    if (inv.det.abs_value != 0) v.reasons.push_back(Reason::DeterminantNonzero);
  }

  const bool obstructed = !v.reasons.empty();
  if (v.certificates.z1.empty()) v.reasons.push_back(Reason::EmptyZ1);
  if (obstructed)
    v.status = Status::Obstructed;
  else if (v.certificates.z1.empty())
    v.status = Status::Indeterminate;
  else
    v.status = Status::Admissible;
  return v;
}

// ---------------------------------------------------------------------------

HomologyElement HomologyModel::zero() const {
  return {std::vector<Integer>(rank, 0), std::vector<Integer>(torsion.size(), 0)};
}

HomologyElement HomologyModel::reduce(HomologyElement e) const {
  if (e.free.size() != rank || e.torsion.size() != torsion.size())
    throw Error(Errc::SizeMismatch, "homology element does not match the model");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), e.torsion[i].get_mpz_t(), torsion[i].get_mpz_t());
    e.torsion[i] = r;
  }
  return e;
}

HomologyElement HomologyModel::add(const HomologyElement& a, const HomologyElement& b) const {
  HomologyElement out = reduce(a);
  const HomologyElement bb = reduce(b);
  for (std::size_t i = 0; i < rank; ++i) out.free[i] += bb.free[i];
  for (std::size_t i = 0; i < torsion.size(); ++i) out.torsion[i] += bb.torsion[i];
  return reduce(std::move(out));
}

HomologyElement HomologyModel::scale(const Integer& k, const HomologyElement& a) const {
  HomologyElement out = reduce(a);
  for (auto& x : out.free) x *= k;
  for (auto& x : out.torsion) x *= k;
  return reduce(std::move(out));
}

Integer HomologyModel::order(const HomologyElement& a) const {
  const HomologyElement r = reduce(a);
  for (const auto& x : r.free)
    if (x != 0) return 0;
  Integer ord = 1;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Integer g, part;
    mpz_gcd(g.get_mpz_t(), r.torsion[i].get_mpz_t(), torsion[i].get_mpz_t());
    part = torsion[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), part.get_mpz_t());
  }
  return ord;
}

void FlowGraph::validate() const {
  for (const auto& e : edges)
    if (e.from >= vertices || e.to >= vertices)
      throw Error(Errc::InvalidFlow, "edge endpoint out of range");
}

Flow Flow::zero(std::size_t edges) { return {std::vector<Rational>(edges, 0), std::vector<int>(edges, 1)}; }

Rational Flow::signed_weight(std::size_t e) const {
  return orientations[e] > 0 ? weights[e] : Rational(-weights[e]);
}

void Flow::validate() const {
  if (weights.size() != orientations.size())
    throw Error(Errc::SizeMismatch, "weights and orientations differ in length");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw Error(Errc::InvalidFlow, "flow weights must be nonnegative");
    if (orientations[i] != 1 && orientations[i] != -1)
      throw Error(Errc::InvalidFlow, "orientations must be +1 or -1");
  }
}

Flow flow_from_signed(const std::vector<Rational>& s) {
  Flow f;
  for (const auto& w : s) {
    f.weights.push_back(abs(w));
    f.orientations.push_back(w < 0 ? -1 : 1);
  }
  return f;
}

Flow flow_scale(const Rational& k, const Flow& f) {
  f.validate();
  std::vector<Rational> s;
  for (std::size_t i = 0; i < f.size(); ++i) s.push_back(k * f.signed_weight(i));
  return flow_from_signed(s);
}

bool is_flow(const FlowGraph& g, const Flow& f) {
  g.validate();
  f.validate();
  if (f.size() != g.edges.size()) throw Error(Errc::SizeMismatch, "flow does not match the graph");
  std::vector<Rational> net(g.vertices, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational s = f.signed_weight(i);
    net[g.edges[i].from] -= s;
    net[g.edges[i].to] += s;
  }
  return std::all_of(net.begin(), net.end(), [](const Rational& x) { return x == 0; });
}

Flow flow_add(const Flow& a, const Flow& b) {
  a.validate();
  b.validate();
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "flows live on different graphs");
  std::vector<Rational> s;
  for (std::size_t i = 0; i < a.size(); ++i) s.push_back(a.signed_weight(i) + b.signed_weight(i));
  return flow_from_signed(s);
}

HomologyElement homology_class(const FlowGraph& g, const Flow& f, const HomologyModel& h) {
  g.validate();
  f.validate();
  if (f.size() != g.edges.size()) throw Error(Errc::SizeMismatch, "flow does not match the graph");
  HomologyElement sum = h.zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational s = f.signed_weight(i);
    if (s.get_den() != 1) throw Error(Errc::NonIntegerWeights, "homology classes need integer weights");
    sum = h.add(sum, h.scale(s.get_num(), g.edges[i].label));
  }
  return sum;
}

Realizability realizable_k(const HomologyModel& h, const HomologyElement& c,
                           const std::vector<HomologyElement>& admissible) {
  const HomologyElement cc = h.reduce(c);
  std::set<HomologyElement> adm;
  for (const auto& a : admissible) adm.insert(h.reduce(a));

  Realizability out;
  const auto pivot = std::find_if(cc.free.begin(), cc.free.end(), [](const Integer& x) { return x != 0; });
  if (pivot != cc.free.end()) {
    // k is pinned by one free coordinate of each admissible element.
    const auto i = static_cast<std::size_t>(pivot - cc.free.begin());
    std::set<Integer> ks;
    for (const auto& a : adm) {
      if (!mpz_divisible_p(a.free[i].get_mpz_t(), cc.free[i].get_mpz_t())) continue;
      const Integer k = a.free[i] / cc.free[i];
      if (h.scale(k, cc) == a) ks.insert(k);
    }
    out.ks.assign(ks.begin(), ks.end());
    return out;
  }
  const Integer ord = h.order(cc);
  for (Integer r = 0; r < ord; ++r)
    if (adm.count(h.scale(r, cc))) out.residues.push_back(r);
  if (!out.residues.empty()) {
    out.infinite = true;
    out.period = ord;
  }
  return out;
}

std::vector<HomologyElement> admissible_from_milnor_wood(const std::vector<std::vector<long>>& vectors,
                                                         const algebra::IntMatrix& pd,
                                                         const HomologyModel& h) {
  if (pd.rows() != h.rank + h.torsion.size())
    throw Error(Errc::SizeMismatch, "duality matrix rows must match the homology model");
  std::set<HomologyElement> out;
  for (const auto& v : vectors) {
    if (v.size() != pd.cols()) throw Error(Errc::SizeMismatch, "duality matrix columns must match the genera");
    HomologyElement e = h.zero();
    for (std::size_t r = 0; r < pd.rows(); ++r) {
      Integer s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += pd(r, j) * (2 * v[j]);
      if (r < h.rank)
        e.free[r] = s;
      else
        e.torsion[r - h.rank] = s;
    }
    out.insert(h.reduce(std::move(e)));
  }
  return {out.begin(), out.end()};
}

}  // namespace blowup::gate
