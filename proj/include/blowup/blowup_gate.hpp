#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/exact_algebra.hpp"
#include "blowup/invariants.hpp"
#include "blowup/link_model.hpp"

namespace blowup::gate {

using algebra::Integer;
using algebra::Rational;

enum class Status { Obstructed, Admissible, Indeterminate };
enum class Reason { ConnectedZ, DeterminantNonzero, EmptyZ1 };

std::string to_string(Status s);
std::string to_string(Reason r);

struct Certificates {
  std::size_t components = 0;
  std::vector<std::size_t> z1;  // indices of components with nontrivial monodromy
  // Present whenever Z1 is nonempty.
  std::optional<algebra::LaurentPoly> alexander_z1;
  std::optional<invariants::Determinant> det_z1;
  std::optional<algebra::AbelianGroup> h1_z1;
};

// Necessary conditions only: Admissible means "not obstructed".
struct Verdict {
  Status status = Status::Indeterminate;
  std::vector<Reason> reasons;
  Certificates certificates;
};

// Throws Errc::LabelLengthMismatch.
Verdict gate(const link::LinkDiagram& z, const std::vector<bool>& monodromy);

// ---------------------------------------------------------------------------
// Flows

// Z^rank + Z/d1 + ... ; elements carry free coordinates and torsion residues.
struct HomologyElement {
  std::vector<Integer> free;
  std::vector<Integer> torsion;

  friend bool operator==(const HomologyElement&, const HomologyElement&) = default;
  friend auto operator<=>(const HomologyElement& a, const HomologyElement& b) {
    if (auto c = a.free <=> b.free; c != 0) return c;
    return a.torsion <=> b.torsion;
  }
};

struct HomologyModel {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  HomologyElement zero() const;
  // Reduces residues into [0, d); throws Errc::SizeMismatch on wrong shape.
  HomologyElement reduce(HomologyElement e) const;
  HomologyElement add(const HomologyElement& a, const HomologyElement& b) const;
  HomologyElement scale(const Integer& k, const HomologyElement& a) const;
  // Smallest n > 0 with n*a == 0, or 0 when a has infinite order.
  Integer order(const HomologyElement& a) const;
};

struct FlowEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  HomologyElement label;
};

struct FlowGraph {
  std::size_t vertices = 0;
  std::vector<FlowEdge> edges;

  // Throws Errc::InvalidFlow on dangling endpoints.
  void validate() const;
};

// weight 0 means the edge is not in the support.
struct Flow {
  std::vector<Rational> weights;
  std::vector<int> orientations;

  static Flow zero(std::size_t edges);
  std::size_t size() const noexcept { return weights.size(); }
  Rational signed_weight(std::size_t e) const;
  // Throws Errc::SizeMismatch / Errc::InvalidFlow.
  void validate() const;

  friend bool operator==(const Flow&, const Flow&) = default;
};

Flow flow_from_signed(const std::vector<Rational>& signed_weights);
Flow flow_scale(const Rational& k, const Flow& f);

bool is_flow(const FlowGraph& g, const Flow& f);
Flow flow_add(const Flow& a, const Flow& b);
// Throws Errc::NonIntegerWeights.
HomologyElement homology_class(const FlowGraph& g, const Flow& f, const HomologyModel& h);

struct Realizability {
  bool infinite = false;
  std::vector<Integer> ks;        // finite case, ascending
  Integer period = 0;             // infinite case: k realizable iff k mod period in residues
  std::vector<Integer> residues;  // infinite case
};

Realizability realizable_k(const HomologyModel& h, const HomologyElement& c,
                           const std::vector<HomologyElement>& admissible);

// Doubled Milnor-Wood vectors pushed through a caller-supplied Poincare
// duality matrix with rank + torsion.size() rows and one column per entry.
std::vector<HomologyElement> admissible_from_milnor_wood(const std::vector<std::vector<long>>& vectors,
                                                         const algebra::IntMatrix& pd,
                                                         const HomologyModel& h);

}  // namespace blowup::gate
