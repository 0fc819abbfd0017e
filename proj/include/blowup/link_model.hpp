#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "blowup/exact_algebra.hpp"
#include "blowup/presentation.hpp"

namespace blowup::link {

enum class Origin { pd, braid };

// X[i,j,k,l]: labels listed counterclockwise starting from the incoming
// under-strand, so the under-strand runs i -> k.  The over-strand enters at
// position over_in (1 or 3); a crossing is positive when it enters at 3.
struct Crossing {
  std::array<int, 4> x{};
  int sign = 1;
  int over_in = 3;

  int under_in() const noexcept { return x[0]; }
  int under_out() const noexcept { return x[2]; }
  int over_in_label() const noexcept { return x[static_cast<std::size_t>(over_in)]; }
  int over_out_label() const noexcept { return x[static_cast<std::size_t>(4 - over_in)]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> word;  // +-i stands for sigma_i^{+-1}, 1 <= i <= strands-1

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Throws Errc::InvalidLetter.
void validate(const BraidWord& b);

// Component index (ordered by lowest starting position) of each strand
// position of the closure.
std::vector<std::size_t> braid_strand_components(const BraidWord& b);
std::size_t braid_component_count(const BraidWord& b);

class LinkDiagram {
 public:
  std::vector<Crossing> crossings;
  // Edge labels of each component in traversal order, starting from the
  // component's smallest label; components are ordered by smallest label.
  // A component whose single label occurs in no crossing is a free loop.
  std::vector<std::vector<int>> components;
  Origin origin = Origin::pd;
  std::optional<BraidWord> braid;  // set when origin == braid

  std::size_t num_components() const noexcept { return components.size(); }
  std::size_t num_crossings() const noexcept { return crossings.size(); }

  static LinkDiagram unknot();
  static LinkDiagram unlink(std::size_t n);
};

using PDCode = std::vector<std::array<long, 4>>;

// Throws Errc::MalformedPD.
LinkDiagram parse_pd(const PDCode& code);
// Free loops have no crossings and are not represented in the output.
PDCode to_pd(const LinkDiagram& d);

LinkDiagram from_braid(const BraidWord& b);

// Closure of the braid obtained by deleting the strands of all components
// not in keep.  Throws Errc::EmptySelection / Errc::InputError.
BraidWord braid_sublink(const BraidWord& b, const std::vector<std::size_t>& keep);

struct SeifertMatrix {
  algebra::IntMatrix V;
  std::size_t rank = 0;                 // first Betti number of the surface
  std::size_t boundary_components = 0;  // c
  std::size_t genus = 0;                // rank = 2g + (c - 1)
};

SeifertMatrix seifert_matrix(const BraidWord& b);

// One generator per over-arc, one relator x_out^-1 x_o^s x_in x_o^-s per
// crossing of sign s; meridian_markers hold the first arc of each component.
Presentation wirtinger(const LinkDiagram& d);

// Fox 3-colouring relations: rows are crossings, columns are Wirtinger arcs.
algebra::IntMatrix coloring_matrix(const LinkDiagram& d);

LinkDiagram sublink(const LinkDiagram& d, const std::vector<std::size_t>& keep);

}  // namespace blowup::link
