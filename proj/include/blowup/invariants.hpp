#pragma once

#include <string>

#include "blowup/exact_algebra.hpp"
#include "blowup/link_model.hpp"
#include "blowup/presentation.hpp"

namespace blowup::invariants {

using algebra::AbelianGroup;
using algebra::Integer;
using algebra::LaurentPoly;
using algebra::Rational;

// unit_normalize(det(V - t V^T)).
LaurentPoly alexander_seifert(const link::SeifertMatrix& v);

// gcd of the maximal minors of the Fox Jacobian (all meridians -> t) with the
// first column deleted.  Throws Errc::NotWirtinger without meridian markers.
LaurentPoly alexander_fox(const Presentation& p);

// Fox Jacobian evaluated under the abelianization sending every generator to t.
algebra::LaurentMatrix fox_jacobian(const Presentation& p);

struct Determinant {
  Rational signed_value;
  Integer abs_value;
};

Determinant determinant_at_minus_one(const LaurentPoly& a);

// coker(V + V^T).
AbelianGroup branched_cover_h1(const link::SeifertMatrix& v);
// Same group from a diagram: coker of the colouring matrix with one arc
// column deleted.
AbelianGroup branched_cover_h1(const link::LinkDiagram& d);

enum class Route { seifert, fox };

struct LinkInvariants {
  std::size_t components = 0;
  LaurentPoly alexander;
  Determinant det;
  AbelianGroup h1_branched;
  bool b1_positive = false;
  Route route = Route::seifert;
};

// Braid-origin diagrams use the Seifert route, PD diagrams the Fox/colouring
// route.
LinkInvariants compute(const link::LinkDiagram& d);

std::string to_string(Route r);

}  // namespace blowup::invariants
