#include "blowup/invariants.hpp"

#include <functional>

namespace blowup::invariants {

using algebra::IntMatrix;
using algebra::LaurentMatrix;

LaurentPoly alexander_seifert(const link::SeifertMatrix& v) {
  const std::size_t n = v.V.rows();
  LaurentMatrix m(n, n);
  const LaurentPoly t = LaurentPoly::t();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = LaurentPoly(v.V(i, j)) - t * LaurentPoly(v.V(j, i));
  return algebra::unit_normalize(algebra::laurent_det(m));
}

LaurentMatrix fox_jacobian(const Presentation& p) {
  p.validate();
  LaurentMatrix J(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    // Running exponent of the prefix under x_i -> t.
    int e = 0;
    for (const auto& l : p.relators[r]) {
      if (l.exponent > 0) {
        J(r, l.generator) += LaurentPoly::monomial(1, e);
        ++e;
      } else {
        --e;
        J(r, l.generator) -= LaurentPoly::monomial(1, e);
      }
    }
  }
  return J;
}

LaurentPoly alexander_fox(const Presentation& p) {
  if (!p.meridian_markers) throw Error(Errc::NotWirtinger, "presentation has no meridian markers");
  const LaurentMatrix J = fox_jacobian(p);
  const std::size_t n = p.generators.size();
  if (n == 0) throw Error(Errc::NotWirtinger, "presentation has no generators");
  const std::size_t k = n - 1;
  const std::size_t rows = J.rows();
  if (rows < k) return LaurentPoly();

  LaurentPoly g;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (g.is_unit()) return;
    if (pick.size() == k) {
      LaurentMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = J(pick[i], j + 1);
      g = algebra::laurent_gcd(g, algebra::laurent_det(minor));
      return;
    }
    for (std::size_t r = from; r + (k - pick.size()) <= rows; ++r) {
      pick.push_back(r);
      choose(r + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return algebra::unit_normalize(g);
}

Determinant determinant_at_minus_one(const LaurentPoly& a) {
  Determinant d;
  d.signed_value = algebra::eval_at(algebra::unit_normalize(a), -1);
  d.abs_value = abs(d.signed_value.get_num());
  return d;
}

AbelianGroup branched_cover_h1(const link::SeifertMatrix& v) {
  return algebra::cokernel(v.V + v.V.transpose());
}

AbelianGroup branched_cover_h1(const link::LinkDiagram& d) {
  const IntMatrix c = link::coloring_matrix(d);
  IntMatrix reduced(c.rows(), c.cols() - 1, 0);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 1; j < c.cols(); ++j) reduced(i, j - 1) = c(i, j);
  return algebra::cokernel(reduced);
}

LinkInvariants compute(const link::LinkDiagram& d) {
  LinkInvariants out;
  out.components = d.num_components();
  if (d.origin == link::Origin::braid && d.braid) {
    const auto v = link::seifert_matrix(*d.braid);
    out.alexander = alexander_seifert(v);
    out.h1_branched = branched_cover_h1(v);
    out.route = Route::seifert;
  } else {
    out.alexander = alexander_fox(link::wirtinger(d));
    out.h1_branched = branched_cover_h1(d);
    out.route = Route::fox;
  }
  out.det = determinant_at_minus_one(out.alexander);
  out.b1_positive = out.h1_branched.rank > 0;
  return out;
}

std::string to_string(Route r) { return r == Route::seifert ? "seifert" : "fox"; }

}  // namespace blowup::invariants
