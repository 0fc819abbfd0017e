#pragma once

#include <string>
#include <vector>

namespace blowup::psl2 {

// Real 2x2 matrix (a b; c d), renormalized to determinant 1 on construction.
struct SL2 {
  double a = 1, b = 0, c = 0, d = 1;

  // Divides by sqrt(det); throws Errc::InvalidMatrix when det <= 0.
  static SL2 make(double a, double b, double c, double d);
  static SL2 identity() { return {}; }

  double trace() const noexcept { return a + d; }
  double det() const noexcept { return a * d - b * c; }
  SL2 inverse() const noexcept { return {d, -b, -c, a}; }
  SL2 operator-() const noexcept { return {-a, -b, -c, -d}; }
  friend SL2 operator*(const SL2& x, const SL2& y) noexcept {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

// Squared Frobenius distance.
double dist2(const SL2& x, const SL2& y) noexcept;

// Basis of sl(2,R): xi1 generates rotations, xi2 and xi3 hyperbolic flows.
SL2 exp_xi1(double t);  // (cos t, -sin t; sin t, cos t)
SL2 exp_xi2(double t);  // (cosh t, sinh t; sinh t, cosh t)
SL2 exp_xi3(double t);  // diag(e^t, e^-t)
// exp of the traceless matrix (x, y; z, -x).
SL2 exp_traceless(double x, double y, double z);

// Element of SL(2,R)/{+-1}; the stored representative has its first entry
// of magnitude > 1e-12 positive.
class PSL2 {
 public:
  PSL2() = default;
  PSL2(const SL2& g);  // NOLINT(google-explicit-constructor)

  const SL2& rep() const noexcept { return g_; }
  PSL2 inverse() const { return PSL2(g_.inverse()); }
  friend PSL2 operator*(const PSL2& x, const PSL2& y) { return PSL2(x.g_ * y.g_); }
  // Equality modulo sign within tol (max-norm).
  bool approx_equal(const PSL2& o, double tol = 1e-9) const noexcept;

 private:
  SL2 g_;
};

// min over sign of the squared Frobenius distance to +-identity.
double distance_to_identity2(const SL2& g) noexcept;

enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };
std::string to_string(Kind k);

// |trace| within tol of 2 is parabolic (or identity).
Kind classify(const PSL2& g, double tol = 1e-8);

// RP^1 as angles in [0, pi).
double act_rp1(const PSL2& g, double theta);

// Lift of the action on RP^1 to R (deck translation x -> x + pi).  The
// canonical lift has F(0) in [0, pi); offset adds offset * pi.
struct CircleLift {
  PSL2 g;
  long offset = 0;

  double operator()(double x) const;
  // The genuine inverse function.
  CircleLift inverse() const;
};

struct TranslationNumber {
  double value = 0;
  double error_bound = 0;  // 1 / iterations
  bool converged = false;  // |tau_2n - tau_n| < tol
};

// Rotation number in units of full turns of RP^1 (pi in angle).
TranslationNumber translation_number(const CircleLift& l, long iterations, double tol = 1e-9);

struct EulerResult {
  long euler = 0;
  double residual = 0;
  double raw = 0;  // lifted relator at 0, divided by pi
};

// rep lists a1, b1, ..., ag, bg of the surface relator [a1,b1]...[ag,bg].
// Throws Errc::SizeMismatch, Errc::ResidualTooLarge, Errc::RoundingAmbiguous.
EulerResult euler_number(const std::vector<PSL2>& rep, int genus, double tol = 1e-8);

// All integer vectors with |n_j| <= 2 g_j - 2, lexicographically ordered.
// Throws Errc::GenusZero for g_j < 1.
std::vector<std::vector<long>> milnor_wood_admissible(const std::vector<int>& genera);

// Side pairings a1, b1, a2, b2 of the regular hyperbolic octagon with
// interior angles pi/4: a discrete faithful genus-2 representation.
std::vector<PSL2> fuchsian_octagon();

}  // namespace blowup::psl2
