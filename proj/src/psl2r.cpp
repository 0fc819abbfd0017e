#include "blowup/psl2r.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "blowup/error.hpp"

namespace blowup::psl2 {

namespace {

constexpr double kPi = std::numbers::pi;

// Angle of v relative to u in (-pi, pi].
double angle_between(double ux, double uy, double vx, double vy) {
  return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
}

// Canonical lift without offset: polar decomposition g = R(alpha) P with P
// positive definite, F(x) = x + angle(v, Pv) + alpha, shifted so F(0) lies in
// [0, pi).
struct CanonicalLift {
  double alpha;
  SL2 p;
  double shift;

  explicit CanonicalLift(const SL2& g) {
    alpha = std::atan2(g.c - g.b, g.a + g.d);
    const SL2 rinv = exp_xi1(-alpha);
    p = rinv * g;
    shift = 0;
    const double f0 = raw(0.0);
    shift = -kPi * std::floor(f0 / kPi);
  }
  double raw(double x) const {
    const double vx = std::cos(x), vy = std::sin(x);
    const double px = p.a * vx + p.b * vy, py = p.c * vx + p.d * vy;
    return x + angle_between(vx, vy, px, py) + alpha + shift;
  }
};

}  // namespace

SL2 SL2::make(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0) || !std::isfinite(det)) throw Error(Errc::InvalidMatrix, "matrix must have positive determinant");
  const double s = 1.0 / std::sqrt(det);
  return {a * s, b * s, c * s, d * s};
}

double dist2(const SL2& x, const SL2& y) noexcept {
  const double da = x.a - y.a, db = x.b - y.b, dc = x.c - y.c, dd = x.d - y.d;
  return da * da + db * db + dc * dc + dd * dd;
}

double distance_to_identity2(const SL2& g) noexcept {
  return std::min(dist2(g, SL2::identity()), dist2(g, -SL2::identity()));
}

SL2 exp_xi1(double t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }
SL2 exp_xi2(double t) { return {std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)}; }
SL2 exp_xi3(double t) { return {std::exp(t), 0, 0, std::exp(-t)}; }

SL2 exp_traceless(double x, double y, double z) {
  const double delta = x * x + y * z;  // M^2 = delta * I
  double c, s;                         // exp(M) = c I + s M
  if (std::abs(delta) < 1e-12) {
    c = 1 + delta / 2;
    s = 1 + delta / 6;
  } else if (delta > 0) {
    const double r = std::sqrt(delta);
    c = std::cosh(r);
    s = std::sinh(r) / r;
  } else {
    const double r = std::sqrt(-delta);
    c = std::cos(r);
    s = std::sin(r) / r;
  }
  return {c + s * x, s * y, s * z, c - s * x};
}

PSL2::PSL2(const SL2& g) : g_(g) {
  const double e[4] = {g.a, g.b, g.c, g.d};
  for (double v : e) {
    if (std::abs(v) > 1e-12) {
      if (v < 0) g_ = -g;
      break;
    }
  }
}

bool PSL2::approx_equal(const PSL2& o, double tol) const noexcept {
  auto close = [tol](const SL2& x, const SL2& y) {
    return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol && std::abs(x.c - y.c) <= tol &&
           std::abs(x.d - y.d) <= tol;
  };
  return close(g_, o.g_) || close(g_, -o.g_);
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Identity: return "identity";
    case Kind::Elliptic: return "elliptic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Kind classify(const PSL2& g, double tol) {
  const double t = std::abs(g.rep().trace());
  if (std::abs(t - 2) <= tol) {
    return distance_to_identity2(g.rep()) <= tol * tol ? Kind::Identity : Kind::Parabolic;
  }
  return t < 2 ? Kind::Elliptic : Kind::Hyperbolic;
}

double act_rp1(const PSL2& g, double theta) {
  const SL2& m = g.rep();
  const double vx = std::cos(theta), vy = std::sin(theta);
  double phi = std::atan2(m.c * vx + m.d * vy, m.a * vx + m.b * vy);
  phi = std::fmod(phi, kPi);
  if (phi < 0) phi += kPi;
  if (phi >= kPi) phi -= kPi;
  return phi;
}

double CircleLift::operator()(double x) const {
  return CanonicalLift(g.rep()).raw(x) + static_cast<double>(offset) * kPi;
}

CircleLift CircleLift::inverse() const {
  CircleLift inv{g.inverse(), 0};
  const double y = (*this)(0.0);
  inv.offset = std::lround(-inv(y) / kPi);
  return inv;
}

TranslationNumber translation_number(const CircleLift& l, long iterations, double tol) {
  if (iterations < 1) throw Error(Errc::InputError, "iterations must be >= 1");
  const CanonicalLift base(l.g.rep());
  const double off = static_cast<double>(l.offset) * kPi;
  double x = 0;
  double xn = 0;
  for (long k = 1; k <= 2 * iterations; ++k) {
    x = base.raw(x) + off;
    if (k == iterations) xn = x;
  }
  const double n = static_cast<double>(iterations);
  const double tn = xn / (n * kPi);
  const double t2n = x / (2 * n * kPi);
  const double rich = 2 * t2n - tn;
  const double half_band = 1 / (2 * n);
  TranslationNumber out;
  out.value = std::clamp(rich, t2n - half_band, t2n + half_band);
  out.error_bound = 1 / n;
  out.converged = std::abs(t2n - tn) < tol;
  return out;
}

EulerResult euler_number(const std::vector<PSL2>& rep, int genus, double tol) {
  if (genus < 1 || rep.size() != 2 * static_cast<std::size_t>(genus))
    throw Error(Errc::SizeMismatch, "surface representation needs 2g generator images");
  SL2 w = SL2::identity();
  std::vector<CircleLift> word;  // applied right to left
  for (int i = 0; i < genus; ++i) {
    const PSL2& a = rep[2 * static_cast<std::size_t>(i)];
    const PSL2& b = rep[2 * static_cast<std::size_t>(i) + 1];
    w = w * a.rep() * b.rep() * a.rep().inverse() * b.rep().inverse();
    const CircleLift la{a, 0}, lb{b, 0};
    word.push_back(la);
    word.push_back(lb);
    word.push_back(la.inverse());
    word.push_back(lb.inverse());
  }
  EulerResult out;
  out.residual = distance_to_identity2(w);
  if (!(out.residual < tol))
    throw Error(Errc::ResidualTooLarge, "surface relator residual " + std::to_string(out.residual) +
                                            " exceeds tolerance");
  double x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = (*it)(x);
  out.raw = x / kPi;
  const double e = std::round(out.raw);
  if (std::abs(out.raw - e) >= 0.1)
    throw Error(Errc::RoundingAmbiguous, "lifted relator is not close to an integer translation");
  out.euler = static_cast<long>(e);
  return out;
}

std::vector<std::vector<long>> milnor_wood_admissible(const std::vector<int>& genera) {
  for (int g : genera)
    if (g < 1) throw Error(Errc::GenusZero, "every genus must be at least 1");
  std::vector<std::vector<long>> out{{}};
  for (int g : genera) {
    const long bound = 2L * g - 2;
    std::vector<std::vector<long>> next;
    for (const auto& prefix : out)
      for (long n = -bound; n <= bound; ++n) {
        auto v = prefix;
        v.push_back(n);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<PSL2> fuchsian_octagon() {
  using C = std::complex<double>;
  struct M2 {
    C a, b, c, d;
    M2 operator*(const M2& y) const {
      return {a * y.a + b * y.c, a * y.b + b * y.d, c * y.a + d * y.c, c * y.b + d * y.d};
    }
  };
  const C I(0, 1);
  const double dmid = std::acosh(1 + std::sqrt(2.0));
  const double rm = std::tanh(dmid / 2);
  auto rot = [&](double th) { return M2{std::exp(I * (th / 2)), 0, 0, std::exp(-I * (th / 2))}; };
  auto move = [&](C p) {
    const double s = 1 / std::sqrt(1 - std::norm(p));
    return M2{s, p * s, std::conj(p) * s, s};
  };
  auto move_inv = [&](C p) {
    const double s = 1 / std::sqrt(1 - std::norm(p));
    return M2{s, -p * s, -std::conj(p) * s, s};
  };
  auto half_turn = [&](C p) { return move(p) * M2{I, 0, 0, -I} * move_inv(p); };
  auto midpoint = [&](int j) { return rm * std::exp(I * ((j + 0.5) * kPi / 4)); };
  // side i -> side j
  auto pairing = [&](int i, int j) { return half_turn(midpoint(j)) * rot((j - i) * kPi / 4); };
  // disk -> upper half plane: C^-1 M C with C = (1, -i; 1, i)
  const M2 cay{1, -I, 1, I};
  const M2 cay_inv{I / (2.0 * I), I / (2.0 * I), -1.0 / (2.0 * I), 1.0 / (2.0 * I)};
  auto to_real = [&](const M2& m) {
    const M2 r = cay_inv * m * cay;
    return PSL2(SL2::make(r.a.real(), r.b.real(), r.c.real(), r.d.real()));
  };
  return {to_real(pairing(2, 0)), to_real(pairing(1, 3)), to_real(pairing(6, 4)), to_real(pairing(5, 7))};
}

}  // namespace blowup::psl2
