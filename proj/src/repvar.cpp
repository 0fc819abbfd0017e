#include "blowup/repvar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "blowup/error.hpp"

namespace blowup::repvar {

namespace {

constexpr double kPi = std::numbers::pi;

// Perturbation basis for g -> g exp(u1 E1 + u2 E2 + u3 E3).
constexpr std::array<SL2, 3> kBasis = {SL2{1, 0, 0, -1}, SL2{0, 1, 1, 0}, SL2{0, -1, 1, 0}};

SL2 sub(const SL2& x, const SL2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

double frob(const SL2& x) { return std::sqrt(x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d); }

SL2 letter_matrix(const Letter& l, const std::vector<SL2>& g) {
  return l.exponent > 0 ? g[l.generator] : g[l.generator].inverse();
}

unsigned thread_count(unsigned requested, int restarts) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BLOWUPGATE_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) n = static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(std::max(restarts, 1))));
}

// Stacks relator entries W - eps I and penalty terms; J holds derivatives
// with respect to the local coordinates of every generator.
class Objective {
 public:
  Objective(const Presentation& p, const SolveOptions& o) : p_(p), o_(o) {
    rows_ = 4 * p.relators.size() + o.trace_targets.size() + 4 * o.identity_targets.size();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return 3 * p_.generators.size(); }

  void eval(const std::vector<SL2>& g, Eigen::VectorXd& r, Eigen::MatrixXd* J) const {
    r.setZero(static_cast<Eigen::Index>(rows_));
    if (J) J->setZero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols()));
    Eigen::Index row = 0;
    std::vector<SL2> prefix, suffix;
    for (const auto& w : p_.relators) {
      const std::size_t m = w.size();
      prefix.assign(m + 1, SL2::identity());
      suffix.assign(m + 1, SL2::identity());
      for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * letter_matrix(w[i], g);
      for (std::size_t i = m; i-- > 0;) suffix[i] = letter_matrix(w[i], g) * suffix[i + 1];
      const SL2& W = prefix[m];
      const double eps = W.trace() < 0 ? -1.0 : 1.0;
      put(r, row, sub(W, SL2{eps, 0, 0, eps}));
      if (J) {
        for (std::size_t i = 0; i < m; ++i) {
          const auto j = static_cast<Eigen::Index>(3 * w[i].generator);
          const SL2& gi = g[w[i].generator];
          for (std::size_t k = 0; k < 3; ++k) {
            const SL2 d = w[i].exponent > 0 ? gi * kBasis[k] : -(kBasis[k] * gi.inverse());
            add_col(*J, row, j + static_cast<Eigen::Index>(k), prefix[i] * d * suffix[i + 1]);
          }
        }
      }
      row += 4;
    }
    for (const auto& t : o_.trace_targets) {
      const SL2& gi = g[t.generator];
      const double s = gi.trace() < 0 ? -1.0 : 1.0;
      r(row) = std::abs(gi.trace()) - t.abs_trace;
      if (J)
        for (std::size_t k = 0; k < 3; ++k)
          (*J)(row, static_cast<Eigen::Index>(3 * t.generator + k)) = s * (gi * kBasis[k]).trace();
      row += 1;
    }
    for (auto gen : o_.identity_targets) {
      const SL2& gi = g[gen];
      const double eps = gi.trace() < 0 ? -1.0 : 1.0;
      put(r, row, sub(gi, SL2{eps, 0, 0, eps}));
      if (J)
        for (std::size_t k = 0; k < 3; ++k)
          add_col(*J, row, static_cast<Eigen::Index>(3 * gen + k), gi * kBasis[k]);
      row += 4;
    }
  }

  // Split of the squared residual into relator and penalty parts.
  std::pair<double, double> split(const Eigen::VectorXd& r) const {
    const auto rel = static_cast<Eigen::Index>(4 * p_.relators.size());
    return {r.head(rel).squaredNorm(), r.tail(r.size() - rel).squaredNorm()};
  }

 private:
  static void put(Eigen::VectorXd& r, Eigen::Index row, const SL2& m) {
    r(row) = m.a;
    r(row + 1) = m.b;
    r(row + 2) = m.c;
    r(row + 3) = m.d;
  }
  static void add_col(Eigen::MatrixXd& J, Eigen::Index row, Eigen::Index col, const SL2& m) {
    J(row, col) += m.a;
    J(row + 1, col) += m.b;
    J(row + 2, col) += m.c;
    J(row + 3, col) += m.d;
  }

  const Presentation& p_;
  const SolveOptions& o_;
  std::size_t rows_;
};

std::vector<SL2> random_start(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  std::normal_distribution<double> normal(0, 1);
  std::vector<SL2> g;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha = angle(rng);
    const double x = normal(rng), y = normal(rng);
    g.push_back(psl2::exp_xi1(alpha) * psl2::exp_traceless(x, y, y));
  }
  return g;
}

using Line = std::array<std::complex<double>, 2>;

std::vector<Line> eigenlines(const SL2& m) {
  using C = std::complex<double>;
  const double tr = m.trace();
  const C sq = std::sqrt(C(tr * tr - 4, 0));
  std::vector<Line> out;
  for (const C lam : {(tr + sq) / 2.0, (tr - sq) / 2.0}) {
    const Line v1{C(m.b), lam - m.a};
    const Line v2{lam - m.d, C(m.c)};
    const double n1 = std::sqrt(std::norm(v1[0]) + std::norm(v1[1]));
    const double n2 = std::sqrt(std::norm(v2[0]) + std::norm(v2[1]));
    Line v = n1 >= n2 ? v1 : v2;
    const double n = std::max(n1, n2);
    if (n < 1e-300) continue;
    v[0] /= n;
    v[1] /= n;
    out.push_back(v);
  }
  return out;
}

// |v ^ w| for unit-normalized lines.
double line_gap(const Line& v, const Line& w) {
  const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  const double nw = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
  if (nw < 1e-300) return 0;
  return std::abs(v[0] * w[1] - v[1] * w[0]) / (nv * nw);
}

Line apply(const SL2& m, const Line& v) { return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]}; }

bool is_scalar(const SL2& m, double tol) { return std::sqrt(psl2::distance_to_identity2(m)) <= tol; }

SL2 commutator(const SL2& x, const SL2& y) { return x * y * x.inverse() * y.inverse(); }

double scale_of(const std::vector<SL2>& m) {
  double s = 1;
  for (const auto& g : m) s = std::max(s, frob(g));
  return s;
}

}  // namespace

std::vector<PSL2> RepAssignment::images() const {
  std::vector<PSL2> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.emplace_back(m);
  return out;
}

SL2 evaluate(const Word& w, const std::vector<SL2>& matrices) {
  SL2 out = SL2::identity();
  for (const auto& l : w) {
    if (l.generator >= matrices.size())
      throw Error(Errc::UnassignedGenerator, "generator " + std::to_string(l.generator + 1) + " has no image");
    out = out * letter_matrix(l, matrices);
  }
  return out;
}

double residual(const Presentation& p, const std::vector<SL2>& matrices) {
  if (matrices.size() < p.generators.size())
    throw Error(Errc::UnassignedGenerator, "assignment covers " + std::to_string(matrices.size()) + " of " +
                                               std::to_string(p.generators.size()) + " generators");
  double sum = 0;
  for (const auto& r : p.relators) sum += psl2::distance_to_identity2(evaluate(r, matrices));
  return sum;
}

std::vector<double> trace_coordinates(const std::vector<SL2>& g) {
  std::vector<double> t;
  const std::size_t n = g.size();
  for (const auto& m : g) t.push_back(std::abs(m.trace()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) t.push_back(std::abs((g[i] * g[j]).trace()));
  if (n >= 3) t.push_back(std::abs((g[0] * g[1] * g[2]).trace()));
  std::sort(t.begin(), t.end());
  return t;
}

double trace_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

RepAssignment minimize(const Presentation& p, std::vector<SL2> g, const SolveOptions& o, double* penalty_out) {
  const Objective obj(p, o);
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  obj.eval(g, r, &J);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  const auto nc = static_cast<Eigen::Index>(obj.cols());
  for (int it = 0; it < o.max_iterations && cost > 1e-28 && nc > 0; ++it) {
    const Eigen::MatrixXd A = J.transpose() * J;
    const Eigen::VectorXd grad = J.transpose() * r;
    bool accepted = false;
    for (int tries = 0; tries < 12 && !accepted; ++tries) {
      Eigen::MatrixXd damped = A;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      std::vector<SL2> trial = g;
      bool finite = step.allFinite();
      for (std::size_t j = 0; j < g.size() && finite; ++j) {
        const auto b = static_cast<Eigen::Index>(3 * j);
        const double u1 = step(b), u2 = step(b + 1), u3 = step(b + 2);
        const SL2 m = g[j] * psl2::exp_traceless(u1, u2 - u3, u2 + u3);
        const double det = m.det();
        if (!(det > 0) || !std::isfinite(det) || frob(m) > 1e8) finite = false;
        else trial[j] = SL2::make(m.a, m.b, m.c, m.d);
      }
      double ct = std::numeric_limits<double>::infinity();
      if (finite) {
        Eigen::VectorXd rt;
        obj.eval(trial, rt, nullptr);
        ct = rt.squaredNorm();
      }
      if (std::isfinite(ct) && ct < cost) {
        g = std::move(trial);
        cost = ct;
        lambda = std::max(lambda / 3, 1e-15);
        accepted = true;
      } else {
        lambda *= 4;
      }
    }
    if (!accepted) break;
    if (scale_of(g) > 1e6) break;  // escaping to infinity
    obj.eval(g, r, &J);
  }
  obj.eval(g, r, nullptr);
  RepAssignment out;
  out.matrices = std::move(g);
  out.residual = residual(p, out.matrices);
  if (penalty_out) *penalty_out = obj.split(r).second;
  return out;
}

std::vector<RepAssignment> solve(const Presentation& p, const SolveOptions& o) {
  p.validate();
  if (o.restarts < 1) throw Error(Errc::InputError, "restarts must be >= 1");
  if (!(o.tol > 0)) throw Error(Errc::InputError, "tol must be positive");
  const auto n = static_cast<std::size_t>(o.restarts);
  std::vector<std::optional<RepAssignment>> found(n);

  auto run = [&](std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(o.salt), static_cast<std::uint32_t>(o.salt >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    double penalty = 0;
    RepAssignment rep = minimize(p, random_start(p.generators.size(), rng), o, &penalty);
    if (rep.residual < o.tol && penalty < o.tol) found[index] = std::move(rep);
  };

  const unsigned workers = thread_count(o.threads, o.restarts);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) run(i);
      });
    for (auto& t : pool) t.join();
  }

  struct Keyed {
    std::vector<double> key;
    RepAssignment rep;
  };
  std::vector<Keyed> all;
  for (auto& f : found)
    if (f) all.push_back({trace_coordinates(f->matrices), std::move(*f)});
  std::stable_sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.rep.residual < b.rep.residual;
  });
  std::vector<Keyed> kept;
  for (auto& k : all) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Keyed& q) {
      return trace_distance(q.key, k.key) < o.dedup_threshold;
    });
    if (!dup) kept.push_back(std::move(k));
  }
  std::vector<RepAssignment> out;
  out.reserve(kept.size());
  for (auto& k : kept) out.push_back(std::move(k.rep));
  return out;
}

std::vector<RepAssignment> solve(const Presentation& p, int restarts, double tol, std::uint64_t seed) {
  SolveOptions o;
  o.restarts = restarts;
  o.tol = tol;
  o.seed = seed;
  return solve(p, o);
}

bool is_irreducible(const std::vector<SL2>& g, double tol) {
  const auto first = std::find_if(g.begin(), g.end(), [&](const SL2& m) { return !is_scalar(m, tol); });
  if (first == g.end()) return false;
  for (const auto& v : eigenlines(*first)) {
    const bool common = std::all_of(g.begin(), g.end(), [&](const SL2& m) { return line_gap(v, apply(m, v)) <= tol; });
    if (common) return false;
  }
  return true;
}

bool is_abelian(const std::vector<SL2>& g, double tol) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!is_scalar(commutator(g[i], g[j]), tol)) return false;
  return true;
}

bool is_metabelian(const std::vector<SL2>& g, double tol) {
  std::vector<SL2> comms;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const SL2 c = commutator(g[i], g[j]);
      if (!is_scalar(c, tol)) comms.push_back(c);
    }
  if (comms.empty()) return true;
  const double s = scale_of(comms);
  for (std::size_t i = 0; i < comms.size(); ++i)
    for (std::size_t j = i + 1; j < comms.size(); ++j)
      if (frob(sub(comms[i] * comms[j], comms[j] * comms[i])) > tol * s * s) return false;
  // Common fixed points of the commutators in CP^1 must be permuted by
  // every generator, so all conjugates of commutators commute as well.
  std::vector<Line> fixed;
  for (const auto& v : eigenlines(comms.front())) {
    const bool common =
        std::all_of(comms.begin(), comms.end(), [&](const SL2& c) { return line_gap(v, apply(c, v)) <= tol; });
    const bool fresh = std::none_of(fixed.begin(), fixed.end(), [&](const Line& w) { return line_gap(v, w) <= tol; });
    if (common && fresh) fixed.push_back(v);
  }
  if (fixed.empty()) return false;
  for (const auto& m : g)
    for (const auto& v : fixed) {
      const Line w = apply(m, v);
      if (std::none_of(fixed.begin(), fixed.end(), [&](const Line& f) { return line_gap(f, w) <= tol; }))
        return false;
    }
  return true;
}

BrieskornData BrieskornData::make(long p, long q, long r) {
  if (p < 2 || q < 2 || r < 2) throw Error(Errc::InputError, "Brieskorn exponents must be >= 2");
  if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
    throw Error(Errc::NotCoprime, "Brieskorn exponents must be pairwise coprime");
  BrieskornData d;
  d.p = {p, q, r};
  const long prod = p * q * r;
  long sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const long pi = d.p[i];
    const long other = (prod / pi) % pi;
    long inv = 1;
    while ((other * inv) % pi != 1) ++inv;
    d.b[i] = inv;
    sum += inv * (prod / pi);
  }
  d.b0 = (1 - sum) / prod;
  return d;
}

Presentation brieskorn_presentation(const BrieskornData& d) {
  Presentation p;
  p.generators = {"x1", "x2", "x3", "h"};
  const std::size_t h = 3;
  for (std::size_t i = 0; i < 3; ++i) p.relators.push_back(commutator(power(h, 1), power(i, 1)));
  for (std::size_t i = 0; i < 3; ++i) p.relators.push_back(concat(power(i, d.p[i]), power(h, d.b[i])));
  p.relators.push_back(concat(Word{{0, 1}, {1, 1}, {2, 1}}, power(h, -d.b0)));
  return p;
}

std::vector<BrieskornClass> brieskorn_enumerate(const BrieskornData& d, int restarts, double tol,
                                                std::uint64_t seed) {
  const Presentation pres = brieskorn_presentation(d);
  std::vector<BrieskornClass> out;
  {
    BrieskornClass trivial;
    trivial.rep.matrices.assign(4, SL2::identity());
    trivial.rep.residual = residual(pres, trivial.rep.matrices);
    trivial.traces = trace_coordinates(trivial.rep.matrices);
    trivial.trivial = true;
    out.push_back(std::move(trivial));
  }
  std::uint64_t salt = 0;
  for (long l1 = 1; l1 <= d.p[0] / 2; ++l1)
    for (long l2 = 1; l2 <= d.p[1] / 2; ++l2)
      for (long l3 = 1; l3 <= d.p[2] / 2; ++l3) {
        SolveOptions o;
        o.restarts = restarts;
        o.tol = tol;
        o.seed = seed;
        o.salt = ++salt;
        const std::array<long, 3> l{l1, l2, l3};
        for (std::size_t i = 0; i < 3; ++i)
          o.trace_targets.push_back({i, 2 * std::abs(std::cos(kPi * static_cast<double>(l[i]) /
                                                              static_cast<double>(d.p[i])))});
        o.identity_targets = {3};
        for (auto& rep : solve(pres, o)) {
          BrieskornClass c;
          c.traces = trace_coordinates(rep.matrices);
          const bool dup = std::any_of(out.begin(), out.end(), [&](const BrieskornClass& q) {
            return trace_distance(q.traces, c.traces) < o.dedup_threshold;
          });
          if (dup) continue;
          // Rotation label from the canonical lift: F^p(0) = l pi.
          std::array<long, 3> rot{}, mirror{};
          for (std::size_t i = 0; i < 3; ++i) {
            const psl2::CircleLift lift{PSL2(rep.matrices[i]), 0};
            double x = 0;
            for (long k = 0; k < d.p[i]; ++k) x = lift(x);
            rot[i] = std::lround(x / kPi) % d.p[i];
            mirror[i] = (d.p[i] - rot[i]) % d.p[i];
          }
          c.rotation = std::min(rot, mirror);
          c.irreducible = is_irreducible(rep.matrices);
          c.rep = std::move(rep);
          out.push_back(std::move(c));
        }
      }
  std::stable_sort(out.begin() + 1, out.end(),
                   [](const BrieskornClass& a, const BrieskornClass& b) { return a.traces < b.traces; });
  return out;
}

RepAssignment connected_sum_family(const Presentation& p1, const RepAssignment& rep1, const Presentation& p2,
                                   const RepAssignment& rep2, const SL2& a) {
  if (rep1.matrices.size() < p1.generators.size() || rep2.matrices.size() < p2.generators.size())
    throw Error(Errc::UnassignedGenerator, "connected sum needs full assignments");
  RepAssignment out;
  out.matrices.assign(rep1.matrices.begin(), rep1.matrices.begin() + static_cast<long>(p1.generators.size()));
  const SL2 ainv = a.inverse();
  for (std::size_t i = 0; i < p2.generators.size(); ++i) {
    const SL2 m = a * rep2.matrices[i] * ainv;
    out.matrices.push_back(SL2::make(m.a, m.b, m.c, m.d));
  }
  out.residual = residual(p1, rep1.matrices) + residual(p2, rep2.matrices);
  return out;
}

Presentation surface_presentation(int genus) {
  if (genus < 1) throw Error(Errc::GenusZero, "surface genus must be >= 1");
  Presentation p;
  Word rel;
  for (int i = 1; i <= genus; ++i) {
    p.generators.push_back("a" + std::to_string(i));
    p.generators.push_back("b" + std::to_string(i));
    const auto a = static_cast<std::size_t>(2 * (i - 1));
    rel = concat(rel, commutator(power(a, 1), power(a + 1, 1)));
  }
  p.relators.push_back(rel);
  return p;
}

Presentation surface_times_circle_presentation(int genus) {
  Presentation s = surface_presentation(genus);
  Presentation p;
  p.generators = s.generators;
  p.generators.push_back("z");
  const std::size_t z = s.generators.size();
  for (std::size_t i = 0; i < s.generators.size(); ++i) p.relators.push_back(commutator(power(z, 1), power(i, 1)));
  p.relators.push_back(s.relators.front());
  return p;
}

}  // namespace blowup::repvar
