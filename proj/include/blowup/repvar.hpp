#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/presentation.hpp"
#include "blowup/psl2r.hpp"

namespace blowup::repvar {

using psl2::PSL2;
using psl2::SL2;

// One SL(2,R) lift per generator; only the PSL(2,R) image is meaningful.
struct RepAssignment {
  std::vector<SL2> matrices;
  double residual = 0;

  std::vector<PSL2> images() const;
};

// sum over relators of min over signs of ||rho(r) -+ I||_F^2.
// Throws Errc::UnassignedGenerator when matrices are missing.
double residual(const Presentation& p, const std::vector<SL2>& matrices);
SL2 evaluate(const Word& w, const std::vector<SL2>& matrices);

// Sorted |trace| of g_i, g_i g_j (i < j) and g_1 g_2 g_3.
std::vector<double> trace_coordinates(const std::vector<SL2>& matrices);
double trace_distance(const std::vector<double>& a, const std::vector<double>& b);

struct TraceTarget {
  std::size_t generator;
  double abs_trace;
};

struct SolveOptions {
  int restarts = 32;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::uint64_t salt = 0;  // separates independent searches sharing a seed
  int max_iterations = 300;
  double dedup_threshold = 1e-6;
  std::vector<TraceTarget> trace_targets;
  std::vector<std::size_t> identity_targets;  // generators pinned to +-I
  unsigned threads = 0;                       // 0: BLOWUPGATE_THREADS or hardware
};

// Damped least squares from random starting points; results with residual
// (and penalty) below tol, deduplicated by trace coordinates and sorted.
std::vector<RepAssignment> solve(const Presentation& p, const SolveOptions& options);
std::vector<RepAssignment> solve(const Presentation& p, int restarts, double tol, std::uint64_t seed);

// Single local minimization from the given start (exposed for tests).
RepAssignment minimize(const Presentation& p, std::vector<SL2> start, const SolveOptions& options,
                       double* penalty_out = nullptr);

bool is_irreducible(const std::vector<SL2>& matrices, double tol = 1e-7);
bool is_abelian(const std::vector<SL2>& matrices, double tol = 1e-7);
bool is_metabelian(const std::vector<SL2>& matrices, double tol = 1e-7);

// Seifert invariants with p q r b0 + b1 q r + b2 p r + b3 p q = 1.
struct BrieskornData {
  std::array<long, 3> p{};
  std::array<long, 3> b{};
  long b0 = 0;

  // Throws Errc::NotCoprime, or Errc::InputError for exponents below 2.
  static BrieskornData make(long p, long q, long r);
};

// <x1,x2,x3,h | [h,xi], xi^pi h^bi, x1 x2 x3 h^-b0>.
Presentation brieskorn_presentation(const BrieskornData& d);

struct BrieskornClass {
  RepAssignment rep;
  std::array<long, 3> rotation{};  // l_i with rho(x_i) rotating lines by pi l_i / p_i
  std::vector<double> traces;
  bool trivial = false;
  bool irreducible = false;
};

// Census over rotation classes 1 <= l_i <= p_i / 2 with h pinned to +-I;
// restarts are per class.  Always contains the trivial class.
std::vector<BrieskornClass> brieskorn_enumerate(const BrieskornData& d, int restarts, double tol,
                                                std::uint64_t seed);

// (rho1, A rho2 A^-1) on the free product p1 * p2.
RepAssignment connected_sum_family(const Presentation& p1, const RepAssignment& rep1, const Presentation& p2,
                                   const RepAssignment& rep2, const SL2& a);

// <a1, b1, ..., ag, bg | [a1,b1]...[ag,bg]>.
Presentation surface_presentation(int genus);
// Surface generators, then the central z: relators [z, g_i] and the surface relator.
Presentation surface_times_circle_presentation(int genus);

}  // namespace blowup::repvar
