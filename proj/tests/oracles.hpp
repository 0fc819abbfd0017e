#pragma once
// Slow, independent reference computations used to validate the library.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "blowup/exact_algebra.hpp"
#include "blowup/link_model.hpp"

namespace oracle {

using blowup::algebra::Integer;
using blowup::algebra::IntMatrix;
using blowup::algebra::LaurentMatrix;
using blowup::algebra::LaurentPoly;

// Laplace expansion along the first row.
template <class T>
T cofactor_det(const blowup::algebra::Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    blowup::algebra::Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, c++) = m(i, k);
      }
    T term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// gcd of all k x k minors.
inline Integer minors_gcd(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rs, cs;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
    if (rs.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = from; r < m.rows(); ++r) {
      rs.push_back(r);
      pick_rows(r + 1);
      rs.pop_back();
    }
  };
  pick_cols = [&](std::size_t from) {
    if (cs.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      Integer d = cofactor_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = from; c < m.cols(); ++c) {
      cs.push_back(c);
      pick_cols(c + 1);
      cs.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

// Invariant factors d_k = D_k / D_{k-1}, D_k = gcd of k x k minors; zeros
// once the rank is exhausted.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    Integer dk = minors_gcd(m, k);
    if (dk == 0) {
      out.resize(r, 0);
      return out;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// (rank, torsion) of the group with relation rows m.
inline std::pair<std::size_t, std::vector<Integer>> cokernel(const IntMatrix& m) {
  std::size_t nonzero = 0;
  std::vector<Integer> torsion;
  for (const auto& d : invariant_factors(m)) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) torsion.push_back(d);
  }
  return {m.cols() - nonzero, torsion};
}

// Reduced Burau representation; Delta = det(I - B) (1 - t) / (1 - t^n).
inline LaurentPoly burau_alexander(const blowup::link::BraidWord& b) {
  const std::size_t n = static_cast<std::size_t>(b.strands);
  const std::size_t d = n - 1;
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  LaurentMatrix B(d, d);
  for (std::size_t i = 0; i < d; ++i) B(i, i) = 1;
  for (int l : b.word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);  // row of the generator
    LaurentMatrix g(d, d);
    for (std::size_t k = 0; k < d; ++k) g(k, k) = 1;
    if (l > 0) {
      if (i >= 1) g(i, i - 1) = t;
      g(i, i) = -t;
      if (i + 1 < d) g(i, i + 1) = 1;
    } else {
      if (i >= 1) g(i, i - 1) = 1;
      g(i, i) = -tinv;
      if (i + 1 < d) g(i, i + 1) = tinv;
    }
    LaurentMatrix prod(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < d; ++k) prod(r, c) += B(r, k) * g(k, c);
    B = prod;
  }
  LaurentMatrix ImB(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) ImB(r, c) = (r == c ? LaurentPoly(1) : LaurentPoly()) - B(r, c);
  LaurentPoly num = cofactor_det(ImB) * (LaurentPoly(1) - t);
  LaurentPoly den = LaurentPoly(1) - LaurentPoly::monomial(1, static_cast<int>(n));
  return blowup::algebra::unit_normalize(blowup::algebra::divide_exact(num, den));
}

// Cycle count of the permutation induced by the braid.
inline std::size_t permutation_cycles(const blowup::link::BraidWord& b) {
  std::vector<int> where(static_cast<std::size_t>(b.strands));
  std::iota(where.begin(), where.end(), 0);  // where[s] = current position of strand s
  for (int l : b.word) {
    const int k = std::abs(l) - 1;
    for (auto& w : where) {
      if (w == k)
        w = k + 1;
      else if (w == k + 1)
        w = k;
    }
  }
  std::vector<bool> seen(where.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < where.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t p = s; !seen[p]; p = static_cast<std::size_t>(where[p])) seen[p] = true;
  }
  return cycles;
}

// Components of a PD code by connecting the strand ends i~k and j~l.
inline std::size_t pd_component_count(const blowup::link::PDCode& code) {
  std::map<long, long> parent;
  std::function<long(long)> find = [&](long x) {
    auto it = parent.find(x);
    if (it == parent.end()) return parent[x] = x;
    return it->second == x ? x : it->second = find(it->second);
  };
  for (const auto& x : code) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  std::size_t roots = 0;
  for (const auto& [k, v] : parent)
    if (find(k) == k) ++roots;
  return code.empty() ? 1 : roots;
}

}  // namespace oracle
