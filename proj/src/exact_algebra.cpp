#include "blowup/exact_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace blowup::algebra {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c, 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::InvalidMatrix, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::SizeMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::SizeMismatch, "matrix sum shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::SizeMismatch, "matrix difference shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw Error(Errc::NonSquare, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Row/column operations applied simultaneously to D and the matching
// transformation matrix keep U * m * V == D invariant.
struct SmithState {
  IntMatrix U, D, V;

  void row_axpy(std::size_t target, std::size_t source, const Integer& q) {
    // row_target -= q * row_source
    for (std::size_t j = 0; j < D.cols(); ++j) D(target, j) -= q * D(source, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(target, j) -= q * U(source, j);
  }
  void col_axpy(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, target) -= q * D(i, source);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, target) -= q * V(i, source);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithState s{identity_matrix(m.rows()), m, identity_matrix(m.cols())};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Minimal |entry| pivot over the trailing block.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s.D(i, j) == 0) continue;
          Integer a = abs(s.D(i, j));
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        if (s.D(t, t) < 0) s.negate_row(t);
        goto done;
      }
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.D(i, t) == 0) continue;
        Integer q = s.D(i, t) / s.D(t, t);
        if (q != 0) s.row_axpy(i, t, q);
        if (s.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.D(t, j) == 0) continue;
        Integer q = s.D(t, j) / s.D(t, t);
        if (q != 0) s.col_axpy(j, t, q);
        if (s.D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s.D(i, j) % s.D(t, t) != 0) {
            s.row_axpy(t, i, -1);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (s.D(t, t) < 0) s.negate_row(t);
  }
done:
  return SmithForm{std::move(s.U), std::move(s.D), std::move(s.V)};
}

Integer AbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const Integer& d = snf.D(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.rank = m.cols() - nonzero;
  return g;
}

// ---------------------------------------------------------------------------
// Laurent polynomials

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p(coeff);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int min_exp, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.low_ = min_exp;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

Integer LaurentPoly::coeff(int exponent) const {
  if (exponent < low_ || exponent > max_exp() || coeffs_.empty()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && abs(coeffs_.front()) == 1;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -max_exp();
  return p;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exp(), o.max_exp());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = max_exp(); e >= low_; --e) {
    Integer c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Integer a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto& bc = b.coeffs();
  std::vector<Integer> rem = a.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) throw std::domain_error("inexact Laurent division");
  const std::size_t dq = rem.size() - bc.size();
  std::vector<Integer> q(dq + 1, 0);
  for (std::size_t k = dq + 1; k-- > 0;) {
    const Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t()))
      throw std::domain_error("inexact Laurent division");
    Integer qk = top / bc.back();
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= qk * bc[j];
    q[k] = qk;
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact Laurent division");
  return LaurentPoly::from_coeffs(a.min_exp() - b.min_exp(), std::move(q));
}

LaurentPoly laurent_det(const LaurentMatrix& input) {
  if (!input.is_square()) throw Error(Errc::NonSquare, "determinant of non-square Laurent matrix");
  const std::size_t n = input.rows();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = input;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Rational eval_at(const LaurentPoly& p, const Integer& x) {
  if (x == 0) throw Error(Errc::ZeroEvaluationPoint, "Laurent polynomial evaluated at 0");
  Rational sum = 0;
  if (p.is_zero()) return sum;
  // Horner on the polynomial part, then rescale by x^min_exp.
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * Rational(x) + Rational(c[i]);
  const int shift = p.min_exp();
  Rational scale = 1;
  for (int k = 0; k < std::abs(shift); ++k) scale *= Rational(x);
  if (shift >= 0)
    sum = acc * scale;
  else
    sum = acc / scale;
  sum.canonicalize();
  return sum;
}

LaurentPoly unit_normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exp());
  if (q.coeffs().back() < 0) q = -q;
  return q;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return unit_normalize(a) == unit_normalize(b);
}

namespace {

using RatPoly = std::vector<Rational>;  // ascending, trailing entry nonzero

void rat_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    rat_trim(a);
  }
  return a;
}

RatPoly to_rat(const LaurentPoly& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

LaurentPoly primitive_from_rat(const RatPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  for (auto& v : ints) v /= g;
  return LaurentPoly::from_coeffs(0, std::move(ints));
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  Integer g;
  const Integer ca = a.content();
  const Integer cb = b.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  RatPoly x = to_rat(a);
  RatPoly y = to_rat(b);
  while (!y.empty()) {
    RatPoly r = rat_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return unit_normalize(primitive_from_rat(x) * LaurentPoly(g));
}

}  // namespace blowup::algebra
