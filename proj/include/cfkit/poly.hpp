// Copyright 2026 The cfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CFKIT_POLY_HPP
#define CFKIT_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cfkit/errors.hpp"
#include "cfkit/numbers.hpp"

namespace cfkit {

/// Dense univariate polynomial with exact coefficients, stored ascending.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero. Degrees in this library stay small (bounded by the
/// square of a recurrence order), so dense storage and schoolbook products
/// are the right tradeoff.
template <typename C>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<C> ascending) : c_(ascending) { trim(); }
  explicit Poly(std::vector<C> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(C value) { return Poly(std::vector<C>{std::move(value)}); }
  /// x^e with unit coefficient.
  static Poly monomial(std::size_t e, C coeff = C(1)) {
    std::vector<C> v(e + 1, C(0));
    v[e] = std::move(coeff);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }

  /// Coefficient of x^i (zero beyond the stored degree).
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const { return c_.back(); }

  bool operator==(const Poly& other) const { return c_ == other.c_; }
  bool operator!=(const Poly& other) const { return c_ != other.c_; }

  Poly operator-() const {
    std::vector<C> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }

  friend Poly operator*(const C& s, const Poly& p) {
    if (sgn(s) == 0) return Poly();
    std::vector<C> v(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<C> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = C(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
  }

  /// Horner evaluation; R must absorb C * R products (Int at Int, Rat at Int
  /// or Rat, ...).
  template <typename R>
  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<C> c_;  // ascending, trimmed
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

/// Quotient and remainder over the rationals, deg(rem) < deg(divisor).
/// Throws on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

/// Integer-polynomial division for the case where the division is known to be
/// exact in Z[x] (monic divisors, cofactor extraction). Throws InternalError
/// if a division step or the final remainder breaks that promise.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

/// Content (gcd of coefficients, positive) and primitive part.
/// content * primitive == p. Requires p nonzero.
std::pair<Int, IntPoly> content_primitive(const IntPoly& p);

/// Primitive gcd over Q, normalized to a primitive integer polynomial with
/// positive leading coefficient. Requires at least one nonzero input.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// p / gcd(p, p'): same roots, all multiplicities one; primitive with
/// positive leading coefficient. Requires p nonzero.
IntPoly squarefree_part(const IntPoly& p);

/// Squarefree decomposition from the gcd-with-derivative chain:
/// p = content * prod factor^multiplicity with the factors primitive,
/// squarefree, pairwise coprime, positive leading coefficients.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p);

/// Resultant of two nonzero integer polynomials, with the sign convention of
/// the Sylvester determinant whose first deg(q) rows carry p. Computed by
/// fraction-free Bareiss elimination, so no rationals appear.
Int resultant(const IntPoly& p, const IntPoly& q);

/// N-th cyclotomic polynomial, built by dividing x^N - 1 by the cyclotomics of
/// the proper divisors of N. Memoized internally; N >= 1.
IntPoly cyclotomic(unsigned long n);

namespace detail {

// Fraction-free determinant over an integral domain with exact division.
// Used with T = Int (scalar resultants) and T = IntPoly (the bivariate
// resultant behind ratio polynomials). Bareiss keeps every intermediate entry
// a minor of the input matrix, so the divisions are exact by construction.
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m);

template <typename T>
bool ring_is_zero(const T& v);
template <typename T>
T ring_exact_div(const T& num, const T& den);

template <>
inline bool ring_is_zero<Int>(const Int& v) {
  return sgn(v) == 0;
}
template <>
inline bool ring_is_zero<IntPoly>(const IntPoly& v) {
  return v.is_zero();
}
template <>
inline Int ring_exact_div<Int>(const Int& num, const Int& den) {
  return exact_div_int(num, den);
}
template <>
inline IntPoly ring_exact_div<IntPoly>(const IntPoly& num, const IntPoly& den) {
  return exact_div(num, den);
}

template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && ring_is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return T(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ring_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return sign < 0 ? T(0) - det : det;
}

// Sylvester matrix of p and q with the p block first. Entries belong to the
// coefficient domain of the polynomials' polynomials when used bivariately.
template <typename T>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<T>& p, const std::vector<T>& q) {
  const std::size_t dp = p.size() - 1;
  const std::size_t dq = q.size() - 1;
  const std::size_t n = dp + dq;
  std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t t = 0; t <= dp; ++t) m[r][r + t] = p[dp - t];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t t = 0; t <= dq; ++t) m[dq + r][r + t] = q[dq - t];
  return m;
}

}  // namespace detail

}  // namespace cfkit

#endif  // CFKIT_POLY_HPP
