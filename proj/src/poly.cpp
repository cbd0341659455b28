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

#include "cfkit/poly.hpp"

#include <map>
#include <mutex>

namespace cfkit {

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw Error("divmod: division by zero polynomial");
  std::vector<Rat> rem(num.coeffs());
  const long dd = den.degree();
  long dr = num.degree();
  if (dr < dd) return {RatPoly(), num};
  std::vector<Rat> quot(static_cast<std::size_t>(dr - dd) + 1, Rat(0));
  const Rat& lead = den.leading();
  while (dr >= dd) {
    Rat f = rem[static_cast<std::size_t>(dr)] / lead;
    quot[static_cast<std::size_t>(dr - dd)] = f;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(dr - dd + i)] -= f * den.coeff(static_cast<std::size_t>(i));
    while (dr >= 0 && sgn(rem[static_cast<std::size_t>(dr)]) == 0) --dr;
  }
  rem.resize(static_cast<std::size_t>(dr + 1));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw Error("exact_div: division by zero polynomial");
  if (num.is_zero()) return IntPoly();
  std::vector<Int> rem(num.coeffs());
  const long dd = den.degree();
  long dr = num.degree();
  if (dr < dd) throw InternalError("exact_div: degree of divisor exceeds dividend");
  std::vector<Int> quot(static_cast<std::size_t>(dr - dd) + 1, Int(0));
  const Int& lead = den.leading();
  while (dr >= dd) {
    const Int& top = rem[static_cast<std::size_t>(dr)];
    if (!divides(lead, top)) throw InternalError("exact_div: inexact division step");
    Int f = exact_div_int(top, lead);
    quot[static_cast<std::size_t>(dr - dd)] = f;
    for (long i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(dr - dd + i)] -= f * den.coeff(static_cast<std::size_t>(i));
    while (dr >= 0 && sgn(rem[static_cast<std::size_t>(dr)]) == 0) --dr;
  }
  if (dr >= 0) throw InternalError("exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

std::pair<Int, IntPoly> content_primitive(const IntPoly& p) {
  if (p.is_zero()) throw Error("content_primitive: zero polynomial");
  Int content(0);
  for (const Int& c : p.coeffs()) content = int_gcd(content, c);
  std::vector<Int> prim;
  prim.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) prim.push_back(exact_div_int(c, content));
  return {content, IntPoly(std::move(prim))};
}

namespace {

// Primitive positive-leading-coefficient normal form of a nonzero polynomial.
IntPoly normalize(const IntPoly& p) {
  IntPoly prim = content_primitive(p).second;
  return sgn(prim.leading()) < 0 ? -prim : prim;
}

// Pseudo-remainder of num by den: each elimination step scales the remainder
// by lc(den) first, so everything stays in Z[x]. The scaling power is
// irrelevant to callers, which renormalize to primitive parts anyway.
IntPoly pseudo_rem(const IntPoly& num, const IntPoly& den) {
  std::vector<Int> rem(num.coeffs());
  const long dd = den.degree();
  long dr = num.degree();
  const Int& lead = den.leading();
  while (dr >= dd) {
    Int top = rem[static_cast<std::size_t>(dr)];
    for (long i = 0; i < dr; ++i) rem[static_cast<std::size_t>(i)] *= lead;
    for (long i = 0; i < dd; ++i)
      rem[static_cast<std::size_t>(dr - dd + i)] -= top * den.coeff(static_cast<std::size_t>(i));
    rem.resize(static_cast<std::size_t>(dr));  // top term cancels exactly
    long new_dr = dr - 1;
    while (new_dr >= 0 && sgn(rem[static_cast<std::size_t>(new_dr)]) == 0) --new_dr;
    dr = new_dr;
  }
  if (dr < 0) return IntPoly();
  rem.resize(static_cast<std::size_t>(dr + 1));
  return IntPoly(std::move(rem));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error("poly_gcd: both inputs zero");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  IntPoly a = normalize(p);
  IntPoly b = normalize(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly() : normalize(r);
  }
  if (a.degree() == 0) return IntPoly::constant(Int(1));
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
  IntPoly prim = normalize(p);
  if (prim.degree() == 0) return IntPoly::constant(Int(1));
  IntPoly g = poly_gcd(prim, prim.derivative());
  return normalize(exact_div(prim, g));
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error("squarefree_decomposition: zero polynomial");
  // gcd-with-derivative chain: f_{j+1} = gcd(f_j, f_j'). With p = prod a_i^i,
  // f_j = prod a_i^(i-j), so w_j = f_j / f_{j+1} collects the factors of
  // multiplicity > j and a_i = w_{i-1} / w_i.
  std::vector<IntPoly> w;
  IntPoly f = normalize(p);
  while (f.degree() > 0) {
    IntPoly g = poly_gcd(f, f.derivative());
    w.push_back(normalize(exact_div(f, g)));
    f = std::move(g);
  }
  std::vector<std::pair<IntPoly, unsigned>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    IntPoly factor = (i + 1 < w.size()) ? exact_div(w[i], w[i + 1]) : w[i];
    if (factor.degree() > 0) out.emplace_back(normalize(factor), static_cast<unsigned>(i + 1));
  }
  return out;
}

Int resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error("resultant: zero polynomial input");
  return detail::bareiss_determinant(detail::sylvester_matrix(p.coeffs(), q.coeffs()));
}

IntPoly cyclotomic(unsigned long n) {
  if (n == 0) throw Error("cyclotomic: N must be >= 1");
  static std::map<unsigned long, IntPoly> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly result;
  if (n == 1) {
    result = IntPoly{Int(-1), Int(1)};
  } else {
    // x^n - 1 divided by the cyclotomics of all proper divisors.
    IntPoly num = IntPoly::monomial(n) - IntPoly::constant(Int(1));
    IntPoly den = IntPoly::constant(Int(1));
    for (unsigned long d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      den = den * cyclotomic(d);
      unsigned long e = n / d;
      if (e != d && e != n) den = den * cyclotomic(e);
    }
    result = exact_div(num, den);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace cfkit
