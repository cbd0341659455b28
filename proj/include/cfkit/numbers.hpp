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

#ifndef CFKIT_NUMBERS_HPP
#define CFKIT_NUMBERS_HPP

#include <gmpxx.h>

#include <string>

#include "cfkit/errors.hpp"

namespace cfkit {

// Exact arbitrary-precision integers and rationals. GMP keeps both canonical:
// mpz has no leading zero limbs, mpq keeps den > 0 and gcd(|num|, den) = 1
// once canonicalized. Values are immutable by convention: every cfkit
// operation takes const refs and returns fresh values.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den as a canonical rational. den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// n / d where d is known to divide n exactly.
inline Int exact_div_int(const Int& n, const Int& d) {
  if (!divides(d, n)) throw InternalError("exact_div_int: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Bits in |n|; 1 for n = 0 (the string "0").
inline std::size_t bit_length(const Int& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline std::string to_decimal(const Int& n) { return n.get_str(); }

/// Canonical rational string: plain decimal when den = 1, "num/den" otherwise.
inline std::string to_decimal(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cfkit

#endif  // CFKIT_NUMBERS_HPP
