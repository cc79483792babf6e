// Copyright 2026 The mdtriples Authors
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

#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "mdt/errors.hpp"

namespace mdt {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMaxPrecision = 4096;

enum class Tribool { kFalse, kTrue, kUnknown };

inline bool proven(Tribool t) { return t == Tribool::kTrue; }
inline bool refuted(Tribool t) { return t == Tribool::kFalse; }
Tribool operator!(Tribool t);
Tribool operator&&(Tribool a, Tribool b);
Tribool operator||(Tribool a, Tribool b);
const char* to_string(Tribool t);

// Closed real interval [lo, hi] with MPFR endpoints rounded outward.
// Every operation returns an enclosure of the exact result for all points
// of its operands. The precision of a result is the maximum of the
// operand precisions.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(long value, Precision prec);
  Interval(const mpz_class& value, Precision prec);
  Interval(const mpq_class& value, Precision prec);
  ~Interval();

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;

  // Parses a decimal literal such as "2.72e25" or "-0.0471" exactly.
  static Interval from_decimal(std::string_view text, Precision prec);
  // Enclosure of the exact ratio num/den.
  static Interval ratio(long num, long den, Precision prec);
  // Both endpoints given explicitly; requires lo <= hi.
  static Interval from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                 Precision prec);
  static Interval hull(const Interval& a, const Interval& b);

  Precision precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  // Exact rational values of the endpoints.
  mpq_class lo_q() const;
  mpq_class hi_q() const;
  double lo_d() const;
  double hi_d() const;
  double mid_d() const;

  // Exact point intervals at the lower or upper endpoint.
  Interval lower_point() const;
  Interval upper_point() const;

  bool contains(const mpq_class& x) const;
  bool contains(const Interval& other) const;
  bool is_point() const;
  bool contains_zero() const;
  // Upper bound on hi - lo.
  mpq_class width() const;
  // Same enclosure re-rounded outward to a new precision.
  Interval with_precision(Precision prec) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a);

  friend Interval operator+(Interval a, long b);
  friend Interval operator-(Interval a, long b);
  friend Interval operator*(Interval a, long b);
  friend Interval operator/(Interval a, long b);
  friend Interval operator+(long a, const Interval& b);
  friend Interval operator-(long a, const Interval& b);
  friend Interval operator*(long a, const Interval& b);
  friend Interval operator/(long a, const Interval& b);

  // Scientific notation with the requested significant digits, showing
  // the lower and upper endpoint.
  std::string str(int digits = 8) const;

 private:
  Precision prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& x);

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval pow(const Interval& base, long exponent);
// base^exponent for base > 0 and real exponent.
Interval pow(const Interval& base, const Interval& exponent);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

// Constants at the stated precision.
Interval log_of(const mpz_class& n, Precision prec);
Interval log_of(long n, Precision prec);
Interval sqrt_of(long n, Precision prec);

Tribool lt(const Interval& a, const Interval& b);
Tribool le(const Interval& a, const Interval& b);
Tribool gt(const Interval& a, const Interval& b);
Tribool ge(const Interval& a, const Interval& b);

// floor(x) when floor(lo) == floor(hi).
std::optional<mpz_class> unique_floor(const Interval& x);
// Nearest integer to x when the enclosure is narrower than 1/4 and does
// not contain a half-integer.
std::optional<mpz_class> unique_round(const Interval& x);
// Smallest integer >= every point of x.
mpz_class ceil_hi(const Interval& x);
// Largest integer <= every point of x.
mpz_class floor_lo(const Interval& x);

// Smallest number >= x (x > 0) with at most `digits` significant decimal
// digits, e.g. 2.7134e25 -> 2.72e25 for digits = 3.
mpq_class round_up_significant(const mpq_class& x, int digits);

// Repeats `attempt(prec)` at doubling precision until it yields a value.
// Throws PrecisionError past `max_prec`.
template <class F>
auto with_escalation(F&& attempt, Precision start = kDefaultPrecision,
                     Precision max_prec = kMaxPrecision)
    -> typename decltype(attempt(start))::value_type {
  for (Precision p = start; p <= max_prec; p *= 2) {
    if (auto r = attempt(p)) return *std::move(r);
  }
  throw PrecisionError("undecided at " + std::to_string(max_prec) +
                       " bits");
}

// Evaluates a comparison at doubling precision until it is decided.
template <class F>
Tribool decide(F&& cmp, Precision start = kDefaultPrecision,
               Precision max_prec = kMaxPrecision) {
  Tribool t = Tribool::kUnknown;
  for (Precision p = start; p <= max_prec; p *= 2) {
    t = cmp(p);
    if (t != Tribool::kUnknown) break;
  }
  return t;
}

}  // namespace mdt
