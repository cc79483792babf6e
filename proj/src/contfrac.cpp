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

#include "mdt/contfrac.hpp"

#include <algorithm>
#include <string>

namespace mdt {

RealSource log_ratio_source(long num, long den) {
  return [num, den](Precision p) { return log_of(num, p) / log_of(den, p); };
}

RealSource sqrt_source(long n) {
  return [n](Precision p) { return sqrt_of(n, p); };
}

RealSource golden_ratio_source() {
  return [](Precision p) { return (Interval(1L, p) + sqrt_of(5, p)) / 2; };
}

namespace {

bool stop_reached(const ExpansionStop& stop, std::size_t produced, const mpz_class& q) {
  if (stop.count && produced >= *stop.count) return true;
  if (stop.denominator && q >= *stop.denominator) return true;
  return false;
}

}  // namespace

std::vector<Convergent> convergents(const Interval& alpha, const ExpansionStop& stop) {
  if (!stop.count && !stop.denominator) throw DomainError("expansion needs a stop rule");
  std::vector<Convergent> out;
  if (stop.count && *stop.count == 0) return out;
  const Precision prec = alpha.precision();
  Interval t = alpha;
  mpz_class p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  for (std::size_t i = 0;; ++i) {
    auto a = unique_floor(t);
    if (!a) {
      throw PrecisionError("partial quotient " + std::to_string(i) + " undecided at " +
                           std::to_string(prec) + " bits");
    }
    mpz_class p = *a * p_prev + p_prev2;
    mpz_class q = *a * q_prev + q_prev2;
    Convergent c;
    c.p = p;
    c.q = q;
    c.index = i;
    c.partial_quotient = *a;
    c.error = abs(alpha - Interval(mpq_class(p, q), prec));
    out.push_back(c);
    if (stop_reached(stop, out.size(), q)) return out;
    Interval frac = t - Interval(*a, prec);
    if (mpfr_sgn(frac.lo()) <= 0) {
      if (t.is_point() && mpfr_zero_p(frac.hi())) {
        throw DomainError("continued fraction terminates: alpha is rational");
      }
      throw PrecisionError("tail enclosure reaches an integer at index " + std::to_string(i));
    }
    t = Interval(1L, prec) / frac;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
}

std::vector<Convergent> convergents(const RealSource& alpha, const ExpansionStop& stop,
                                    Precision start, Precision max_prec) {
  for (Precision p = start; p <= max_prec; p *= 2) {
    try {
      return convergents(alpha(p), stop);
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("continued fraction needs more than " + std::to_string(max_prec) +
                       " bits");
}

LegendreResult legendre_reduce(const RealSource& alpha, const mpz_class& denom_bound,
                               const std::function<Interval(long, Precision)>& rhs,
                               long x_min, long x_limit, Precision start,
                               Precision max_prec) {
  ExpansionStop stop;
  stop.denominator = denom_bound;
  auto convs = convergents(alpha, stop, start, max_prec);
  LegendreResult res{convs.back(), convs.back().error.lower_point(), 0};
  if (mpfr_sgn(res.error_lower.lo()) <= 0) {
    throw PrecisionError("approximation error not bounded away from zero");
  }
  const mpq_class err = res.error_lower.lo_q();
  auto excluded = [&](long x) {
    Tribool t = decide(
        [&](Precision p) { return le(rhs(x, p), Interval(err, p)); }, start, max_prec);
    return proven(t);
  };
  if (excluded(x_min)) {
    res.x_max = x_min - 1;
    return res;
  }
  long lo = x_min, hi = x_min + 1;
  while (!excluded(hi)) {
    lo = hi;
    if (hi >= x_limit) {
      throw GiveUpError("reduction never excludes x up to " + std::to_string(x_limit));
    }
    hi = std::min(x_limit, hi * 2);
  }
  // Invariant: lo not excluded, hi excluded.
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (excluded(mid)) hi = mid;
    else lo = mid;
  }
  res.x_max = lo;
  return res;
}

}  // namespace mdt
