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

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mdt/interval.hpp"

namespace mdt {

// A real number that can be enclosed at any requested precision.
using RealSource = std::function<Interval(Precision)>;

RealSource log_ratio_source(long num, long den);  // log(num) / log(den)
RealSource sqrt_source(long n);
RealSource golden_ratio_source();

struct Convergent {
  mpz_class p, q;
  std::size_t index = 0;
  mpz_class partial_quotient;
  Interval error;  // encloses |alpha - p/q|
};

struct ExpansionStop {
  std::optional<std::size_t> count;      // number of convergents
  std::optional<mpz_class> denominator;  // stop at the first q >= this
};

// Expansion of a fixed enclosure; throws PrecisionError when a partial
// quotient cannot be certified from `alpha`.
std::vector<Convergent> convergents(const Interval& alpha, const ExpansionStop& stop);

// Expansion with precision doubling from `start` up to `max_prec`.
std::vector<Convergent> convergents(const RealSource& alpha, const ExpansionStop& stop,
                                    Precision start = kDefaultPrecision,
                                    Precision max_prec = kMaxPrecision);

struct LegendreResult {
  Convergent convergent;  // first convergent with q >= denom_bound
  Interval error_lower;   // exact point: lower end of its error enclosure
  long x_max = 0;         // largest x not excluded
};

// For every fraction P/Q != p_k/q_k with Q <= q_k, |alpha - P/Q| exceeds
// the convergent's error. An x is excluded when rhs(x) <= that error is
// proven; rhs must be decreasing in x. Throws GiveUpError when no x in
// [x_min, x_limit] is excluded.
LegendreResult legendre_reduce(const RealSource& alpha, const mpz_class& denom_bound,
                               const std::function<Interval(long, Precision)>& rhs,
                               long x_min = 1, long x_limit = 10000000,
                               Precision start = kDefaultPrecision,
                               Precision max_prec = kMaxPrecision);

}  // namespace mdt
