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

#include <string>
#include <variant>
#include <vector>

#include "mdt/arith.hpp"
#include "mdt/interval.hpp"

namespace mdt {

// Logarithm arguments.
struct IntegerArg {
  mpz_class m;  // >= 1
};
// (a - b sqrt2) / (a + b sqrt2)
struct QuadraticSurd {
  mpz_class a, b;
};
// The fundamental unit sqrt2 + 1.
struct UnitArg {};

using LogArgument = std::variant<IntegerArg, QuadraticSurd, UnitArg>;

std::string describe(const LogArgument& arg);
// Enclosure of log(arg). DomainError for degenerate or non-positive values.
Interval log_value(const LogArgument& arg, Precision prec = kDefaultPrecision);
// Logarithmic height (an upper bound for QuadraticSurd, from the quadratic
// y X^2 - 2(a^2 + 2b^2) X + y with y = a^2 - 2b^2).
Interval height(const LogArgument& arg, Precision prec = kDefaultPrecision);
// 1/2 (log y + (3/n) log(sqrt2 + 1)): height bound for the surd attached
// to a solution of x^2 - 2 = y^n.
Interval surd_height_bound(const Interval& log_y, long n, Precision prec = kDefaultPrecision);

struct LinearTerm {
  mpz_class coeff;
  LogArgument arg;
};

class LinearForm {
 public:
  // PreconditionError when every coefficient is zero or terms is empty.
  explicit LinearForm(std::vector<LinearTerm> terms);
  const std::vector<LinearTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Interval value(Precision prec = kDefaultPrecision) const;
  // Exact test of b_1 log a_1 + ... = 0 for integer arguments, via a
  // coprime base of the a_i.
  bool vanishes() const;

 private:
  std::vector<LinearTerm> terms_;
};

// 1.4 n^4.5 30^(n+3)
Interval matveev_constant(long n, Precision prec = kDefaultPrecision);

// Lower bound for log|form|. Integer arguments only; DomainError if the form
// vanishes; PreconditionError if maxcoeff < max |b_i|.
Interval matveev_lower_bound(const LinearForm& form, const mpz_class& maxcoeff,
                             Precision prec = kDefaultPrecision);

enum class LaurentVariant { kC20_3_m18, kC17_9_m30 };

struct CorollaryInput {
  mpz_class b1, b2;
  long D = 1;
  Interval log_A1, log_A2;  // caller-chosen, >= max{h, |log a|/D, 1/D}
};

// log A_i floor: max{h(alpha), |log alpha| / D, 1 / D}.
Interval corollary_log_A(const LogArgument& arg, long D, Precision prec = kDefaultPrecision);
Interval corollary_b_prime(const CorollaryInput& in);
// -C D^4 max{log b' + 0.38, m/D, 1}^2 log A1 log A2
Interval laurent_corollary_bound(const CorollaryInput& in, LaurentVariant variant);

struct LaurentParams {
  mpq_class mu;   // 1/3 <= mu < 1
  mpq_class rho;  // > 1
};

struct LaurentDerived {
  Interval sigma, lambda, H, omega, theta;
};

LaurentDerived laurent_derived(const LaurentParams& p, const Interval& h,
                               Precision prec = kDefaultPrecision);

// The constant C from omega, theta, H and a1 a2 (C is increasing in omega
// and theta, decreasing in H, a1 and a2).
Interval laurent_C(const LaurentParams& p, const Interval& lambda, const Interval& sigma,
                   const Interval& omega, const Interval& theta, const Interval& H,
                   const Interval& a1, const Interval& a2);
Interval laurent_C_prime(const LaurentParams& p, const Interval& lambda, const Interval& sigma,
                         const Interval& omega, const Interval& theta, const Interval& C);

// Data entering conditions (1)-(3).
struct LaurentInput {
  long D = 1;
  mpz_class b1, b2;
  Interval log_alpha1, log_alpha2;  // both > 0
  Interval height1, height2;        // upper bounds
};

struct LaurentResult {
  LaurentDerived derived;
  Interval C, C_prime;
  Interval lower_bound;  // on log|Lambda|
};

// Checks conditions (1)-(3) as proven inequalities, PreconditionError naming
// the first one that is not proven.
LaurentResult laurent_theorem_bound(const LaurentParams& params, const Interval& h,
                                    const Interval& a1, const Interval& a2,
                                    const LaurentInput& input);

// One certified inequality of a bound chain.
struct BoundStep {
  std::string name;
  std::string claim;
  Tribool status = Tribool::kUnknown;
};

struct PipelineOptions {
  Precision precision = kDefaultPrecision;
  // Report unrounded bounds instead of three significant digits.
  bool sharp = false;
};

// Upper bounds for the equations 2^y (2^x +- 1)^z -+ 1 = 3^r (2^(x+1) +- 1)^w
// with z >= 1, r != 0.
struct PipelineBounds {
  Sign sign = Sign::kPlus;
  Interval M_root;          // encloses the fixed point of the M inequality
  mpz_class M_max;          // M < M_max
  mpz_class x_max;          // x < x_max
  mpz_class r_max;          // |r| < r_max = M_max x_max
  mpz_class x_small_branch; // x bound when 2^(x - 0.2) < 4M
  long x_reduced = 0;       // largest x left after the continued-fraction step
  Interval cf_error;        // certified error of the convergent used
  std::size_t cf_index = 0;
  mpz_class r_reduced;      // |r| bound for 3 <= x <= x_reduced
  std::vector<BoundStep> steps;
};

// PrecisionError if any step of the chain cannot be proven.
PipelineBounds sit_pipeline(Sign sign, const PipelineOptions& opt = {});

// rhs of the continued-fraction step, (1.5 M + 1) / (2^(x - 0.2) log 2).
Interval sit_cf_rhs(const mpz_class& M, long x, Precision prec);
// The cruder 2M / (2^(x - 0.2) log 2).
Interval sit_cf_rhs_crude(const mpz_class& M, long x, Precision prec);

struct X2Minus2Constants {
  LaurentParams params;
  Interval sigma, lambda;
  Interval a1;         // exact point >= 27 log(sqrt2 + 1)
  Interval a2_factor;  // a2 = a2_factor * log y
  Interval a2_min;     // a2_factor * log y0
  Interval b_subtr;    // hull over n >= n0
  Interval h_subtr;
  Interval h0, H0, omega_max, theta_max;
  Interval C_max, C_prime_max;
  Interval K1, K2, K3, K4;  // the coefficients of T(h)
  LaurentResult sample;     // theorem applied at n = n0, y = y0
  std::vector<BoundStep> steps;
};

X2Minus2Constants x2minus2_constants(Precision prec = kDefaultPrecision);

// 2.2420 (h + l)^2 + 0.0089 (h + l) + 0.0306 + 0.0086 log(h + l), l = log rho
Interval x2minus2_T(const Interval& h, Precision prec);

struct X2Minus2Result {
  long n_max = 0;
  long sweep_lo = 0, sweep_hi = 0;  // every n in [lo, hi) refuted
  std::vector<BoundStep> steps;
  X2Minus2Constants constants;
};

// Throws PrecisionError listing any n in the sweep that is not refuted.
X2Minus2Result x2minus2_exponent_bound(unsigned jobs = 0, Precision prec = kDefaultPrecision);

}  // namespace mdt
