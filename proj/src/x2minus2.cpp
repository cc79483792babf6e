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

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "mdt/arith.hpp"
#include "mdt/linforms.hpp"

namespace mdt {

namespace {

constexpr long kN0 = 1289;
constexpr long kSweepEnd = 17000;
constexpr long kCorollaryFrom = 8000;

Interval dec(const char* text, Precision p) { return Interval::from_decimal(text, p); }
Interval unit_log(Precision p) { return log(Interval(1L, p) + sqrt_of(2, p)); }
Interval log_y0(Precision p) { return 102L * log_of(10, p); }

LaurentParams params() { return {mpq_class(11, 20), mpq_class(26)}; }

void add(std::vector<BoundStep>& steps, std::string name, std::string claim, Tribool t) {
  steps.push_back({std::move(name), std::move(claim), t});
}

void require_all(const std::vector<BoundStep>& steps) {
  for (const auto& s : steps) {
    if (!proven(s.status)) {
      throw PrecisionError("x2minus2: step '" + s.name + "' not proven (" + s.claim + ")");
    }
  }
}

// Inequality (final) with h = 2 log n - 0.63: proven to fail when
// log 32 / log y0 + 2 T(h) <= n.
Tribool final_fails(long n, Precision prec) {
  return decide(
      [n](Precision p) {
        Interval h = 2L * log_of(n, p) - dec("0.63", p);
        Interval rhs = log_of(32, p) / log_y0(p) + 2L * x2minus2_T(h, p);
        return le(rhs, Interval(n, p));
      },
      prec, kMaxPrecision);
}

}  // namespace

Interval x2minus2_T(const Interval& h, Precision prec) {
  prec = std::max(prec, h.precision());
  Interval g = h + log_of(26, prec);
  return dec("2.2420", prec) * sqr(g) + dec("0.0089", prec) * g + dec("0.0306", prec) +
         dec("0.0086", prec) * log(g);
}

X2Minus2Constants x2minus2_constants(Precision prec) {
  X2Minus2Constants k;
  k.params = params();
  auto& st = k.steps;
  const Interval lu = unit_log(prec);
  const Interval ly0 = log_y0(prec);
  const Interval one(1L, prec);

  LaurentDerived base = laurent_derived(k.params, Interval(1L, prec), prec);
  k.sigma = base.sigma;
  k.lambda = base.lambda;
  const mpq_class mu = k.params.mu;
  add(st, "sigma", "sigma = 0.89875",
      (1 + 2 * mu - mu * mu) / 2 == mpq_class(719, 800) ? Tribool::kTrue : Tribool::kFalse);

  // a1 = (rho + 1) log(sqrt2 + 1), taken as an exact upper point.
  k.a1 = (27L * lu).upper_point();
  // a2 = (2 + (rho + 1) log(sqrt2 + 1) / log y0 * 3 / n0) log y
  k.a2_factor = (2L + 27L * lu / ly0 * Interval::ratio(3, kN0, prec)).upper_point();
  k.a2_min = k.a2_factor * ly0;
  add(st, "a2_bracket", "2.00023 < a2 / log y < 2.00024",
      gt(k.a2_factor, dec("2.00023", prec)) && lt(k.a2_factor, dec("2.00024", prec)));
  add(st, "a2_min", "a2 > 469.78 for y > 10^102", gt(k.a2_min, dec("469.78", prec)));

  auto b_at = [&](const Interval& inv_n) {
    return -log(2L * inv_n / dec("469.78", prec) + one / k.a1);
  };
  k.b_subtr = Interval::hull(b_at(Interval::ratio(1, kN0, prec)), b_at(Interval(0L, prec)));
  add(st, "b_subtr", "3.1694 < b_subtr < 3.1696 for n >= 1289",
      gt(k.b_subtr, dec("3.1694", prec)) && lt(k.b_subtr, dec("3.1696", prec)));
  k.h_subtr = 2L * k.b_subtr - 2L * log(k.lambda) - dec("3.56", prec);
  add(st, "h_subtr", "0.6300 < h_subtr < 0.6305, so h = 2 log n - 0.63 satisfies condition (1)",
      gt(k.h_subtr, dec("0.6300", prec)) && lt(k.h_subtr, dec("0.6305", prec)));

  k.h0 = 2L * log_of(kN0, prec) - k.h_subtr;
  add(st, "h0", "h0 > 13.6927", gt(k.h0, dec("13.6927", prec)));
  add(st, "h_lower_terms", "2 log n0 - h_subtr > lambda > log 2",
      gt(k.h0, k.lambda) && gt(k.lambda, log_of(2, prec)));
  k.H0 = k.h0 / k.lambda + one / k.sigma;
  add(st, "H0", "H0 > 5.7887", gt(k.H0, dec("5.7887", prec)));
  // Worst case over H >= H0 from the lower endpoint.
  const Interval H0lo = k.H0.lower_point();
  Interval root = sqrt(one + one / (4L * sqr(H0lo)));
  k.omega_max = 2L * (1L + root);
  k.theta_max = root + one / (2L * H0lo);
  add(st, "omega_max", "omega_max < 4.0075", lt(k.omega_max, dec("4.0075", prec)));
  add(st, "theta_max", "theta_max < 1.0901", lt(k.theta_max, dec("1.0901", prec)));
  add(st, "condition_3", "a1 a2 >= lambda^2", ge(k.a1 * k.a2_min, sqr(k.lambda)));

  k.C_max = laurent_C(k.params, k.lambda, k.sigma, k.omega_max, k.theta_max, H0lo, k.a1,
                      k.a2_min);
  k.C_prime_max =
      laurent_C_prime(k.params, k.lambda, k.sigma, k.omega_max, k.theta_max, k.C_max);
  add(st, "C_max", "C <= C_max < 0.0471", lt(k.C_max, dec("0.0471", prec)));
  add(st, "C_prime_max", "C' <= C'_max < 0.1158", lt(k.C_prime_max, dec("0.1158", prec)));

  k.K1 = k.C_max * k.a1 * dec("2.00024", prec);
  k.K2 = sqrt(k.omega_max * k.theta_max) / ly0;
  k.K3 = (log(k.C_prime_max) + log(k.a1) + log(dec("2.00024", prec))) / ly0 + log(ly0) / ly0;
  k.K4 = 2L / ly0;
  add(st, "K1", "C_max a1 2.00024 < 2.2420", lt(k.K1, dec("2.2420", prec)));
  add(st, "K2", "sqrt(omega_max theta_max) / log y0 < 0.0089", lt(k.K2, dec("0.0089", prec)));
  add(st, "K3", "(log C'_max + log a1 + log 2.00024 + log log y0) / log y0 < 0.0306",
      lt(k.K3, dec("0.0306", prec)));
  add(st, "K4", "2 / log y0 < 0.0086", lt(k.K4, dec("0.0086", prec)));

  // The theorem itself at n = n0, y = y0, with the arguments' bounds
  // evaluated at a finer precision than the point parameters a1, a2.
  const Precision fine = 4 * prec;
  LaurentInput in;
  in.D = 2;
  in.b1 = 2;
  in.b2 = kN0;
  in.log_alpha1 = unit_log(fine);
  in.log_alpha2 = Interval::ratio(3, kN0, fine) * unit_log(fine);
  in.height1 = unit_log(fine) / 2L;
  in.height2 = surd_height_bound(log_y0(fine), kN0, fine);
  Interval h = 2L * log_of(kN0, fine) - dec("0.63", fine);
  Interval a2 = (k.a2_factor * ly0).upper_point();
  k.sample = laurent_theorem_bound(k.params, h, k.a1, a2, in);
  add(st, "sample_C", "theorem at n = 1289, y = 10^102: C <= C_max",
      le(k.sample.C, k.C_max.upper_point()));

  require_all(st);
  return k;
}

X2Minus2Result x2minus2_exponent_bound(unsigned jobs, Precision prec) {
  X2Minus2Result res;
  res.constants = x2minus2_constants(prec);
  auto& st = res.steps;
  const Interval lu = unit_log(prec);
  const Interval ly0 = log_y0(prec);

  // Corollary stage: n < 17000.
  add(st, "b_prime_window", "n < b' < n + 1 since 2 / log y0 < 1",
      lt(2L / ly0, Interval(1L, prec)));
  add(st, "corollary_regime", "log 8000 + 0.38 > 9 = m/D for (C, m) = (20.3, 18)",
      gt(log_of(kCorollaryFrom, prec) + dec("0.38", prec), Interval(9L, prec)));
  add(st, "corollary_constant", "20.3 * 2^4 * 1/2 * 1/2 = 81.2",
      mpq_class(203, 10) * 16 / 4 == mpq_class(406, 5) ? Tribool::kTrue : Tribool::kFalse);
  {
    const long n = kCorollaryFrom + 1;
    Interval lhs = dec("81.2", prec) * sqr(log_of(n + 1, prec) + dec("0.38", prec)) *
                   (1L + 3L * lu / (Interval(n, prec) * ly0));
    add(st, "corollary_to_89", "81.2 (log(n+1) + 0.38)^2 (1 + 3 log(sqrt2+1) / (n log y)) "
                               "<= 89 log^2 n at n = 8001, ratio decreasing in n",
        le(lhs, 89L * sqr(log_of(n, prec))));
  }
  {
    Interval ln = log_of(kSweepEnd, prec);
    Interval rhs = 178L * sqr(ln) + 2L * log(4L * sqrt_of(2, prec)) / ly0;
    add(st, "n_below_17000", "178 log^2 n + 2 log(4 sqrt2) / log y0 < n from n = 17000 on",
        lt(rhs, Interval(kSweepEnd, prec)) &&
            lt(356L * ln / kSweepEnd, Interval(1L, prec)));
  }

  // Sweep 1289 <= n < 17000.
  res.sweep_lo = kN0;
  res.sweep_hi = kSweepEnd;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<long> failures;
  std::mutex mu;
  std::atomic<long> next{kN0};
  constexpr long kChunk = 256;
  auto worker = [&] {
    std::vector<long> local;
    for (;;) {
      long lo = next.fetch_add(kChunk);
      if (lo >= kSweepEnd) break;
      long hi = std::min(kSweepEnd, lo + kChunk);
      for (long n = lo; n < hi; ++n) {
        if (!proven(final_fails(n, prec))) local.push_back(n);
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    failures.insert(failures.end(), local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(failures.begin(), failures.end());
  std::string msg;
  for (std::size_t i = 0; i < failures.size() && i < 20; ++i) {
    msg += (i ? " " : "") + std::to_string(failures[i]);
  }
  add(st, "sweep", "inequality (final) fails for every 1289 <= n < 17000" +
                       (failures.empty() ? std::string() : "; open: " + msg),
      failures.empty() ? Tribool::kTrue : Tribool::kUnknown);

  long n_max = 0;
  for (long n = kN0 - 1; n >= 41; --n) {
    long r = n % 24;
    if ((r == 13 || r == 17 || r == 19 || r == 23) && is_prime(mpz_class(n))) {
      n_max = n;
      break;
    }
  }
  res.n_max = n_max;
  add(st, "n_max", "largest prime below 1289 with n = 13, 17, 19, 23 mod 24 is " +
                       std::to_string(n_max),
      n_max > 0 ? Tribool::kTrue : Tribool::kFalse);
  require_all(st);
  return res;
}

}  // namespace mdt
