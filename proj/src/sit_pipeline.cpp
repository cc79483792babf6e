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

#include <functional>
#include <string>

#include "mdt/contfrac.hpp"
#include "mdt/linforms.hpp"

namespace mdt {

namespace {

using Check = std::function<Tribool(Precision)>;

class StepLog {
 public:
  explicit StepLog(Precision prec) : prec_(prec) {}

  void add(std::string name, std::string claim, const Check& cmp) {
    Tribool t = decide(cmp, prec_, kMaxPrecision);
    steps_.push_back({std::move(name), std::move(claim), t});
  }

  void require_all(const char* pipeline) const {
    for (const auto& s : steps_) {
      if (!proven(s.status)) {
        throw PrecisionError(std::string(pipeline) + ": step '" + s.name + "' not proven (" +
                             s.claim + ")");
      }
    }
  }

  std::vector<BoundStep> take() { return std::move(steps_); }

 private:
  Precision prec_;
  std::vector<BoundStep> steps_;
};

Interval dec(const char* text, Precision p) { return Interval::from_decimal(text, p); }
Interval q(const mpq_class& v, Precision p) { return Interval(v, p); }
Interval z(const mpz_class& v, Precision p) { return Interval(v, p); }

mpz_class ceil_q(const mpq_class& v) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

mpz_class round_up_3(const mpq_class& v) { return ceil_q(round_up_significant(v, 3)); }

const mpz_class& ten20() {
  static const mpz_class v("100000000000000000000");
  return v;
}

// t - phi(t) for the M inequality, t = log M:
// phi(t) = log(3.22e16) + log(1 + log 50.9 + t + 2 log t) + 4 log t.
Interval fixed_point_gap(const Interval& t) {
  Precision p = t.precision();
  Interval phi = log(dec("3.22e16", p)) +
                 log(1L + log(dec("50.9", p)) + t + 2L * log(t)) + 4L * log(t);
  return t - phi;
}

}  // namespace

Interval sit_cf_rhs(const mpz_class& M, long x, Precision prec) {
  Interval num = dec("1.5", prec) * z(M, prec) + 1L;
  Interval pw = pow(Interval(2L, prec), q(mpq_class(x) - mpq_class(1, 5), prec));
  return num / (pw * log_of(2, prec));
}

Interval sit_cf_rhs_crude(const mpz_class& M, long x, Precision prec) {
  Interval pw = pow(Interval(2L, prec), q(mpq_class(x) - mpq_class(1, 5), prec));
  return 2L * z(M, prec) / (pw * log_of(2, prec));
}

PipelineBounds sit_pipeline(Sign sign, const PipelineOptions& opt) {
  PipelineBounds out;
  out.sign = sign;
  StepLog log_steps(opt.precision);
  auto L2 = [](Precision p) { return log_of(2, p); };
  auto L3 = [](Precision p) { return log_of(3, p); };
  auto L5 = [](Precision p) { return log_of(5, p); };
  auto M0 = [](Precision p) { return z(ten20(), p); };

  log_steps.add("r_bound_positive",
                "(x + 1.2 + 0.2/M) log2/log3 < x at x = 3, slope 1 - log2/log3 > 0",
                [&](Precision p) {
                  Interval lhs = (dec("4.2", p) + dec("0.2", p) / M0(p)) * L2(p) / L3(p);
                  return lt(lhs, Interval(3L, p)) &&
                         gt(1L - L2(p) / L3(p), Interval(0L, p));
                });
  log_steps.add("r_bound_negative", "w (log(x+1) + 1) < M x: log 4 + 1 < 3, slope < 1",
                [&](Precision p) { return lt(log_of(4, p) + 1L, Interval(3L, p)); });
  log_steps.add("coefficient_bound", "(x + 1) M < 1.34 x M for x >= 3",
                [&](Precision p) { return le(Interval(4L, p), dec("1.34", p) * 3L); });
  log_steps.add("b_prime_bound",
                "x M + (x+1) M / log3 < 2 x M for x >= 11; x <= 10 is below every later bound",
                [&](Precision p) {
                  return lt(11L + 12L / L3(p), Interval(22L, p)) &&
                         lt(1L + 1L / L3(p), Interval(2L, p));
                });
  log_steps.add("corollary_regime", "log(2 * 11 * 10^20) + 0.38 > 30 = m/D",
                [&](Precision p) {
                  return gt(log(22L * M0(p)) + dec("0.38", p), Interval(30L, p));
                });
  log_steps.add("x_lower_factor", "x - 0.2 >= 0.93 x for x >= 3",
                [&](Precision p) {
                  return ge(Interval(3L, p) - dec("0.2", p), dec("0.93", p) * 3L);
                });
  log_steps.add(
      "quadratic_absorption",
      "L + 17.9 log3 (L + log2 + 0.38)^2 <= 20.6 L^2 for L >= log(11 * 10^20)",
      [&](Precision p) {
        Interval k = dec("17.9", p) * L3(p);
        Interval s = L2(p) + dec("0.38", p);
        Interval a = dec("20.6", p) - k;
        Interval b = 1L + 2L * k * s;
        Interval c = k * sqr(s);
        Interval L0 = log(11L * M0(p));
        return gt(a * sqr(L0) - b * L0 - c, Interval(0L, p)) && gt(a, Interval(0L, p)) &&
               ge(L0, b / (2L * a));
      });
  log_steps.add("x_coefficient_32", "20.6 / (0.93 log2) < 32", [&](Precision p) {
    return lt(dec("20.6", p) / (dec("0.93", p) * L2(p)), Interval(32L, p));
  });
  log_steps.add("log_x_step", "log 32 < 3.47 and 2 / log(10^20) < 0.05", [&](Precision p) {
    return lt(log_of(32, p), dec("3.47", p)) && lt(2L / log(M0(p)), dec("0.05", p));
  });
  log_steps.add("log_x_solved", "3.47/0.95 < 3.66 and 2/0.95 < 2.11", [&](Precision p) {
    return lt(dec("3.47", p) / dec("0.95", p), dec("3.66", p)) &&
           lt(2L / dec("0.95", p), dec("2.11", p));
  });
  log_steps.add("absorb_1_26", "t + 3.66 + 2.11 log t <= 1.26 t for t >= log(10^20)",
                [&](Precision p) {
                  Interval t0 = log(M0(p));
                  return le(t0 + dec("3.66", p) + dec("2.11", p) * log(t0), dec("1.26", p) * t0) &&
                         gt(dec("0.26", p), dec("2.11", p) / t0);
                });
  log_steps.add("x_constant_50_9", "32 * 1.26^2 < 50.9", [&](Precision p) {
    return lt(32L * sqr(dec("1.26", p)), dec("50.9", p));
  });
  log_steps.add("matveev_log_bounds",
                "log(2^(x+1) +- 1) <= (x + 1.17) log2, log(2^x +- 1) <= (x + 0.17) log2, x >= 3",
                [&](Precision p) {
                  Interval two17 = pow(Interval(2L, p), dec("0.17", p));
                  return le(1L + Interval::ratio(1, 16, p), two17) &&
                         le(1L + Interval::ratio(1, 8, p), two17);
                });
  log_steps.add("matveev_constant_8_6e12",
                "1.4 4^4.5 30^7 log3 log2 log2^2 (4.17 * 3.17 / 9) < 8.6e12", [&](Precision p) {
                  Interval c = matveev_constant(4, p) * L3(p) * L2(p) * sqr(L2(p)) *
                               dec("4.17", p) * dec("3.17", p) / 9L;
                  return lt(c, dec("8.6e12", p));
                });
  log_steps.add("matveev_x_squared", "8.6e12 * 50.9^2 < 2.23e16", [&](Precision p) {
    return lt(dec("8.6e12", p) * sqr(dec("50.9", p)), dec("2.23e16", p));
  });
  log_steps.add("divide_log2", "2.23e16 / log2 < 3.22e16", [&](Precision p) {
    return lt(dec("2.23e16", p) / L2(p), dec("3.22e16", p));
  });
  log_steps.add("w_bound",
                "(y + (x + 0.2) z) log2/log5 < y + (x - 0.2) z - 1 at y = z = 1, x = 3, "
                "slopes log2/log5 < 1 and 3.2 log2/log5 < 2.8",
                [&](Precision p) {
                  Interval r = L2(p) / L5(p);
                  return lt(dec("4.2", p) * r, dec("2.8", p)) && lt(r, Interval(1L, p)) &&
                         lt(dec("3.2", p) * r, dec("2.8", p));
                });

  // Fixed point of t < phi(t), t = log M.
  const Precision p0 = opt.precision;
  Interval t_lo = log(M0(p0)), t_hi(200L, p0);
  if (!proven(lt(fixed_point_gap(t_lo), Interval(0L, p0))) ||
      !proven(gt(fixed_point_gap(t_hi), Interval(0L, p0)))) {
    throw PrecisionError("fixed point of the M inequality is not bracketed");
  }
  mpq_class a = t_lo.lo_q(), b = t_hi.hi_q();
  for (int it = 0; it < 200 && b - a > mpq_class(1, 1000000000000L); ++it) {
    mpq_class mid = (a + b) / 2;
    Tribool neg = lt(fixed_point_gap(q(mid, p0)), Interval(0L, p0));
    if (proven(neg)) {
      a = mid;
    } else if (refuted(neg)) {
      b = mid;
    } else {
      throw PrecisionError("fixed point bisection undecided");
    }
  }
  out.M_root = exp(Interval::from_endpoints(a, b, p0));
  out.M_max = opt.sharp ? ceil_hi(out.M_root) : round_up_3(out.M_root.hi_q());
  const mpz_class M_max = out.M_max;
  log_steps.add("M_fixed_point",
                "M < 3.22e16 (1 + log(50.9 M log^2 M)) log^4 M fails at M = " + M_max.get_str() +
                    " and beyond (t - phi(t) increasing for t >= log 10^20)",
                [&](Precision p) {
                  Interval t = log(z(M_max, p));
                  Interval t0 = log(M0(p));
                  Interval dphi = (1L + 2L / t0) / t0 + 4L / t0;
                  return gt(fixed_point_gap(t), Interval(0L, p)) && lt(dphi, Interval(1L, p)) &&
                         gt(z(M_max, p), M0(p));
                });

  Interval xb = dec("50.9", p0) * sqr(log(z(M_max, p0)));
  out.x_max = opt.sharp ? ceil_hi(xb) : round_up_3(xb.hi_q());
  const mpz_class x_max = out.x_max;
  log_steps.add("x_bound", "x < 50.9 log^2 M < " + x_max.get_str(), [&](Precision p) {
    return le(dec("50.9", p) * sqr(log(z(M_max, p))), z(x_max, p));
  });
  Interval xs = (log_of(4, p0) + log(z(M_max, p0))) / L2(p0) + dec("0.2", p0);
  out.x_small_branch = ceil_hi(xs);
  const mpz_class x_small = out.x_small_branch;
  log_steps.add("small_branch",
                "2^(x - 0.2) < 4M gives x < " + x_small.get_str() + " <= x bound",
                [&](Precision p) {
                  Interval v = (log_of(4, p) + log(z(M_max, p))) / L2(p) + dec("0.2", p);
                  return le(v, z(x_small, p)) && le(z(x_small, p), z(x_max, p));
                });
  out.r_max = M_max * x_max;

  auto cf = legendre_reduce(
      log_ratio_source(3, 2), out.r_max,
      [M_max](long x, Precision p) { return sit_cf_rhs(M_max, x, p); }, 3, 10000000,
      p0, kMaxPrecision);
  out.x_reduced = cf.x_max;
  out.cf_error = cf.convergent.error;
  out.cf_index = cf.convergent.index;
  const long xr = out.x_reduced;
  log_steps.add("cf_reduction",
                "convergent " + std::to_string(out.cf_index) +
                    " of log3/log2 excludes x > " + std::to_string(xr) +
                    " via (1.5 M + 1) / (2^(x - 0.2) log2)",
                [&](Precision p) {
                  return le(sit_cf_rhs(M_max, xr + 1, p), cf.error_lower.with_precision(p)) &&
                         lt(Interval(xr, p), z(x_max, p));
                });
  const mpz_class r_exact = M_max * xr;
  out.r_reduced = opt.sharp ? r_exact : round_up_3(mpq_class(r_exact));
  log_steps.add("r_reduced", "|r| < M x <= " + out.r_reduced.get_str() + " for x <= " +
                                 std::to_string(xr),
                [&](Precision p) { return le(z(r_exact, p), z(out.r_reduced, p)); });

  log_steps.require_all("sit_pipeline");
  out.steps = log_steps.take();
  return out;
}

}  // namespace mdt
