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

#include "mdt/dioph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

#include "mdt/lattice.hpp"

namespace mdt {

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class powz(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpz_class pow3(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

long pm(Sign s) { return s == Sign::kPlus ? 1 : -1; }

// 2^e + 1 or 2^e - 1.
mpz_class two_pm(Sign s, unsigned long e) { return pow2(e) + pm(s); }

unsigned long strip(mpz_class& n, unsigned long p) {
  unsigned long v = 0;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::uint64_t fnv1a(const std::vector<long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::vector<long>& checked(const std::vector<long>& xs, std::uint64_t sum, const char* what) {
  if (fnv1a(xs) != sum) throw std::logic_error(std::string(what) + ": embedded data checksum mismatch");
  return xs;
}

}  // namespace

bool sit_holds(const SitSolution& s) {
  if (s.x < 1) return false;
  mpz_class lhs = pow2(s.y) * powz(two_pm(s.sign, s.x), s.z);
  lhs -= pm(s.sign);
  mpz_class rhs = powz(two_pm(s.sign, s.x + 1), s.w);
  if (s.r >= 0) return lhs == pow3(s.r) * rhs;
  return lhs * pow3(-s.r) == rhs;
}

Strip3 q_strip3(Sign sign, long x, unsigned long y, unsigned long z) {
  if (x < 3 || y < 1) throw DomainError("q_strip3: need x >= 3 and y >= 1");
  mpz_class v = pow2(y) * powz(two_pm(sign, x), z);
  v -= pm(sign);
  if (v <= 0) throw DomainError("q_strip3: non-positive value");
  Strip3 out;
  out.v3 = strip(v, 3);
  out.value = v;
  return out;
}

std::optional<std::pair<unsigned long, long>> solve_3r_power(const mpz_class& n,
                                                             const mpz_class& B) {
  if (n <= 0 || B <= 1) return std::nullopt;
  mpz_class qn = n, qb = B;
  const unsigned long vn = strip(qn, 3);
  const unsigned long vb = strip(qb, 3);
  if (qb == 1) throw DomainError("solve_3r_power: base is a power of 3");
  unsigned long w = 0;
  if (qn != 1) {
    auto e = is_power_of(qb, qn);
    if (!e) return std::nullopt;
    w = *e;
  }
  return std::pair{w, static_cast<long>(vn) - static_cast<long>(w * vb)};
}

bool is_r0_family(const SitSolution& s) {
  if (s.r != 0) return false;
  if (s.y == 1 && s.z == 1 && s.w == 1) return true;
  return s.sign == Sign::kMinus && s.y == static_cast<unsigned long>(s.x) + 2 && s.z == 1 &&
         s.w == 2;
}

std::vector<Interval> sit_logs(Sign sign, long x, Precision prec) {
  return {log_of(2, prec), log_of(two_pm(sign, x), prec), log_of(3, prec),
          log_of(two_pm(sign, x + 1), prec)};
}

namespace {

mpz_class seed_above_fourth_power(const mpz_class& M) {
  mpz_class m4 = powz(M, 4);
  mpz_class c = 1;
  while (c <= m4) c *= 10;
  return c;
}

struct Reduced {
  long x = 0;
  AutoReduceResult red;
};

// Warm-started chain over x of one parity, always from x = 3 so that the
// bound for a given x does not depend on the requested range.
std::vector<Reduced> reduce_chain(Sign sign, long x_hi, const SitFinalOptions& opt) {
  std::vector<Reduced> out;
  mpz_class C = seed_above_fourth_power(opt.coeff_bound);
  for (long x = sign == Sign::kPlus ? 4 : 3; x <= x_hi; x += 2) {
    try {
      auto red = auto_reduce([sign, x](Precision p) { return sit_logs(sign, x, p); },
                             opt.coeff_bound, C, opt.precision);
      C = red.C_used;
      out.push_back({x, std::move(red)});
    } catch (const std::exception& e) {
      throw GiveUpError("sit-solve: reduction failed at x = " + std::to_string(x) + ": " +
                        e.what());
    }
  }
  return out;
}

SitXReport solve_one_x(Sign sign, const Reduced& in, const SitFinalOptions& opt) {
  const long x = in.x;
  SitXReport rep;
  rep.x = x;
  rep.ell = in.red.bound;
  rep.C_used = in.red.C_used;
  rep.escalations = in.red.escalations;
  const Precision p = std::max(opt.precision, rep.ell.precision());
  const Interval ell_lo = rep.ell.lower_point().with_precision(p);
  if (!proven(gt(ell_lo, Interval(0L, p)))) {
    throw GiveUpError("sit-solve: non-positive lower bound at x = " + std::to_string(x));
  }
  rep.U = -log(ell_lo) / log_of(2, p);
  const mpq_class U = rep.U.hi_q();

  const mpz_class B = two_pm(sign, x + 1);
  const mpq_class xz = mpq_class(x) - mpq_class(1, 5);
  // y + (x - 1/5) z - 1 < U with y, z >= 1.
  for (unsigned long z = 1;; ++z) {
    if (opt.yz_cap && z > opt.yz_cap) break;
    const mpq_class base = xz * z - 1;
    if (1 + base >= U) break;
    mpz_class pz = powz(two_pm(sign, x), z);
    for (unsigned long y = 1;; ++y) {
      if (opt.yz_cap && y > opt.yz_cap) break;
      if (y + base >= U) break;
      ++rep.candidates;
      mpz_class v = pow2(y) * pz;
      v -= pm(sign);
      auto wr = solve_3r_power(v, B);
      if (!wr) continue;
      SitSolution s{sign, x, y, z, wr->first, wr->second};
      if (!sit_holds(s)) throw std::logic_error("sit-solve: solution failed re-validation");
      rep.solutions.push_back(s);
    }
  }
  return rep;
}

}  // namespace

SitFinalResult solve_sit_final(Sign sign, const SitFinalOptions& opt) {
  SitFinalResult res;
  res.sign = sign;
  const long parity = sign == Sign::kPlus ? 0 : 1;
  std::vector<Reduced> xs;
  for (auto& r : reduce_chain(sign, opt.x_hi, opt)) {
    if (r.x >= opt.x_lo && r.x % 2 == parity) xs.push_back(std::move(r));
  }
  std::vector<std::optional<SitXReport>> slots(xs.size());
  std::vector<std::string> errors(xs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= xs.size()) break;
      try {
        slots[i] = solve_one_x(sign, xs[i], opt);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, xs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool first = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!errors[i].empty()) throw GiveUpError(errors[i]);
    SitXReport& r = *slots[i];
    if (opt.on_x) opt.on_x(r);
    const mpq_class u = r.U.hi_q();
    if (first || u > res.U_max) {
      res.U_max = u;
      res.U_argmax = r.x;
      first = false;
    }
    res.solutions.insert(res.solutions.end(), r.solutions.begin(), r.solutions.end());
    res.per_x.push_back(std::move(r));
  }
  return res;
}

// Props. on the three equations, desk-scale.

namespace {

bool over(const mpz_class& v, const mpz_class& cap) { return cap != 0 && v > cap; }

}  // namespace

std::vector<LemmaTuple> verify_prop_searches(const std::string& prop_id, const PropBox& box) {
  const long N = box.max_var;
  const mpz_class& cap = box.value_cap;
  std::vector<LemmaTuple> out;
  auto tup = [](long a, long b, long c, long d, long e) {
    return LemmaTuple{mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d), mpz_class(e)};
  };
  if (prop_id == "eq48") {
    // ((d^x + 1)^s + 1)^t - d^y = 2, x >= 1, d, s, t, y >= 2.
    for (long d = 2; d <= N; ++d) {
      for (long x = 1; x <= N; ++x) {
        mpz_class dx = powz(d, x);
        if (over(dx, cap)) break;
        for (long s = 2; s <= N; ++s) {
          mpz_class in = powz(dx + 1, s) + 1;
          if (over(in, cap)) break;
          for (long t = 2; t <= N; ++t) {
            mpz_class lhs = powz(in, t);
            if (over(lhs, cap)) break;
            for (long y = 2; y <= N; ++y) {
              mpz_class dy = powz(d, y);
              if (lhs - dy == 2) out.push_back(tup(d, x, y, s, t));
              if (dy > lhs) break;
            }
          }
        }
      }
    }
  } else if (prop_id == "eq50") {
    // (d^x + 1)^s - (d^y - 1)^m = 2, x, y >= 1, d, s, m >= 2.
    for (long d = 2; d <= N; ++d) {
      for (long x = 1; x <= N; ++x) {
        mpz_class dx = powz(d, x);
        if (over(dx, cap)) break;
        for (long s = 2; s <= N; ++s) {
          mpz_class a = powz(dx + 1, s);
          if (over(a, cap)) break;
          for (long y = 1; y <= N; ++y) {
            mpz_class dy1 = powz(d, y) - 1;
            if (dy1 > a) break;
            for (long m = 2; m <= N; ++m) {
              mpz_class b = powz(dy1, m);
              if (a - b == 2) out.push_back(tup(d, x, y, s, m));
              if (b > a || dy1 <= 1) break;
            }
          }
        }
      }
    }
  } else if (prop_id == "eq49") {
    // d^y - ((d^x - 1)^s - 1)^t = 2, x >= 1, d, y, s, t >= 2.
    for (long d = 2; d <= N; ++d) {
      for (long y = 2; y <= N; ++y) {
        mpz_class dy = powz(d, y);
        if (over(dy, cap)) break;
        for (long x = 1; x <= N; ++x) {
          mpz_class dx1 = powz(d, x) - 1;
          if (dx1 > dy) break;
          for (long s = 2; s <= N; ++s) {
            mpz_class in = powz(dx1, s) - 1;
            for (long t = 2; t <= N; ++t) {
              mpz_class b = powz(in, t);
              if (dy - b == 2) out.push_back(tup(d, x, y, s, t));
              if (b > dy || in <= 1) break;
            }
            if (in > dy || dx1 <= 1) break;
          }
        }
      }
    }
  } else {
    throw DomainError("verify_prop_searches: unknown id '" + prop_id + "'");
  }
  return out;
}

// Data for x^2 - 2 = y^n.

const std::vector<long>& chen_set_S() {
  static const std::vector<long> kS = {
      5,   7,   11,  13,  19,  23,  29,  31,  37,  41,  61,  67,  73,  89,  113, 127,
      137, 149, 181, 191, 193, 197, 223, 233, 251, 257, 349, 373, 379, 421, 457, 461,
      521, 547, 599, 617, 661, 677, 701, 761, 769, 811, 829, 881, 883, 953};
  static const std::vector<long>& v = checked(kS, 0x156094deaa39efa9ULL, "set S");
  return v;
}

mpz_class compute_Q() {
  mpz_class q = 1;
  for (long p : chen_set_S()) q *= p;
  return q;
}

bool chen_filter(const mpz_class& y) {
  static const mpz_class Q = compute_Q();
  mpz_class r;
  mpz_class yp1 = y + 1;
  mpz_fdiv_r(r.get_mpz_t(), yp1.get_mpz_t(), Q.get_mpz_t());
  return r == 0;
}

const std::vector<long>& admissible_exponents_x2minus2() {
  static const std::vector<long> kList = {
      41,   43,   47,   61,   67,   71,   89,   109,  113,  137,  139,  157,  163,  167,  181,
      191,  211,  229,  233,  239,  257,  263,  277,  281,  283,  307,  311,  331,  349,  353,
      359,  373,  379,  383,  397,  401,  421,  431,  449,  479,  499,  503,  521,  523,  541,
      547,  569,  571,  593,  599,  613,  617,  619,  641,  643,  647,  661,  691,  709,  719,
      733,  739,  743,  757,  761,  787,  809,  811,  829,  839,  853,  857,  859,  863,  877,
      881,  883,  887,  907,  911,  929,  953,  977,  983,  997,  1021, 1031, 1049, 1051, 1069,
      1093, 1097, 1103, 1117, 1123, 1151, 1171, 1193, 1213, 1217, 1223, 1237};
  static const std::vector<long>& v = checked(kList, 0x322090719a712182ULL, "admissible exponents");
  return v;
}

}  // namespace mdt
