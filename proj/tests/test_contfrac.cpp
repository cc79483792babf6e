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

#include <cmath>

#include "doctest.h"
#include "mdt/contfrac.hpp"
#include "oracles.hpp"

using namespace mdt;

namespace {

// Independent expansion with exact integer arithmetic for sqrt(n):
// the classical (m, d, a) recurrence.
std::vector<long> sqrt_quotients(long n, std::size_t count) {
  const long a0 = static_cast<long>(std::sqrt(static_cast<double>(n)));
  std::vector<long> out{a0};
  long m = 0, d = 1, a = a0;
  while (out.size() < count) {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    out.push_back(a);
  }
  return out;
}

// |sqrt2 - p/q| as long double, numerator exact.
long double sqrt2_error(long p, long q) {
  const long double num = std::fabs(static_cast<long double>(2 * q * q - p * p));
  return num / (q * (q * std::sqrt(2.0L) + p));
}

}  // namespace

TEST_SUITE("contfrac") {
  TEST_CASE("log3/log2 up to 4.76e30") {
    ExpansionStop stop;
    stop.denominator = mpz_class("4760000000000000000000000000000");
    auto cs = convergents(log_ratio_source(3, 2), stop);
    const auto& last = cs.back();
    CHECK(last.index == 61);
    CHECK(last.q >= *stop.denominator);
    CHECK(cs[cs.size() - 2].q < *stop.denominator);
    CHECK(proven(gt(last.error, Interval::from_decimal("3.43e-64", 256))));
    CHECK(last.p == mpz_class("55903041915705101922536695520222"));
    CHECK(last.q == mpz_class("35270892459770675836042178475339"));
  }

  TEST_CASE("golden ratio gives Fibonacci ratios") {
    ExpansionStop stop;
    stop.count = 40;
    auto cs = convergents(golden_ratio_source(), stop);
    REQUIRE(cs.size() == 40);
    mpz_class f0 = 1, f1 = 1;
    for (const auto& c : cs) {
      CHECK(c.partial_quotient == 1);
      CHECK(c.p == f1);
      CHECK(c.q == f0);
      mpz_class f2 = f0 + f1;
      f0 = f1;
      f1 = f2;
    }
  }

  TEST_CASE("sqrt expansions against the integer recurrence") {
    for (long n : {2L, 3L, 7L, 13L, 61L, 94L, 991L}) {
      ExpansionStop stop;
      stop.count = 60;
      auto cs = convergents(sqrt_source(n), stop);
      auto want = sqrt_quotients(n, 60);
      REQUIRE(cs.size() == 60);
      for (std::size_t i = 0; i < 60; ++i) CHECK(cs[i].partial_quotient == want[i]);
    }
  }

  TEST_CASE("convergent invariants") {
    ExpansionStop stop;
    stop.count = 50;
    auto cs = convergents(log_ratio_source(5, 3), stop);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      CHECK(cs[i + 1].q > cs[i].q);
      const mpz_class qq = cs[i].q * cs[i + 1].q;
      CHECK(proven(lt(cs[i].error, Interval(mpq_class(1, qq), 256))));
      CHECK(cs[i].error.contains(mpq_class(0)) == false);
    }
  }

  TEST_CASE("quotients are stable under precision doubling") {
    ExpansionStop stop;
    stop.count = 30;
    auto src = log_ratio_source(3, 2);
    auto lo = convergents(src(256), stop);
    auto hi = convergents(src(512), stop);
    REQUIRE(lo.size() == hi.size());
    for (std::size_t i = 0; i < lo.size(); ++i) CHECK(lo[i].partial_quotient == hi[i].partial_quotient);
  }

  TEST_CASE("best approximation by brute force, q <= 1000") {
    ExpansionStop stop;
    stop.denominator = 1000;
    auto cs = convergents(sqrt_source(2), stop);
    for (const auto& c : cs) {
      if (c.q > 1000) break;
      const long qi = c.q.get_si();
      const long double e = sqrt2_error(c.p.get_si(), qi);
      for (long q = 1; q < qi; ++q) {
        CHECK(sqrt2_error(std::lround(q * std::sqrt(2.0L)), q) > e);
      }
    }
  }

  TEST_CASE("Legendre reduction for sqrt2 matches a fraction scan") {
    auto rhs = [](long x, Precision p) { return 1 / pow(Interval(2, p), x); };
    const auto res = legendre_reduce(sqrt_source(2), 1000, rhs);
    const long qn = res.convergent.q.get_si();
    CHECK(qn == 2378);
    long double best = 1;
    for (long q = 1; q <= qn; ++q) {
      best = std::min(best, sqrt2_error(std::lround(q * std::sqrt(2.0L)), q));
    }
    long x_oracle = 0;
    while (std::ldexp(1.0L, -(x_oracle + 1)) > best) ++x_oracle;
    CHECK(res.x_max == x_oracle);
  }

  TEST_CASE("Legendre reduction for the sign chain") {
    const mpz_class M("27200000000000000000000000");
    auto rhs = [&](long x, Precision p) {
      // (1.5 M + 1) / (2^(x - 0.2) log 2)
      Interval num = Interval(M, p) * Interval::ratio(3, 2, p) + 1;
      Interval den = pow(Interval(2, p), Interval::ratio(5 * x - 1, 5, p)) * log_of(2, p);
      return num / den;
    };
    const auto res = legendre_reduce(log_ratio_source(3, 2), mpz_class("4760000000000000000000000000000"), rhs, 3);
    CHECK(res.convergent.index == 61);
    CHECK(res.x_max == 296);
  }

  TEST_CASE("a huge right-hand side never excludes") {
    auto rhs = [](long, Precision p) { return Interval(1000000, p); };
    CHECK_THROWS_AS(legendre_reduce(sqrt_source(2), 1000, rhs, 1, 1000), GiveUpError);
  }
}
