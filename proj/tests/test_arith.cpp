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
#include <map>

#include "doctest.h"
#include "mdt/arith.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using mdt::Factorization;
using mdt::PrimePower;

namespace {

std::map<mpz_class, unsigned long> as_map(const Factorization& f) {
  std::map<mpz_class, unsigned long> m;
  for (const auto& pp : f.factors()) m[pp.prime] = pp.exponent;
  return m;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("factorize small composites") {
    auto f = mdt::factorize(900);
    CHECK(as_map(f) == std::map<mpz_class, unsigned long>{{2, 2}, {3, 2}, {5, 2}});
    CHECK(f.value() == 900);
    // 2 * 78^2 - 1
    auto g = mdt::factorize(mpz_class(2 * 78 * 78 - 1));
    CHECK(as_map(g) == std::map<mpz_class, unsigned long>{{23, 3}});
    CHECK(f.exponent_of(3) == 2);
    CHECK(f.exponent_of(7) == 0);
    CHECK_THROWS_AS(mdt::factorize(1), mdt::DomainError);
    CHECK_THROWS_AS(mdt::factorize(mpz_class(-6)), mdt::DomainError);
  }

  TEST_CASE("factorize inverts multiplication") {
    const auto primes = oracle::primes_upto(2000);
    for (int i = 0; i < 300; ++i) {
      // smooth: random exponents over small primes
      std::map<mpz_class, unsigned long> want;
      mpz_class n = 1;
      int k = static_cast<int>(oracle::uniform(1, 6));
      for (int j = 0; j < k; ++j) {
        long p = primes[oracle::uniform(0, 30)];
        unsigned long e = oracle::uniform(1, 4);
        want[p] += e;
        n *= oracle::pow(p, e);
      }
      if (n < 2) continue;
      CHECK(as_map(mdt::factorize(n)) == want);
    }
    // semiprimes near 64 bits
    for (int i = 0; i < 40; ++i) {
      mpz_class p, q;
      mpz_class lo = oracle::pow(2, 31) + oracle::uniform(0, 1 << 30);
      mpz_nextprime(p.get_mpz_t(), lo.get_mpz_t());
      lo = oracle::pow(2, 32) + oracle::uniform(0, 1 << 30);
      mpz_nextprime(q.get_mpz_t(), lo.get_mpz_t());
      auto f = mdt::factorize(mpz_class(p * q));
      CHECK(as_map(f) == std::map<mpz_class, unsigned long>{{p, 1}, {q, 1}});
    }
  }

  TEST_CASE("vp") {
    CHECK(mdt::vp(3, mpz_class(15)) == 1);
    CHECK(mdt::vp(2, oracle::pow(7, 5) + 1) == oracle::val(2, oracle::pow(7, 5) + 1));
    CHECK(mdt::vp(2, oracle::pow(7, 5) + 1) == 3);
    CHECK(mdt::vp(5, mpz_class(7)) == 0);
    CHECK(mdt::vp(3, mpz_class(-81)) == 4);
    CHECK_THROWS_AS(mdt::vp(3, mpz_class(0)), mdt::DomainError);
  }

  TEST_CASE("perfect_power") {
    auto p8 = mdt::perfect_power(8);
    REQUIRE(p8);
    CHECK(*p8 == mdt::PowerForm{2, 3});
    // 2^5 * 7 + 1
    auto p225 = mdt::perfect_power(225);
    REQUIRE(p225);
    CHECK(*p225 == mdt::PowerForm{15, 2});
    CHECK_FALSE(mdt::perfect_power(10));
    CHECK(mdt::perfect_power(64)->exponent == 6);
  }

  TEST_CASE("perfect_power exponent is a multiple of k") {
    for (int i = 0; i < 500; ++i) {
      long base = oracle::uniform(2, 5000);
      unsigned long k = oracle::uniform(2, 12);
      auto pf = mdt::perfect_power(oracle::pow(base, k));
      REQUIRE(pf);
      CHECK(pf->exponent % k == 0);
      CHECK(oracle::pow(pf->base, pf->exponent) == oracle::pow(base, k));
    }
  }

  TEST_CASE("is_power_of against repeated division") {
    CHECK(mdt::is_power_of(5, 1) == 0ul);
    CHECK(mdt::is_power_of(33, 35937) == 3ul);
    CHECK_FALSE(mdt::is_power_of(33, 34));
    for (int i = 0; i < 300; ++i) {
      long b = oracle::uniform(2, 60);
      mpz_class n = oracle::pow(b, oracle::uniform(0, 30));
      if (oracle::uniform(0, 1)) n += oracle::uniform(1, 3);
      mpz_class m = n;
      unsigned long e = 0;
      while (m % b == 0) {
        m /= b;
        ++e;
      }
      auto got = mdt::is_power_of(b, n);
      if (m == 1) {
        CHECK(got == e);
      } else {
        CHECK_FALSE(got);
      }
    }
  }

  TEST_CASE("radical") {
    CHECK(mdt::radical(mdt::factorize(900)) == 30);
    CHECK(mdt::radical(mdt::factorize(1093)) == 1093);
  }

  TEST_CASE("primitive_divisor examples") {
    using mdt::Sign;
    auto r6 = mdt::primitive_divisor(2, 1, 6, Sign::kMinus);
    REQUIRE(std::holds_alternative<mdt::ZsigmondyException>(r6));
    CHECK(std::get<mdt::ZsigmondyException>(r6).which == mdt::ZsigmondyCase::kN6Pair21);
    auto r4 = mdt::primitive_divisor(2, 1, 4, Sign::kMinus);
    REQUIRE(std::holds_alternative<mdt::PrimeWitness>(r4));
    CHECK(std::get<mdt::PrimeWitness>(r4).prime == 5);
    auto r3 = mdt::primitive_divisor(2, 1, 3, Sign::kPlus);
    REQUIRE(std::holds_alternative<mdt::ZsigmondyException>(r3));
    CHECK(std::get<mdt::ZsigmondyException>(r3).which == mdt::ZsigmondyCase::kN3Pair21Plus);
    CHECK_THROWS_AS(mdt::primitive_divisor(4, 2, 3, Sign::kMinus), mdt::DomainError);
    CHECK_THROWS_AS(mdt::primitive_divisor(2, 3, 3, Sign::kMinus), mdt::DomainError);
  }

  TEST_CASE("cyclotomic values") {
    CHECK(mdt::cyclotomic_value(1, 5, 1) == 4);
    CHECK(mdt::cyclotomic_value(6, 2, 1) == 3);
    CHECK(mdt::cyclotomic_value(12, 2, 1) == 13);
    CHECK(mdt::cyclotomic_value(5, 3, 2) == (oracle::pow(3, 5) - oracle::pow(2, 5)) / 1);
  }

  TEST_CASE("valuation identities, 10^4 random cases each") {
    for (auto o : {props::lte_minus(10000), props::lte_plus(10000), props::two_adic_minus(10000),
                   props::two_adic_plus(10000)}) {
      INFO(o.first);
      CHECK(o.cases == 10000);
      CHECK(o.failures == 0);
    }
    auto v3 = props::three_adic_powers_of_two(10000);
    INFO(v3.first);
    CHECK(v3.failures == 0);
  }

  TEST_CASE("Zsigmondy exceptions against gcd stripping") {
    long exceptions = 0;
    auto o = props::zsigmondy_scan(20, 50, &exceptions);
    INFO(o.first);
    CHECK(o.failures == 0);
    CHECK(exceptions > 0);
  }
}
