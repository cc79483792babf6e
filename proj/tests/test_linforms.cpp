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

#include "doctest.h"
#include "mdt/linforms.hpp"

using namespace mdt;

namespace {

constexpr Precision P = kDefaultPrecision;

bool overlaps(const Interval& a, const Interval& b) {
  return !proven(lt(a, b)) && !proven(gt(a, b));
}

LinearForm form2(long c1, long a1, long c2, long a2) {
  return LinearForm({{c1, IntegerArg{a1}}, {c2, IntegerArg{a2}}});
}

}  // namespace

TEST_SUITE("linforms") {
  TEST_CASE("heights and logs") {
    CHECK(overlaps(height(IntegerArg{3}), log_of(3, P)));
    CHECK(height(IntegerArg{3}).lo_d() > 1.0986);
    CHECK(height(IntegerArg{3}).hi_d() < 1.0987);
    const Interval unit_log = log(sqrt_of(2, P) + 1);
    CHECK(overlaps(height(UnitArg{}), unit_log / 2));
    CHECK(overlaps(log_value(UnitArg{}), unit_log));
    // (3 - 2 sqrt2) / (3 + 2 sqrt2) = (sqrt2 - 1)^4
    CHECK(overlaps(log_value(QuadraticSurd{3, 2}), -4 * unit_log));
    CHECK_THROWS_AS(log_value(QuadraticSurd{0, 0}), DomainError);
    CHECK(log_value(IntegerArg{1}).contains(mpq_class(0)));
    CHECK_THROWS_AS(log_value(IntegerArg{0}), DomainError);
  }

  TEST_CASE("form evaluation and vanishing") {
    CHECK(form2(2, 2, -1, 4).vanishes());
    CHECK_FALSE(form2(1, 2, -1, 3).vanishes());
    CHECK(form2(3, 2, -1, 8).value(P).contains(mpq_class(0)));
    CHECK(LinearForm({{6, IntegerArg{6}}, {-3, IntegerArg{4}}, {-6, IntegerArg{3}}}).vanishes());
    CHECK_THROWS_AS(LinearForm({}), PreconditionError);
    CHECK_THROWS_AS(form2(0, 2, 0, 3), PreconditionError);
  }

  TEST_CASE("Matveev bound against the direct formula") {
    const Interval want = -Interval::ratio(14, 10, P) * pow(sqrt_of(2, P), 9) * pow(Interval(30, P), 5) *
                          log_of(2, P) * log_of(3, P);
    const Interval got = matveev_lower_bound(form2(1, 2, -1, 3), 1, P);
    CHECK(overlaps(got, want));
    CHECK(mpq_class(abs(got - want).hi_q()) < mpq_class(1, 1000000));
    CHECK(overlaps(matveev_constant(2, P), Interval::ratio(14, 10, P) * pow(sqrt_of(2, P), 9) *
                                               pow(Interval(30, P), 5)));
    CHECK_THROWS_AS(matveev_lower_bound(form2(2, 2, -1, 4), 2, P), DomainError);
    CHECK_THROWS_AS(matveev_lower_bound(form2(5, 2, -1, 3), 4, P), PreconditionError);
  }

  TEST_CASE("Matveev bound is monotone") {
    const auto base = matveev_lower_bound(form2(1, 2, -1, 3), 10, P);
    CHECK(proven(le(matveev_lower_bound(form2(1, 2, -1, 3), 1000, P), base)));
    CHECK(proven(le(matveev_lower_bound(form2(1, 2, -1, 5), 10, P), base)));
    CHECK(proven(le(matveev_lower_bound(form2(1, 7, -1, 3), 10, P), base)));
  }

  TEST_CASE("corollary bound, small instance") {
    CorollaryInput in;
    in.b1 = 1;
    in.b2 = 1;
    in.D = 1;
    in.log_A1 = corollary_log_A(IntegerArg{2}, 1, P);
    in.log_A2 = corollary_log_A(IntegerArg{3}, 1, P);
    CHECK(in.log_A1.contains(mpq_class(1)));
    CHECK(overlaps(in.log_A2, log_of(3, P)));
    CHECK(overlaps(corollary_b_prime(in), 1 / log_of(3, P) + 1));
    const Interval want = -Interval::ratio(203, 10, P) * 324 * log_of(3, P);
    CHECK(overlaps(laurent_corollary_bound(in, LaurentVariant::kC20_3_m18), want));
  }

  TEST_CASE("corollary b' with D = 2") {
    CorollaryInput in;
    in.b1 = 2;
    in.b2 = 41;
    in.D = 2;
    in.log_A1 = Interval::ratio(1, 2, P);
    in.log_A2 = log_of(1000, P);
    CHECK(overlaps(corollary_b_prime(in), 1 / log_of(1000, P) + 41));
  }

  TEST_CASE("x^2 - 2 constants") {
    const auto k = x2minus2_constants(P);
    CHECK(proven(lt(k.C_max, Interval::ratio(471, 10000, P))));
    CHECK(proven(lt(k.C_prime_max, Interval::ratio(1158, 10000, P))));
    CHECK(proven(gt(k.a2_factor, Interval::ratio(200023, 100000, P))));
    CHECK(proven(lt(k.a2_factor, Interval::ratio(200024, 100000, P))));
    CHECK(proven(ge(k.a1, 27 * log(sqrt_of(2, P) + 1))));
    CHECK(k.params.mu == mpq_class(11, 20));
    CHECK(k.params.rho == 26);
    for (const auto& s : k.steps) {
      INFO(s.name);
      CHECK(proven(s.status));
    }
    CHECK(proven(lt(k.sample.C, Interval::ratio(471, 10000, P))));
  }

  TEST_CASE("Laurent theorem rejects unmet conditions") {
    const auto k = x2minus2_constants(P);
    LaurentInput in;
    in.D = 2;
    in.b1 = 2;
    in.b2 = 3;
    in.log_alpha1 = log_value(UnitArg{}, P);
    in.log_alpha2 = log_of(5, P);
    in.height1 = height(UnitArg{}, P);
    in.height2 = log_of(5, P);
    // tiny a1, a2 violate the size conditions
    CHECK_THROWS_AS(laurent_theorem_bound(k.params, Interval(1, P), Interval(1, P), Interval(1, P), in),
                    PreconditionError);
  }

  TEST_CASE("exponent bound for x^2 - 2 = y^n") {
    const auto r = x2minus2_exponent_bound(1, P);
    CHECK(r.n_max == 1237);
    CHECK(r.sweep_lo == 1289);
    CHECK(r.sweep_hi == 17000);
    for (const auto& s : r.steps) {
      INFO(s.name);
      CHECK(proven(s.status));
    }
  }

  TEST_CASE("bound chain for both signs") {
    for (Sign s : {Sign::kPlus, Sign::kMinus}) {
      const auto b = sit_pipeline(s);
      CHECK(b.M_max >= mpz_class("27200000000000000000000000"));
      CHECK(b.M_max * 100 <= mpz_class("27200000000000000000000000") * 105);
      CHECK(b.x_max * 100 <= 175000 * 105);
      CHECK(b.r_max * 100 <= mpz_class("4760000000000000000000000000000") * 105);
      CHECK(b.r_reduced * 100 <= mpz_class("8060000000000000000000000000") * 105);
      CHECK(b.x_reduced == 296);
      CHECK(b.cf_index == 61);
      CHECK(proven(gt(b.cf_error, Interval::from_decimal("3.43e-64", P))));
      CHECK(proven(lt(b.M_root, Interval(b.M_max, P))));
      for (const auto& st : b.steps) {
        INFO(st.name);
        CHECK(proven(st.status));
      }
    }
  }

  TEST_CASE("bound chain is stable under more precision") {
    PipelineOptions o;
    o.precision = 1024;
    const auto hi = sit_pipeline(Sign::kPlus, o);
    const auto lo = sit_pipeline(Sign::kPlus);
    CHECK(hi.M_max == lo.M_max);
    CHECK(hi.x_reduced == lo.x_reduced);
    CHECK(hi.r_reduced == lo.r_reduced);
  }
}
