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
#include "mdt/lattice.hpp"
#include "oracles.hpp"

using namespace mdt;

namespace {

using Col = std::vector<mpz_class>;

mpq_class dot(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Textbook Gram-Schmidt over Q and the Lovasz test.
bool lovasz_oracle(const LatticeBasis& B, const mpq_class& delta) {
  const std::size_t n = B.dim();
  std::vector<std::vector<mpq_class>> b(n), bs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : B.columns[i]) b[i].emplace_back(v);
  }
  std::vector<mpq_class> nrm(n);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    bs[i] = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = dot(b[i], bs[j]) / nrm[j];
      for (std::size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
    }
    nrm[i] = dot(bs[i], bs[i]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(mu[i][j]) > mpq_class(1, 2)) return false;
    }
    if (nrm[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * nrm[i - 1]) return false;
  }
  return true;
}

LatticeBasis random_basis(std::size_t d, long range) {
  for (;;) {
    LatticeBasis B;
    for (std::size_t i = 0; i < d; ++i) {
      Col c;
      for (std::size_t j = 0; j < d; ++j) c.emplace_back(oracle::uniform(-range, range));
      B.columns.push_back(c);
    }
    if (gram_determinant(B) != 0) return B;
  }
}

std::vector<Interval> logs_of(const std::vector<long>& v, Precision p) {
  std::vector<Interval> out;
  for (long x : v) out.push_back(log_of(x, p));
  return out;
}

// Every nonzero coefficient vector with entries in [-M, M].
template <class F>
void for_each_vector(long M, F&& f) {
  std::vector<long> x(4, -M);
  for (;;) {
    bool nonzero = false;
    for (long v : x) nonzero |= v != 0;
    if (nonzero) f(x);
    std::size_t i = 0;
    while (i < 4 && x[i] == M) x[i++] = -M;
    if (i == 4) break;
    ++x[i];
  }
}

Interval form_value(const std::vector<long>& x, const std::vector<Interval>& logs) {
  Interval s(0, logs[0].precision());
  for (std::size_t i = 0; i < 4; ++i) s += x[i] * logs[i];
  return s;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("identity is already reduced") {
    auto I = LatticeBasis::identity(4);
    auto R = lll_reduce(I);
    CHECK(R.columns == I.columns);
    CHECK(is_lll_reduced(I, mpq_class(3, 4)));
  }

  TEST_CASE("reduction keeps the Gram determinant and satisfies Lovasz") {
    for (int i = 0; i < 60; ++i) {
      const std::size_t d = oracle::uniform(2, 5);
      auto B = random_basis(d, oracle::uniform(5, 100000));
      auto R = lll_reduce(B);
      CHECK(gram_determinant(R) == gram_determinant(B));
      CHECK(lovasz_oracle(R, mpq_class(3, 4)));
      CHECK(is_lll_reduced(R, mpq_class(3, 4)));
      auto R99 = lll_reduce(B, mpq_class(99, 100));
      CHECK(lovasz_oracle(R99, mpq_class(99, 100)));
    }
  }

  TEST_CASE("dependent columns are rejected") {
    LatticeBasis B;
    B.columns = {{1, 2}, {2, 4}};
    CHECK_THROWS_AS(lll_reduce(B), DomainError);
  }

  TEST_CASE("exact Gram-Schmidt norms") {
    LatticeBasis B;
    B.columns = {{3, 1}, {2, 2}};
    auto gs = gram_schmidt(B);
    CHECK(gs.norms2[0] == 10);
    CHECK(gs.mu[1][0] == mpq_class(4, 5));
    // det^2 = 16 = 10 * |b2*|^2
    CHECK(gs.norms2[1] == mpq_class(8, 5));
  }

  TEST_CASE("bound is below all 80 unit forms") {
    const auto logs = logs_of({2, 3, 5, 7}, kDefaultPrecision);
    auto bound = linform_lower_bound(logs, 1, 1000000);
    REQUIRE(bound);
    CHECK(proven(gt(*bound, Interval(0, kDefaultPrecision))));
    int forms = 0;
    for_each_vector(1, [&](const std::vector<long>& x) {
      ++forms;
      CHECK(proven(ge(abs(form_value(x, logs)), *bound)));
    });
    CHECK(forms == 80);
  }

  TEST_CASE("scale must exceed M^4") {
    const auto logs = logs_of({2, 3, 5, 7}, kDefaultPrecision);
    CHECK_THROWS_AS(linform_lower_bound(logs, 3, 81), PreconditionError);
  }

  TEST_CASE("soundness on random quadruples, M <= 3") {
    int with_bound = 0;
    for (int i = 0; i < 20; ++i) {
      std::vector<long> g;
      for (int j = 0; j < 4; ++j) g.push_back(oracle::uniform(2, 500));
      const long M = oracle::uniform(1, 3);
      const auto logs = logs_of(g, kDefaultPrecision);
      std::optional<Interval> bound;
      try {
        bound = linform_lower_bound(logs, M, 100000000);
      } catch (const PrecisionError&) {
        continue;
      }
      if (!bound) continue;
      ++with_bound;
      for_each_vector(M, [&](const std::vector<long>& x) {
        CHECK_FALSE(proven(lt(abs(form_value(x, logs)), *bound)));
      });
    }
    CHECK(with_bound > 0);
  }

  TEST_CASE("auto_reduce keeps a working seed") {
    LogsSource src = [](Precision p) { return logs_of({2, 3, 5, 7}, p); };
    auto r = auto_reduce(src, 1, 1000000);
    CHECK(r.C_used == 1000000);
    CHECK(r.escalations == 0);
  }

  TEST_CASE("x = 3 with the minus-sign logs") {
    const mpz_class M("8060000000000000000000000000");
    mpz_class seed = 1;
    while (seed <= M * M * M * M) seed *= 10;
    LogsSource src = [](Precision p) { return logs_of({2, 7, 3, 15}, p); };
    auto r = auto_reduce(src, M, seed);
    const Interval U = -log(r.bound) / log_of(2, r.bound.precision());
    CHECK(proven(lt(U, Interval(449, kDefaultPrecision))));
    CHECK(r.certificate.S == 3 * M * M);
    CHECK(r.certificate.T == mpq_class(1 + 4 * M, 2));
  }
}
