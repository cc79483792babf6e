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

#include <functional>
#include <optional>
#include <vector>

#include "mdt/interval.hpp"

namespace mdt {

// Square integer basis stored by columns.
struct LatticeBasis {
  std::vector<std::vector<mpz_class>> columns;

  std::size_t dim() const { return columns.size(); }
  static LatticeBasis identity(std::size_t d);
};

struct GramSchmidt {
  std::vector<mpq_class> norms2;            // |b_i*|^2
  std::vector<std::vector<mpq_class>> mu;   // mu[i][j], j < i
};

// Exact rational Gram-Schmidt orthogonalization of the columns.
GramSchmidt gram_schmidt(const LatticeBasis& basis);
// det(B^T B), exact.
mpz_class gram_determinant(const LatticeBasis& basis);
// Size reduction and the Lovasz condition, checked exactly.
bool is_lll_reduced(const LatticeBasis& basis, const mpq_class& delta);

// Integral LLL (exact integer arithmetic). The result is verified to be
// delta-reduced with an unchanged Gram determinant. Throws DomainError for
// linearly dependent columns or delta outside (1/4, 1).
LatticeBasis lll_reduce(const LatticeBasis& basis, const mpq_class& delta = mpq_class(3, 4));

struct ReductionCertificate {
  mpz_class C;
  mpz_class M;
  mpz_class S;                // 3 M^2
  mpq_class T;                // (1 + 4 M) / 2
  std::vector<mpz_class> rounded;  // [C log gamma_i]
  LatticeBasis reduced;
  mpq_class c2;               // smallest |b_i*|^2, exact
  Interval c;
  std::optional<Interval> lower_bound;
};

// Lattice built from `logs` with scale C; lower bound for
// |x_1 log g_1 + ... + x_n log g_n| over integer vectors with |x_i| <= M,
// present when c^2 > T^2 + S. Requires C > M^4 (PreconditionError) and
// certified rounding of every C log g_i (PrecisionError).
ReductionCertificate linform_certificate(const std::vector<Interval>& logs, const mpz_class& M,
                                         const mpz_class& C);
std::optional<Interval> linform_lower_bound(const std::vector<Interval>& logs,
                                            const mpz_class& M, const mpz_class& C);

using LogsSource = std::function<std::vector<Interval>(Precision)>;

struct AutoReduceResult {
  mpz_class C_used;
  Interval bound;
  ReductionCertificate certificate;
  int escalations = 0;
};

// Multiplies C by 10 until the bound exists. Throws GiveUpError once C
// exceeds C_seed * 10^10.
AutoReduceResult auto_reduce(const LogsSource& logs, const mpz_class& M, const mpz_class& C_seed,
                             Precision start = kDefaultPrecision);

}  // namespace mdt
