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

#include "mdt/muldep.hpp"

#include <algorithm>
#include <set>

#include "mdt/arith.hpp"

namespace mdt {

namespace {

void validate(const Tuple& tuple) {
  if (tuple.empty()) throw DomainError("empty tuple");
  for (const auto& z : tuple) {
    if (z <= 1) throw DomainError("tuple entries must be > 1");
  }
}

std::vector<std::vector<mpz_class>> select_rows(const ExponentMatrix& em,
                                                unsigned mask) {
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t i = 0; i < em.rows.size(); ++i) {
    if (mask & (1u << i)) out.push_back(em.rows[i]);
  }
  return out;
}

// Primitive integer vector x != 0 with sum_i x_i * rows[i] = 0; requires
// rank(rows) < rows.size().
IntVector left_kernel_vector(const std::vector<std::vector<mpz_class>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  // A = rows^T, shape cols x n; solve A x = 0.
  std::vector<std::vector<mpq_class>> a(cols, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[j][i] = rows[i][j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < cols; ++c) {
    std::size_t p = r;
    while (p < cols && a[p][c] == 0) ++p;
    if (p == cols) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) {
    ++free_col;
  }
  if (free_col >= n) throw std::logic_error("left_kernel_vector on a full-rank matrix");
  std::vector<mpq_class> x(n, 0);
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free_col];
  mpz_class l = 1;
  for (auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntVector out(n);
  mpz_class g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class s = x[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& v : out) v /= g;
  for (const auto& v : out) {
    if (v != 0) {
      if (v < 0) {
        for (auto& w : out) w = -w;
      }
      break;
    }
  }
  return out;
}

bool is_2a5b(long v) {
  if (v < 1) return false;
  while (v % 2 == 0) v /= 2;
  while (v % 5 == 0) v /= 5;
  return v == 1;
}

bool is_pow2(long v) { return v >= 1 && (v & (v - 1)) == 0; }

bool is_pow10(long v) {
  if (v < 1) return false;
  while (v % 10 == 0) v /= 10;
  return v == 1;
}

}  // namespace

ExponentMatrix exponent_matrix(const Tuple& tuple) {
  validate(tuple);
  std::vector<Factorization> fs;
  std::set<mpz_class> primes;
  for (const auto& z : tuple) {
    fs.push_back(factorize(z));
    for (const auto& pp : fs.back().factors()) primes.insert(pp.prime);
  }
  ExponentMatrix em;
  em.primes.assign(primes.begin(), primes.end());
  for (const auto& f : fs) {
    std::vector<mpz_class> row;
    for (const auto& p : em.primes) row.emplace_back(f.exponent_of(p));
    em.rows.push_back(std::move(row));
  }
  return em;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

bool witness_holds(const Tuple& tuple, const IntVector& k) {
  if (k.size() != tuple.size()) return false;
  bool nonzero = false;
  mpz_class pos = 1, neg = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    nonzero = true;
    mpz_class e = abs(k[i]);
    if (!e.fits_ulong_p()) throw DomainError("witness exponent too large to expand");
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), tuple[i].get_mpz_t(), e.get_ui());
    (k[i] > 0 ? pos : neg) *= t;
  }
  return nonzero && pos == neg;
}

std::optional<int> classify_k(const Tuple& tuple) {
  ExponentMatrix em = exponent_matrix(tuple);
  const std::size_t n = tuple.size();
  if (n > 20) throw DomainError("classify_k supports at most 20 entries");
  for (std::size_t k = 2; k <= n; ++k) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      if (bareiss_rank(select_rows(em, mask)) < k) return static_cast<int>(k);
    }
  }
  return std::nullopt;
}

DependenceClass is_multiplicatively_dependent(const Tuple& tuple) {
  ExponentMatrix em = exponent_matrix(tuple);
  DependenceClass out;
  if (bareiss_rank(em.rows) == tuple.size()) return out;
  out.dependent = true;
  out.witness = left_kernel_vector(em.rows);
  if (!witness_holds(tuple, *out.witness)) {
    throw std::logic_error("kernel witness failed exact verification");
  }
  out.k = classify_k(tuple);
  return out;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kFam1:
      return "Fam1";
    case Family::kNewFamily:
      return "NewFamily";
    default:
      return "Sporadic";
  }
}

Family classify_family(long a, long b, long c) {
  if (!(1 < a && a < b && b < c)) throw DomainError("classify_family expects 1 < a < b < c");
  const long t[3] = {a, b, c};
  if (a == 2) {
    for (int i = 1; i < 3; ++i) {
      if (t[i] != 8) continue;
      long e = t[3 - i];
      if (is_2a5b(e + 2)) return Family::kFam1;
    }
  }
  if (a == 2 && b >= 6 && is_pow2(b + 2) && c == b * (b + 2)) {
    return Family::kNewFamily;
  }
  return Family::kSporadic;
}

bool in_a2_set(long a, long b, long c) {
  if (a != 2) return false;
  Family f = classify_family(a, b, c);
  if (f != Family::kSporadic) return true;
  return (b == 4 && c == 14) || (b == 6 && c == 16);
}

bool in_three_2md_set(long a, long b, long c) {
  if (a != 2) return false;
  if (b == 6 && c == 8) return true;
  if (b != 8) return false;
  return (is_pow2(c + 2) && c + 2 >= 16) || (is_pow10(c + 2) && c + 2 >= 100);
}

}  // namespace mdt
