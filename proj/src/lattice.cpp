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

#include "mdt/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mdt {

namespace {

using Vec = std::vector<mpz_class>;

mpz_class dot(const Vec& a, const Vec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  // Nearest integer to num/den for den > 0, halves rounded up.
  mpz_class r;
  mpz_class n2 = 2 * num + den, d2 = 2 * den;
  mpz_fdiv_q(r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  return r;
}

void check_square(const LatticeBasis& basis) {
  for (const auto& col : basis.columns) {
    if (col.size() != basis.dim()) throw DomainError("lattice basis must be square");
  }
}

// Cohen's integral LLL on columns b[1..n] (index 0 unused).
class IntegralLll {
 public:
  IntegralLll(std::vector<Vec> b, mpq_class delta)
      : n_(b.size() - 1), b_(std::move(b)), delta_(std::move(delta)),
        d_(n_ + 1), lam_(n_ + 1, Vec(n_ + 1)) {}

  std::vector<Vec> run() {
    if (n_ == 0) return b_;
    d_[0] = 1;
    d_[1] = dot(b_[1], b_[1]);
    if (d_[1] == 0) throw DomainError("lattice basis has dependent columns");
    std::size_t k = 2, kmax = 1;
    const mpz_class& dn = delta_.get_num();
    const mpz_class& dd = delta_.get_den();
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (std::size_t j = 1; j <= k; ++j) {
          mpz_class u = dot(b_[k], b_[j]);
          for (std::size_t i = 1; i < j; ++i) {
            u = (d_[i] * u - lam_[k][i] * lam_[j][i]) / d_[i - 1];
          }
          if (j < k) {
            lam_[k][j] = u;
          } else {
            d_[k] = u;
            if (u == 0) throw DomainError("lattice basis has dependent columns");
          }
        }
      }
      for (;;) {
        redi(k, k - 1);
        // Lovasz: dd * d_k d_{k-2} >= dn * d_{k-1}^2 - dd * lambda^2
        mpz_class lhs = dd * d_[k] * d_[k - 2];
        mpz_class rhs = dn * d_[k - 1] * d_[k - 1] - dd * lam_[k][k - 1] * lam_[k][k - 1];
        if (lhs < rhs) {
          swapi(k, kmax);
          k = std::max<std::size_t>(2, k - 1);
          continue;
        }
        break;
      }
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
    }
    return b_;
  }

 private:
  void redi(std::size_t k, std::size_t l) {
    mpz_class two_lam = 2 * lam_[k][l];
    if (abs(two_lam) <= d_[l]) return;
    mpz_class q = round_div(lam_[k][l], d_[l]);
    for (std::size_t t = 0; t < b_[k].size(); ++t) b_[k][t] -= q * b_[l][t];
    lam_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swapi(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    mpz_class lam = lam_[k][k - 1];
    mpz_class big_b = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      mpz_class t = lam_[i][k];
      lam_[i][k] = (d_[k] * lam_[i][k - 1] - lam * t) / d_[k - 1];
      lam_[i][k - 1] = (big_b * t + lam * lam_[i][k]) / d_[k];
    }
    d_[k - 1] = big_b;
  }

  std::size_t n_;
  std::vector<Vec> b_;
  mpq_class delta_;
  Vec d_;
  std::vector<Vec> lam_;
};

}  // namespace

LatticeBasis LatticeBasis::identity(std::size_t d) {
  LatticeBasis b;
  b.columns.assign(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) b.columns[i][i] = 1;
  return b;
}

GramSchmidt gram_schmidt(const LatticeBasis& basis) {
  check_square(basis);
  const std::size_t n = basis.dim();
  GramSchmidt gs;
  gs.norms2.resize(n);
  gs.mu.assign(n, std::vector<mpq_class>(n, 0));
  std::vector<std::vector<mpq_class>> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> v(basis.columns[i].begin(), basis.columns[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      if (gs.norms2[j] == 0) throw DomainError("lattice basis has dependent columns");
      mpq_class ip = 0;
      for (std::size_t t = 0; t < n; ++t) ip += mpq_class(basis.columns[i][t]) * star[j][t];
      gs.mu[i][j] = ip / gs.norms2[j];
      for (std::size_t t = 0; t < n; ++t) v[t] -= gs.mu[i][j] * star[j][t];
    }
    mpq_class nn = 0;
    for (const auto& x : v) nn += x * x;
    gs.norms2[i] = nn;
    star[i] = std::move(v);
  }
  return gs;
}

mpz_class gram_determinant(const LatticeBasis& basis) {
  GramSchmidt gs = gram_schmidt(basis);
  mpq_class prod = 1;
  for (const auto& v : gs.norms2) prod *= v;
  if (prod.get_den() != 1) throw std::logic_error("Gram determinant is not integral");
  return prod.get_num();
}

bool is_lll_reduced(const LatticeBasis& basis, const mpq_class& delta) {
  GramSchmidt gs = gram_schmidt(basis);
  const std::size_t n = basis.dim();
  const mpq_class half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(gs.mu[i][j]) > half) return false;
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class m = gs.mu[k][k - 1];
    if (gs.norms2[k] < (delta - m * m) * gs.norms2[k - 1]) return false;
  }
  return true;
}

LatticeBasis lll_reduce(const LatticeBasis& basis, const mpq_class& delta) {
  check_square(basis);
  if (!(delta > mpq_class(1, 4) && delta < 1)) throw DomainError("delta must lie in (1/4, 1)");
  const mpz_class det_in = gram_determinant(basis);
  if (det_in == 0) throw DomainError("lattice basis has dependent columns");
  std::vector<Vec> b(basis.dim() + 1);
  for (std::size_t i = 0; i < basis.dim(); ++i) b[i + 1] = basis.columns[i];
  auto reduced = IntegralLll(std::move(b), delta).run();
  LatticeBasis out;
  out.columns.assign(reduced.begin() + 1, reduced.end());
  if (!is_lll_reduced(out, delta) || gram_determinant(out) != det_in) {
    throw std::logic_error("LLL output failed exact verification");
  }
  return out;
}

ReductionCertificate linform_certificate(const std::vector<Interval>& logs, const mpz_class& M,
                                         const mpz_class& C) {
  const std::size_t n = logs.size();
  if (n < 2) throw DomainError("linear form needs at least two logarithms");
  if (M < 1) throw DomainError("coefficient bound must be >= 1");
  mpz_class m4;
  mpz_pow_ui(m4.get_mpz_t(), M.get_mpz_t(), 4);
  if (!(C > m4)) throw PreconditionError("scale C must exceed M^4");
  ReductionCertificate cert;
  cert.C = C;
  cert.M = M;
  cert.S = 3 * M * M;
  cert.T = mpq_class(1 + 4 * M, 2);
  cert.T.canonicalize();
  Precision prec = logs[0].precision();
  for (const auto& l : logs) {
    auto r = unique_round(Interval(C, l.precision()) * l);
    if (!r) {
      throw PrecisionError("rounding of C*log(gamma) is ambiguous at " +
                           std::to_string(l.precision()) + " bits");
    }
    cert.rounded.push_back(*r);
    prec = std::max(prec, l.precision());
  }
  LatticeBasis a;
  a.columns.assign(n, Vec(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    if (j + 1 < n) a.columns[j][j] = 1;
    a.columns[j][n - 1] = cert.rounded[j];
  }
  cert.reduced = lll_reduce(a);
  GramSchmidt gs = gram_schmidt(cert.reduced);
  cert.c2 = *std::min_element(gs.norms2.begin(), gs.norms2.end());
  cert.c = sqrt(Interval(cert.c2, prec));
  if (cert.c2 > cert.T * cert.T + cert.S) {
    Interval root = sqrt(Interval(mpq_class(cert.c2 - cert.S), prec));
    cert.lower_bound = (root - Interval(cert.T, prec)) / Interval(C, prec);
  }
  return cert;
}

std::optional<Interval> linform_lower_bound(const std::vector<Interval>& logs,
                                            const mpz_class& M, const mpz_class& C) {
  return linform_certificate(logs, M, C).lower_bound;
}

AutoReduceResult auto_reduce(const LogsSource& logs, const mpz_class& M, const mpz_class& C_seed,
                             Precision start) {
  mpz_class m4;
  mpz_pow_ui(m4.get_mpz_t(), M.get_mpz_t(), 4);
  if (!(C_seed > m4)) throw PreconditionError("seed C must exceed M^4");
  mpz_class ten10;
  mpz_ui_pow_ui(ten10.get_mpz_t(), 10, 10);
  const mpz_class limit = C_seed * ten10;
  mpz_class C = C_seed;
  int escalations = 0;
  for (;;) {
    Precision prec = start;
    const Precision need = static_cast<Precision>(mpz_sizeinbase(C.get_mpz_t(), 2)) + 64;
    while (prec < need) prec *= 2;
    std::optional<ReductionCertificate> cert;
    for (; prec <= 4 * kMaxPrecision && !cert; prec *= 2) {
      try {
        cert = linform_certificate(logs(prec), M, C);
      } catch (const PrecisionError&) {
      }
    }
    if (!cert) throw PrecisionError("could not round C*log(gamma) for C = " + C.get_str());
    if (cert->lower_bound) {
      Interval bound = *cert->lower_bound;
      return AutoReduceResult{C, bound, std::move(*cert), escalations};
    }
    C *= 10;
    ++escalations;
    if (C > limit) throw GiveUpError("reduction failed up to C = " + limit.get_str());
  }
}

}  // namespace mdt
