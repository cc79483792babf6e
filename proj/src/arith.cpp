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

#include "mdt/arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mdt {

namespace {

constexpr std::uint32_t kTrialLimit = 1000000;

// Miller-Rabin with the first 13 prime bases is deterministic below this.
const mpz_class& deterministic_mr_limit() {
  static const mpz_class limit("3317044064679887385961981");
  return limit;
}

bool miller_rabin(const mpz_class& n, unsigned long base) {
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  mpz_class x;
  mpz_class a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

void add_factor(std::vector<PrimePower>& out, const mpz_class& p,
                unsigned long e) {
  for (auto& pp : out) {
    if (pp.prime == p) {
      pp.exponent += e;
      return;
    }
  }
  out.push_back({p, e});
}

// Splits n (no factor below the trial limit) into primes.
void split_large(const mpz_class& n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    add_factor(out, n, 1);
    return;
  }
  if (auto r = perfect_power(n)) {
    std::vector<PrimePower> sub;
    split_large(r->base, sub);
    for (auto& pp : sub) add_factor(out, pp.prime, pp.exponent * r->exponent);
    return;
  }
  std::uint64_t budget = 1u << 22;
  for (int attempt = 0; attempt < 4; ++attempt, budget <<= 2) {
    if (auto f = find_factor(n, budget)) {
      split_large(*f, out);
      split_large(n / *f, out);
      return;
    }
  }
  throw GiveUpError("factorization budget exceeded for " + n.get_str());
}

}  // namespace

Factorization::Factorization(mpz_class value, std::vector<PrimePower> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {
  if (value_ < 1) throw DomainError("factorization of a non-positive value");
  mpz_class prod = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& pp = factors_[i];
    if (pp.exponent == 0) throw DataError("zero exponent in factorization");
    if (i > 0 && factors_[i - 1].prime >= pp.prime) {
      throw DataError("factorization primes not strictly increasing");
    }
    if (!is_prime(pp.prime)) {
      throw DataError("non-prime factor " + pp.prime.get_str());
    }
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    prod *= pe;
  }
  if (prod != value_) throw DataError("factor product differs from value");
}

unsigned long Factorization::exponent_of(const mpz_class& p) const {
  for (const auto& pp : factors_) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

std::string Factorization::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    os << factors_[i].prime.get_str();
    if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2,  3,  5,  7,  11, 13, 17,
                                             19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 43 * 43) return true;
  if (n < deterministic_mr_limit()) {
    for (unsigned long b : kBases) {
      if (!miller_rabin(n, b)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::optional<mpz_class> find_factor(const mpz_class& n, std::uint64_t budget) {
  if (n < 4) return std::nullopt;
  if (mpz_even_p(n.get_mpz_t())) return mpz_class(2);
  std::uint64_t spent = 0;
  for (unsigned long c = 1; spent < budget; ++c) {
    // Brent's cycle detection with batched gcds.
    mpz_class y = 2, x, ys, q = 1, g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          mpz_class d = x - y;
          q = q * abs(d) % n;
        }
        spent += lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = x - ys;
        d = abs(d);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

Factorization factorize(const mpz_class& n_in) {
  if (n_in < 2) throw DomainError("factorize expects n >= 2");
  mpz_class n = n_in;
  std::vector<PrimePower> out;
  for (std::uint32_t p : small_primes()) {
    if (mpz_class(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out.push_back({mpz_class(p), e});
    }
  }
  if (n > 1) {
    mpz_class bound = mpz_class(kTrialLimit) * kTrialLimit;
    if (n < bound) {
      out.push_back({n, 1});
    } else {
      std::vector<PrimePower> big;
      split_large(n, big);
      out.insert(out.end(), big.begin(), big.end());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return Factorization(n_in, std::move(out));
}

Factorization factorize(long n) { return factorize(mpz_class(n)); }

unsigned long vp(const mpz_class& p, const mpz_class& m) {
  if (p < 2) throw DomainError("vp expects a prime p");
  if (m == 0) throw DomainError("vp(p, 0) is infinite");
  mpz_class a = abs(m);
  mpz_class rest;
  return mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

unsigned long vp(long p, const mpz_class& m) { return vp(mpz_class(p), m); }

std::optional<PowerForm> perfect_power(const mpz_class& n) {
  if (n < 2) throw DomainError("perfect_power expects n >= 2");
  if (!mpz_perfect_power_p(n.get_mpz_t())) return std::nullopt;
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 2; --e) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e) != 0 && r >= 2) {
      return PowerForm{r, e};
    }
  }
  return std::nullopt;
}

mpz_class power_root(const mpz_class& n) {
  if (auto p = perfect_power(n)) return p->base;
  return n;
}

std::optional<unsigned long> is_power_of(const mpz_class& base,
                                         const mpz_class& n) {
  if (base < 2 || n < 1) throw DomainError("is_power_of expects base >= 2, n >= 1");
  mpz_class rest;
  unsigned long e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t());
  if (rest != 1) return std::nullopt;
  return e;
}

mpz_class radical(const Factorization& f) {
  mpz_class r = 1;
  for (const auto& pp : f.factors()) r *= pp.prime;
  return r;
}

char sign_char(Sign s) { return s == Sign::kMinus ? '-' : '+'; }

const char* to_string(ZsigmondyCase c) {
  switch (c) {
    case ZsigmondyCase::kN1DifferenceOne:
      return "n=1,a-b=1";
    case ZsigmondyCase::kN2SumPowerOfTwo:
      return "n=2,a+b=2^k";
    case ZsigmondyCase::kN6Pair21:
      return "n=6,a=2,b=1";
    case ZsigmondyCase::kN3Pair21Plus:
      return "n=3,a=2,b=1,plus";
  }
  return "?";
}

namespace {

int mobius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

void check_zsigmondy_input(const mpz_class& a, const mpz_class& b,
                           unsigned long n) {
  if (!(a > b && b >= 1)) throw DomainError("primitive_divisor expects a > b >= 1");
  if (gcd(a, b) != 1) throw DomainError("primitive_divisor expects coprime a, b");
  if (n < 1) throw DomainError("primitive_divisor expects n >= 1");
}

std::vector<unsigned long> prime_divisors(unsigned long m) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

mpz_class cyclotomic_value(unsigned long m, const mpz_class& a,
                           const mpz_class& b) {
  if (m < 1) throw DomainError("cyclotomic index must be >= 1");
  mpz_class num = 1, den = 1;
  for (unsigned long d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = mobius(m / d);
    if (mu == 0) continue;
    mpz_class ad, bd;
    mpz_pow_ui(ad.get_mpz_t(), a.get_mpz_t(), d);
    mpz_pow_ui(bd.get_mpz_t(), b.get_mpz_t(), d);
    (mu > 0 ? num : den) *= ad - bd;
  }
  if (den == 0 || num % den != 0) {
    throw std::logic_error("cyclotomic quotient is not integral");
  }
  return num / den;
}

mpz_class primitive_part(const mpz_class& a, const mpz_class& b,
                         unsigned long n, Sign sign) {
  check_zsigmondy_input(a, b, n);
  if (n == 1) return sign == Sign::kMinus ? mpz_class(a - b) : mpz_class(a + b);
  unsigned long m = sign == Sign::kMinus ? n : 2 * n;
  mpz_class v = abs(cyclotomic_value(m, a, b));
  for (unsigned long p : prime_divisors(m)) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    }
  }
  return v;
}

PrimitiveDivisorResult primitive_divisor(const mpz_class& a, const mpz_class& b,
                                         unsigned long n, Sign sign,
                                         std::uint64_t budget) {
  mpz_class part = primitive_part(a, b, n, sign);
  if (part == 1) {
    if (sign == Sign::kMinus && n == 1) {
      return ZsigmondyException{ZsigmondyCase::kN1DifferenceOne};
    }
    if (sign == Sign::kMinus && n == 2) {
      return ZsigmondyException{ZsigmondyCase::kN2SumPowerOfTwo};
    }
    if (sign == Sign::kMinus && n == 6 && a == 2 && b == 1) {
      return ZsigmondyException{ZsigmondyCase::kN6Pair21};
    }
    if (sign == Sign::kPlus && n == 3 && a == 2 && b == 1) {
      return ZsigmondyException{ZsigmondyCase::kN3Pair21Plus};
    }
    throw std::logic_error("no primitive divisor outside the exception list");
  }
  if (is_prime(part)) return PrimeWitness{part};
  // Primitive primes are 1 mod m except for the degenerate small indices.
  unsigned long m = n == 1 ? 1 : (sign == Sign::kMinus ? n : 2 * n);
  const auto& primes = small_primes();
  if (m <= 2) {
    for (std::uint32_t p : primes) {
      if (mpz_divisible_ui_p(part.get_mpz_t(), p)) return PrimeWitness{mpz_class(p)};
    }
  } else {
    constexpr std::uint64_t kTrial = 100000;
    for (std::uint64_t p = m + 1; p < kTrial; p += m) {
      if (!std::binary_search(primes.begin(), primes.end(),
                              static_cast<std::uint32_t>(p))) {
        continue;
      }
      if (mpz_divisible_ui_p(part.get_mpz_t(), p)) return PrimeWitness{mpz_class(p)};
    }
  }
  mpz_class cur = part;
  while (!is_prime(cur)) {
    auto f = find_factor(cur, budget);
    if (!f) return PrimitivePart{part};
    mpz_class other = cur / *f;
    cur = *f < other ? *f : other;
  }
  return PrimeWitness{cur};
}

}  // namespace mdt
