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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mdt/errors.hpp"

namespace mdt {

struct PrimePower {
  mpz_class prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete factorization of a positive integer. The constructor enforces
// the invariants: strictly increasing primes, positive exponents, each
// prime passing is_prime, and the product equal to the value.
class Factorization {
 public:
  Factorization() : value_(1) {}
  Factorization(mpz_class value, std::vector<PrimePower> factors);

  const mpz_class& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  // Exponent of p, 0 if absent.
  unsigned long exponent_of(const mpz_class& p) const;
  // "2^2 * 3^2 * 5^2"
  std::string str() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  mpz_class value_;
  std::vector<PrimePower> factors_;
};

// Primality: deterministic Miller-Rabin below 3.3e24, BPSW above.
bool is_prime(const mpz_class& n);

// Primes below `limit`, ascending. Cached for limit <= 10^6.
const std::vector<std::uint32_t>& small_primes();

Factorization factorize(const mpz_class& n);
Factorization factorize(long n);

// Some nontrivial factor of a composite n, or nullopt when Pollard-Brent
// rho exhausts `budget` iterations.
std::optional<mpz_class> find_factor(const mpz_class& n,
                                     std::uint64_t budget = 1u << 22);

unsigned long vp(const mpz_class& p, const mpz_class& m);
unsigned long vp(long p, const mpz_class& m);

struct PowerForm {
  mpz_class base;
  unsigned long exponent = 0;
  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

// n = base^exponent with the exponent maximal (>= 2), or nullopt.
std::optional<PowerForm> perfect_power(const mpz_class& n);
// The base of the maximal power form, n itself when n is not a power.
mpz_class power_root(const mpz_class& n);

// e with base^e = n, or nullopt.
std::optional<unsigned long> is_power_of(const mpz_class& base,
                                         const mpz_class& n);

// Square-free kernel (product of distinct prime factors).
mpz_class radical(const Factorization& f);

enum class Sign { kMinus, kPlus };
char sign_char(Sign s);

// Tags for the exceptional cases of Zsigmondy's theorem.
enum class ZsigmondyCase {
  kN1DifferenceOne,   // n = 1, a - b = 1
  kN2SumPowerOfTwo,   // n = 2, a + b a power of 2
  kN6Pair21,          // n = 6, (a, b) = (2, 1), minus sign
  kN3Pair21Plus,      // n = 3, (a, b) = (2, 1), plus sign
};
const char* to_string(ZsigmondyCase c);

struct PrimeWitness {
  mpz_class prime;
};
// Integer > 1 all of whose prime factors are primitive divisors; returned
// when no single prime could be split off within the factoring budget.
struct PrimitivePart {
  mpz_class value;
};
struct ZsigmondyException {
  ZsigmondyCase which;
};
using PrimitiveDivisorResult =
    std::variant<PrimeWitness, PrimitivePart, ZsigmondyException>;

// Homogeneous cyclotomic value Phi_m(a, b).
mpz_class cyclotomic_value(unsigned long m, const mpz_class& a,
                           const mpz_class& b);

// Product of all primitive prime divisors of a^n -/+ b^n (with
// multiplicity); 1 exactly when no primitive divisor exists.
mpz_class primitive_part(const mpz_class& a, const mpz_class& b,
                         unsigned long n, Sign sign);

PrimitiveDivisorResult primitive_divisor(const mpz_class& a,
                                         const mpz_class& b, unsigned long n,
                                         Sign sign,
                                         std::uint64_t budget = 1u << 20);

}  // namespace mdt
