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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdt/arith.hpp"
#include "mdt/interval.hpp"

namespace mdt {

// 2^y (2^x +- 1)^z -+ 1 = 3^r (2^(x+1) +- 1)^w, a negative r meaning
// 3^|r| times the left side.
struct SitSolution {
  Sign sign = Sign::kPlus;
  long x = 0;
  unsigned long y = 0, z = 0, w = 0;
  long r = 0;
  friend bool operator==(const SitSolution&, const SitSolution&) = default;
  friend auto operator<=>(const SitSolution&, const SitSolution&) = default;
};

bool sit_holds(const SitSolution& s);

struct Strip3 {
  mpz_class value;
  unsigned long v3 = 0;
};

// (2^y (2^x +- 1)^z -+ 1) with all factors 3 removed. DomainError for
// x < 3, y < 1 or a non-positive value.
Strip3 q_strip3(Sign sign, long x, unsigned long y, unsigned long z);

// The (w, r) with 3^r B^w = n, if any; B > 1 and not a power of 3.
std::optional<std::pair<unsigned long, long>> solve_3r_power(const mpz_class& n,
                                                             const mpz_class& B);

struct SitXReport {
  long x = 0;
  Interval ell;  // lower bound for |Lambda|
  Interval U;    // -log(ell) / log 2
  mpz_class C_used;
  int escalations = 0;
  std::size_t candidates = 0;
  std::vector<SitSolution> solutions;
};

struct SitFinalOptions {
  long x_lo = 3;
  long x_hi = 296;
  mpz_class coeff_bound{"8060000000000000000000000000"};
  // Cap on y and z during enumeration (0 = none), for sub-box comparisons.
  unsigned long yz_cap = 0;
  Precision precision = kDefaultPrecision;
  unsigned jobs = 1;
  std::function<void(const SitXReport&)> on_x;
};

struct SitFinalResult {
  Sign sign = Sign::kPlus;
  std::vector<SitXReport> per_x;
  std::vector<SitSolution> solutions;
  mpq_class U_max;  // upper end of the largest U(x)
  long U_argmax = 0;
};

// Linear form logarithms for a given x, in the order
// log 2, log(2^x +- 1), log 3, log(2^(x+1) +- 1).
std::vector<Interval> sit_logs(Sign sign, long x, Precision prec);

// Final search over x of the right parity (even for +, odd for -). Throws
// GiveUpError naming x when a reduction fails.
SitFinalResult solve_sit_final(Sign sign, const SitFinalOptions& opt = {});

// True for the solution families with r = 0: (y, z, w) = (1, 1, 1) and,
// for the minus sign, (x + 2, 1, 2).
bool is_r0_family(const SitSolution& s);

// Lemma searches.

using LemmaTuple = std::vector<mpz_class>;
using LemmaBounds = std::map<std::string, long>;

struct LemmaInfo {
  std::string id;
  std::string equation;
  std::string variables;  // tuple layout, e.g. "(x, y, w, r)"
  LemmaBounds defaults;
};

struct LemmaResult {
  std::string id;
  LemmaBounds bounds;
  std::vector<LemmaTuple> found;
  std::vector<LemmaTuple> expected;  // stated solution set cut to the box
  bool matches = false;
};

const std::vector<LemmaInfo>& lemma_registry();
// "x=30,y=60" -> {{"x",30},{"y",60}}; DomainError on malformed text.
LemmaBounds parse_bounds(const std::string& text);
// Unknown id or bound name: DomainError.
LemmaResult lemma_search(const std::string& id, const LemmaBounds& overrides = {});

struct PropBox {
  long max_var = 12;
  mpz_class value_cap{"1000000000000000000"};  // 0 = no cap
};

// Solutions (d, x, y, s, t) for eq48 and eq49, (d, x, y, s, m) for eq50.
std::vector<LemmaTuple> verify_prop_searches(const std::string& prop_id, const PropBox& box = {});

// Data for x^2 - 2 = y^n.

const std::vector<long>& chen_set_S();
mpz_class compute_Q();
bool chen_filter(const mpz_class& y);
// Primes 41 <= n <= 1237 with n = 13, 17, 19, 23 mod 24.
const std::vector<long>& admissible_exponents_x2minus2();

struct FactorEntry {
  long t = 0;
  Factorization resolved;           // fully certified prime part
  mpz_class cofactor{1};            // unresolved composite part, 1 if none
  std::optional<long> cofactor_digits;
  bool complete() const { return cofactor == 1; }
  // Primes with exponent >= 2.
  Factorization square_part() const;
};

struct FactorTable {
  std::string source;
  std::map<long, FactorEntry> entries;
};

// Parses "t: p1^e1 p2^e2 ... [* Cdigits]" lines against 2^(t-1) - 1.
// DataError on a product mismatch, a composite listed prime, a listed prime
// dividing the cofactor, a wrong digit count, or malformed text.
FactorTable parse_factor_table(std::istream& in);
FactorTable load_factor_table(const std::string& path);

struct DxCandidate {
  long t = 0;
  mpz_class d;
  unsigned long x = 0;
  mpz_class value;  // d^x
};

struct FactorCheckReport {
  std::vector<long> checked;
  std::vector<long> missing;     // admissible t without an entry
  std::vector<long> incomplete;  // entries with an unresolved cofactor
  std::size_t candidates = 0;
  DxCandidate largest;
  std::vector<DxCandidate> violations;  // d^x = 1 mod Q
};

FactorCheckReport factor_table_check(const FactorTable& table);

}  // namespace mdt
