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

#include <optional>
#include <string>
#include <vector>

#include "mdt/errors.hpp"

namespace mdt {

using Tuple = std::vector<mpz_class>;
using IntVector = std::vector<mpz_class>;

// Row i holds the exponents of entry i over `primes`.
struct ExponentMatrix {
  std::vector<mpz_class> primes;
  std::vector<std::vector<mpz_class>> rows;
};

ExponentMatrix exponent_matrix(const Tuple& tuple);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m);

struct DependenceClass {
  bool dependent = false;
  std::optional<IntVector> witness;
  std::optional<int> k;
};

// Whether prod z_i^{k_i} == 1, evaluated as an exact integer comparison
// of the positive and negative parts.
bool witness_holds(const Tuple& tuple, const IntVector& k);

// Dependence flag and a primitive kernel witness (first nonzero entry
// positive). Also sets k, the smallest dependent subtuple size.
DependenceClass is_multiplicatively_dependent(const Tuple& tuple);

// Smallest k such that some k-subtuple is dependent, or nullopt when the
// tuple is independent.
std::optional<int> classify_k(const Tuple& tuple);

enum class Family { kFam1, kNewFamily, kSporadic };
const char* to_string(Family f);

// Fam1: {2, 8} are two of the entries and the third entry e has e + 2 of
// the form 2^x 5^y. NewFamily: (2, 2^x - 2, 2^{2x} - 2^{x+1}) with x >= 3.
Family classify_family(long a, long b, long c);

// Theorem-level sets used by the search verifier.
bool in_three_2md_set(long a, long b, long c);
bool in_a2_set(long a, long b, long c);

}  // namespace mdt
