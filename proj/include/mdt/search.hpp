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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdt/muldep.hpp"

namespace mdt {

enum class RequireK { kAny, kAll2md };

struct TripleRecord {
  long a = 0, b = 0, c = 0;
  std::array<DependenceClass, 3> shifts;
  Family family = Family::kSporadic;

  std::array<int, 3> k_levels() const;
  // {"a":..,"b":..,"c":..,"k0":..,"k1":..,"k2":..,"family":".."}
  std::string json() const;
};

// Sieve tables up to a limit: smallest prime factor, radical, and the
// base of the maximal perfect-power form.
class SmallTable {
 public:
  explicit SmallTable(std::uint32_t limit);
  std::uint32_t limit() const { return limit_; }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
  std::uint32_t rad(std::uint32_t n) const { return rad_[n]; }
  std::uint32_t root(std::uint32_t n) const { return root_[n]; }
  // Distinct primes of n, ascending.
  std::vector<std::uint32_t> primes_of(std::uint32_t n) const;
  bool pair_dependent(std::uint32_t x, std::uint32_t y) const {
    return root_[x] == root_[y];
  }
  // Exact dependence of a triple of distinct entries > 1.
  bool triple_dependent(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;
  bool triple_2md(std::uint32_t x, std::uint32_t y, std::uint32_t z) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_, rad_, root_;
};

struct SearchOptions {
  long max_n = 1000;
  RequireK require = RequireK::kAny;
  bool exclude_fam1 = false;
  int jobs = 1;
  // Restrict to a single value of a (used by the a = 2 verifier).
  std::optional<long> only_a;
  // Resumable runs: PATH holds "done lo hi" lines, PATH.jsonl the records
  // of finished ranges.
  std::optional<std::string> checkpoint;
};

// All triples 1 < a < b < c <= N whose three shifts are dependent (or
// 2-multiplicatively dependent under kAll2md), sorted, fully classified.
std::vector<TripleRecord> search_consecutive_md_triples(const SearchOptions& opt);

// O(N^3) reference scan over the same predicate.
std::vector<TripleRecord> exhaustive_scan(long max_n, RequireK require);

// Full classification of one triple.
TripleRecord make_record(long a, long b, long c);

struct TheoremReport {
  std::string theorem;  // "a2" or "3x2md"
  long max_n = 0;
  std::vector<TripleRecord> checked;
  std::vector<TripleRecord> violations;
  bool ok() const { return violations.empty(); }
};

TheoremReport verify_theorem_a2(long max_n, int jobs = 1);
TheoremReport verify_theorem_3x2md(long max_n, int jobs = 1);
std::array<TheoremReport, 2> verify_main_theorems(long max_n, int jobs = 1);

}  // namespace mdt
