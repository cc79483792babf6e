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

#include <set>

#include "mdt/dioph.hpp"
#include "oracles.hpp"

namespace oracle {

inline mpz_class strip3(mpz_class n, unsigned long* v = nullptr) {
  unsigned long k = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++k;
  }
  if (v) *v = k;
  return n;
}

// Double loop over y, z ignoring U(x); w by repeated multiplication.
inline std::set<mdt::SitSolution> naive_sit(mdt::Sign sign, long x_hi, unsigned long cap) {
  const bool plus = sign == mdt::Sign::kPlus;
  std::set<mdt::SitSolution> out;
  for (long x = plus ? 4 : 3; x <= x_hi; x += 2) {
    const mpz_class a = plus ? mpz_class(pow(2, x) + 1) : mpz_class(pow(2, x) - 1);
    const mpz_class B = plus ? mpz_class(pow(2, x + 1) + 1) : mpz_class(pow(2, x + 1) - 1);
    for (unsigned long y = 1; y <= cap; ++y) {
      for (unsigned long z = 1; z <= cap; ++z) {
        const mpz_class n = pow(2, y) * pow(a, z) + (plus ? -1 : 1);
        unsigned long vn = 0;
        const mpz_class g = strip3(n, &vn);
        mpz_class Bw = 1;
        for (unsigned long w = 0;; ++w, Bw *= B) {
          unsigned long vb = 0;
          const mpz_class h = strip3(Bw, &vb);
          if (h > g) break;
          if (h == g) {
            out.insert({sign, x, y, z, w, static_cast<long>(vn) - static_cast<long>(vb)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
