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

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "mdt/dioph.hpp"

namespace mdt {

namespace {

mpz_class pw(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

long pm(Sign s) { return s == Sign::kPlus ? 1 : -1; }

mpz_class two_pm(Sign s, long e) {
  return pw(2, e) + pm(s);
}

// r with q = 3^r, q rational and positive.
std::optional<long> three_exponent(const mpq_class& q) {
  mpz_class n = q.get_num(), d = q.get_den();
  if (n != 1 && d != 1) return std::nullopt;
  const bool inv = n == 1;
  mpz_class m = inv ? d : n;
  long e = 0;
  while (m % 3 == 0) {
    m /= 3;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return inv ? -e : e;
}

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long n) {
  if (v < 0) return std::nullopt;
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

LemmaTuple T(std::initializer_list<long> xs) {
  LemmaTuple t;
  for (long x : xs) t.emplace_back(x);
  return t;
}

using Found = std::set<LemmaTuple>;
using Search = std::function<Found(const LemmaBounds&)>;

// z = 0 lemmas: 2^y -+ 1 = 3^r (2^(x+1) +- 1)^w, tuples (x, y, w, r).
Found sit_z0(Sign s, const LemmaBounds& b) {
  Found out;
  for (long x = 3; x <= b.at("x"); ++x) {
    const mpz_class B = two_pm(s, x + 1);
    for (long y = 1; y <= b.at("y"); ++y) {
      const mpz_class lhs = pw(2, y) - pm(s);
      mpz_class Bw = 1;
      for (long w = 0; w <= b.at("w"); ++w, Bw *= B) {
        mpq_class q(lhs, Bw);
        q.canonicalize();
        if (auto r = three_exponent(q)) out.insert(T({x, y, w, *r}));
      }
    }
  }
  return out;
}

// r = 0 lemmas: 2^y (2^x +- 1)^z -+ 1 = (2^(x+1) +- 1)^w, tuples (x, y, z, w).
Found sit_r0(Sign s, const LemmaBounds& b) {
  Found out;
  for (long x = 3; x <= b.at("x"); ++x) {
    const mpz_class A = two_pm(s, x), B = two_pm(s, x + 1);
    for (long y = 1; y <= b.at("y"); ++y) {
      mpz_class Az = 1;
      for (long z = 0; z <= b.at("z"); ++z, Az *= A) {
        mpz_class lhs = pw(2, y) * Az;
        lhs -= pm(s);
        std::optional<unsigned long> w;
        if (lhs == 1) {
          w = 0;
        } else {
          w = is_power_of(B, lhs);
        }
        if (w && static_cast<long>(*w) <= b.at("w")) out.insert(T({x, y, z, static_cast<long>(*w)}));
      }
    }
  }
  return out;
}

// x^n - y^2 = 2.
Found nagell(const LemmaBounds& b) {
  Found out;
  const mpz_class ymax2 = pw(b.at("y"), 2);
  for (long x = 2; x <= b.at("x"); ++x) {
    for (long n = 2; n <= b.at("n"); ++n) {
      mpz_class v = pw(x, n) - 2;
      if (v > ymax2) break;
      if (v < 1) continue;
      if (auto y = exact_root(v, 2)) out.insert(T({x, y->get_si(), n}));
    }
  }
  return out;
}

// x^2 + 1 = 2 y^n, x >= 2.
Found stormer(const LemmaBounds& b) {
  Found out;
  const mpz_class xmax2 = pw(b.at("x"), 2);
  for (long n = 3; n <= b.at("n"); ++n) {
    for (long y = 1; y <= b.at("y"); ++y) {
      mpz_class v = 2 * pw(y, n) - 1;
      if (v > xmax2) break;
      auto x = exact_root(v, 2);
      if (x && *x >= 2) out.insert(T({x->get_si(), y, n}));
    }
  }
  return out;
}

// 2 x^2 - 1 = y^n, x, y >= 2.
Found cohn(const LemmaBounds& b) {
  Found out;
  const mpz_class lim = 2 * pw(b.at("x"), 2) - 1;
  for (long n = 3; n <= b.at("n"); ++n) {
    for (long y = 2; y <= b.at("y"); ++y) {
      mpz_class v = pw(y, n);
      if (v > lim) break;
      v += 1;
      if (v % 2 != 0) continue;
      auto x = exact_root(v / 2, 2);
      if (x && *x >= 2) out.insert(T({x->get_si(), y, n}));
    }
  }
  return out;
}

// 3^k - 2 x^n = +-1, k >= 1, x >= 3, n >= 2.
Found pow3_2(const LemmaBounds& b) {
  Found out;
  for (long k = 1; k <= b.at("k"); ++k) {
    for (int e : {-1, 1}) {
      mpz_class v = (pw(3, k) + e) / 2;  // 3^k - 1 and 3^k + 1 are even
      for (long n = 2; n <= b.at("n"); ++n) {
        auto x = exact_root(v, n);
        if (x && *x >= 3) out.insert(LemmaTuple{mpz_class(k), *x, mpz_class(n)});
      }
    }
  }
  return out;
}

// 2^k - 3^l x^n = +-1, k, l >= 0, x >= 2, n >= 3.
Found pow2_3(const LemmaBounds& b) {
  Found out;
  for (long k = 0; k <= b.at("k"); ++k) {
    for (int e : {-1, 1}) {
      const mpz_class v = pw(2, k) + e;
      if (v <= 0) continue;
      mpz_class rest = v;
      for (long l = 0; l <= b.at("l"); ++l) {
        if (l > 0) {
          if (rest % 3 != 0) break;
          rest /= 3;
        }
        for (long n = 3; n <= b.at("n"); ++n) {
          auto x = exact_root(rest, n);
          if (x && *x >= 2) out.insert(LemmaTuple{mpz_class(k), mpz_class(l), *x, mpz_class(n)});
        }
      }
    }
  }
  return out;
}

// a^x - b^y = 1, all >= 2.
Found catalan(const LemmaBounds& b) {
  Found out;
  for (long a = 2; a <= b.at("a"); ++a) {
    for (long x = 2; x <= b.at("x"); ++x) {
      const mpz_class v = pw(a, x) - 1;
      if (!mpz_perfect_power_p(v.get_mpz_t())) continue;
      for (long y = 2; y <= b.at("y"); ++y) {
        if (pw(2, y) > v) break;
        auto r = exact_root(v, y);
        if (r && *r >= 2 && *r <= b.at("b")) out.insert(LemmaTuple{mpz_class(a), mpz_class(x), *r, mpz_class(y)});
      }
    }
  }
  return out;
}

struct Entry {
  LemmaInfo info;
  Search search;
  std::function<Found(const LemmaBounds&)> expected;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = [] {
    std::vector<Entry> v;
    v.push_back({{"sit1_z0", "2^y - 1 = 3^r (2^(x+1) + 1)^w, x >= 3, y >= 1, w >= 0",
                  "(x, y, w, r)", {{"x", 30}, {"y", 60}, {"w", 60}}},
                 [](const LemmaBounds& b) { return sit_z0(Sign::kPlus, b); },
                 [](const LemmaBounds& b) {
                   Found f;
                   for (long x = 3; x <= b.at("x"); ++x) {
                     if (b.at("y") >= 1) f.insert(T({x, 1, 0, 0}));
                     if (b.at("y") >= 2) f.insert(T({x, 2, 0, 1}));
                   }
                   return f;
                 }});
    v.push_back({{"sit1_r0", "2^y (2^x + 1)^z - 1 = (2^(x+1) + 1)^w, x >= 3, y >= 1, z, w >= 0",
                  "(x, y, z, w)", {{"x", 30}, {"y", 60}, {"z", 60}, {"w", 60}}},
                 [](const LemmaBounds& b) { return sit_r0(Sign::kPlus, b); },
                 [](const LemmaBounds& b) {
                   Found f;
                   for (long x = 3; x <= b.at("x"); ++x) {
                     if (b.at("y") >= 1) f.insert(T({x, 1, 0, 0}));
                     if (b.at("y") >= 1 && b.at("z") >= 1 && b.at("w") >= 1) f.insert(T({x, 1, 1, 1}));
                   }
                   return f;
                 }});
    v.push_back({{"sit2_z0", "2^y + 1 = 3^r (2^(x+1) - 1)^w, x >= 3, y >= 1, w >= 0",
                  "(x, y, w, r)", {{"x", 30}, {"y", 60}, {"w", 60}}},
                 [](const LemmaBounds& b) { return sit_z0(Sign::kMinus, b); },
                 [](const LemmaBounds& b) {
                   Found f;
                   if (b.at("x") >= 3 && b.at("y") >= 2 && b.at("w") >= 1) f.insert(T({3, 2, 1, -1}));
                   for (long x = 3; x <= b.at("x"); ++x) {
                     if (b.at("y") >= 1) f.insert(T({x, 1, 0, 1}));
                     if (b.at("y") >= 3) f.insert(T({x, 3, 0, 2}));
                   }
                   return f;
                 }});
    v.push_back({{"sit2_r0", "2^y (2^x - 1)^z + 1 = (2^(x+1) - 1)^w, x >= 3, y >= 1, z, w >= 0",
                  "(x, y, z, w)", {{"x", 30}, {"y", 60}, {"z", 60}, {"w", 60}}},
                 [](const LemmaBounds& b) { return sit_r0(Sign::kMinus, b); },
                 [](const LemmaBounds& b) {
                   Found f;
                   for (long x = 3; x <= b.at("x"); ++x) {
                     if (x + 2 <= b.at("y") && b.at("z") >= 1 && b.at("w") >= 2) f.insert(T({x, x + 2, 1, 2}));
                     if (b.at("y") >= 1 && b.at("z") >= 1 && b.at("w") >= 1) f.insert(T({x, 1, 1, 1}));
                   }
                   return f;
                 }});
    v.push_back({{"nagell", "x^n - y^2 = 2, x, y >= 1, n >= 2", "(x, y, n)",
                  {{"x", 10000}, {"y", 10000}, {"n", 20}}},
                 nagell,
                 [](const LemmaBounds& b) {
                   Found f;
                   if (b.at("x") >= 3 && b.at("y") >= 5 && b.at("n") >= 3) f.insert(T({3, 5, 3}));
                   return f;
                 }});
    v.push_back({{"stormer", "x^2 + 1 = 2 y^n, x >= 2, y >= 1, n >= 3", "(x, y, n)",
                  {{"x", 1000000}, {"y", 10000}, {"n", 40}}},
                 stormer,
                 [](const LemmaBounds& b) {
                   Found f;
                   if (b.at("x") >= 239 && b.at("y") >= 13 && b.at("n") >= 4) f.insert(T({239, 13, 4}));
                   return f;
                 }});
    v.push_back({{"cohn", "2 x^2 - 1 = y^n, x, y >= 2, n >= 3", "(x, y, n)",
                  {{"x", 1000000}, {"y", 10000}, {"n", 40}}},
                 cohn,
                 [](const LemmaBounds& b) {
                   Found f;
                   if (b.at("x") >= 78 && b.at("y") >= 23 && b.at("n") >= 3) f.insert(T({78, 23, 3}));
                   return f;
                 }});
    v.push_back({{"pow3_2", "3^k - 2 x^n = +-1, k >= 1, x >= 3, n >= 2", "(k, x, n)",
                  {{"k", 60}, {"n", 60}}},
                 pow3_2,
                 [](const LemmaBounds& b) {
                   Found f;
                   if (b.at("k") >= 5 && b.at("n") >= 2) f.insert(T({5, 11, 2}));
                   return f;
                 }});
    v.push_back({{"pow2_3", "2^k - 3^l x^n = +-1, k, l >= 0, x >= 2, n >= 3", "(k, l, x, n)",
                  {{"k", 60}, {"l", 40}, {"n", 60}}},
                 pow2_3,
                 [](const LemmaBounds&) { return Found{}; }});
    v.push_back({{"catalan", "a^x - b^y = 1, a, x, b, y >= 2", "(a, x, b, y)",
                  {{"a", 1000}, {"x", 30}, {"b", 1000}, {"y", 30}}},
                 catalan,
                 [](const LemmaBounds& b) {
                   Found f;
                   if (b.at("a") >= 3 && b.at("x") >= 2 && b.at("b") >= 2 && b.at("y") >= 3)
                     f.insert(T({3, 2, 2, 3}));
                   return f;
                 }});
    return v;
  }();
  return kEntries;
}

}  // namespace

const std::vector<LemmaInfo>& lemma_registry() {
  static const std::vector<LemmaInfo> kInfo = [] {
    std::vector<LemmaInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return kInfo;
}

LemmaBounds parse_bounds(const std::string& text) {
  LemmaBounds out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw DomainError("bounds: expected name=value, got '" + item + "'");
    }
    std::string name = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    std::size_t used = 0;
    long n = 0;
    try {
      n = std::stol(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != val.size() || n < 0) throw DomainError("bounds: bad value in '" + item + "'");
    out[name] = n;
  }
  return out;
}

LemmaResult lemma_search(const std::string& id, const LemmaBounds& overrides) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    LemmaBounds b = e.info.defaults;
    for (const auto& [k, v] : overrides) {
      if (!b.count(k)) throw DomainError("lemma " + id + ": unknown bound '" + k + "'");
      b[k] = v;
    }
    LemmaResult r;
    r.id = id;
    r.bounds = b;
    Found f = e.search(b);
    Found x = e.expected(b);
    r.found.assign(f.begin(), f.end());
    r.expected.assign(x.begin(), x.end());
    r.matches = f == x;
    return r;
  }
  throw DomainError("unknown lemma id '" + id + "'");
}

}  // namespace mdt
