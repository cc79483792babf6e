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
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "mdt/dioph.hpp"

namespace mdt {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(long lineno, const std::string& what) {
  throw DataError("factor table line " + std::to_string(lineno) + ": " + what);
}

mpz_class parse_nat(const std::string& s, long lineno) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(lineno, "not a number: '" + s + "'");
  }
  return mpz_class(s);
}

}  // namespace

Factorization FactorEntry::square_part() const {
  std::vector<PrimePower> sq;
  mpz_class v = 1;
  for (const auto& f : resolved.factors()) {
    if (f.exponent < 2) continue;
    sq.push_back(f);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pe;
  }
  return Factorization(v, std::move(sq));
}

FactorTable parse_factor_table(std::istream& in) {
  FactorTable table;
  std::string raw;
  long lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# source:";
      if (line.rfind(tag, 0) == 0) table.source = trim(line.substr(tag.size()));
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "missing ':'");
    const mpz_class tz = parse_nat(trim(line.substr(0, colon)), lineno);
    if (tz < 2 || !tz.fits_slong_p() || !is_prime(tz)) fail(lineno, "t must be a prime");
    const long t = tz.get_si();
    if (table.entries.count(t)) fail(lineno, "duplicate t = " + std::to_string(t));

    std::istringstream body(line.substr(colon + 1));
    std::string tok;
    std::vector<PrimePower> pps;
    std::optional<long> cdigits;
    bool star = false;
    while (body >> tok) {
      if (star) {
        if (cdigits || tok.size() < 2 || tok[0] != 'C') fail(lineno, "bad cofactor token '" + tok + "'");
        mpz_class d = parse_nat(tok.substr(1), lineno);
        if (!d.fits_slong_p() || d < 1) fail(lineno, "bad cofactor digit count");
        cdigits = d.get_si();
        continue;
      }
      if (tok == "*") {
        star = true;
        continue;
      }
      auto caret = tok.find('^');
      mpz_class p = parse_nat(tok.substr(0, caret), lineno);
      mpz_class e = caret == std::string::npos ? mpz_class(1) : parse_nat(tok.substr(caret + 1), lineno);
      if (e < 1 || !e.fits_ulong_p()) fail(lineno, "bad exponent in '" + tok + "'");
      if (!is_prime(p)) fail(lineno, "listed factor " + p.get_str() + " is not prime");
      pps.push_back({p, e.get_ui()});
    }
    if (star && !cdigits) fail(lineno, "'*' without a cofactor");
    std::sort(pps.begin(), pps.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    for (std::size_t i = 1; i < pps.size(); ++i) {
      if (pps[i].prime == pps[i - 1].prime) fail(lineno, "prime " + pps[i].prime.get_str() + " listed twice");
    }
    mpz_class prod = 1;
    for (const auto& pp : pps) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
      prod *= pe;
    }
    mpz_class N;
    mpz_ui_pow_ui(N.get_mpz_t(), 2, static_cast<unsigned long>(t - 1));
    N -= 1;
    if (N % prod != 0) fail(lineno, "product check failed for t = " + std::to_string(t));
    FactorEntry entry;
    entry.t = t;
    entry.cofactor = N / prod;
    entry.cofactor_digits = cdigits;
    if (!cdigits) {
      if (entry.cofactor != 1) fail(lineno, "product check failed for t = " + std::to_string(t));
    } else {
      const mpz_class& c = entry.cofactor;
      if (static_cast<long>(c.get_str().size()) != *cdigits) {
        fail(lineno, "cofactor has " + std::to_string(c.get_str().size()) + " digits, table says " +
                         std::to_string(*cdigits));
      }
      if (c == 1 || is_prime(c)) fail(lineno, "cofactor is not composite");
      for (const auto& pp : pps) {
        if (c % pp.prime == 0) fail(lineno, "listed prime " + pp.prime.get_str() + " divides the cofactor");
      }
    }
    entry.resolved = Factorization(prod, std::move(pps));
    table.entries.emplace(t, std::move(entry));
  }
  return table;
}

FactorTable load_factor_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open factor table '" + path + "'");
  return parse_factor_table(in);
}

FactorCheckReport factor_table_check(const FactorTable& table) {
  FactorCheckReport rep;
  const mpz_class Q = compute_Q();
  for (long t : admissible_exponents_x2minus2()) {
    auto it = table.entries.find(t);
    if (it == table.entries.end()) {
      rep.missing.push_back(t);
      continue;
    }
    const FactorEntry& e = it->second;
    rep.checked.push_back(t);
    if (!e.complete()) rep.incomplete.push_back(t);
    const auto sq = e.square_part().factors();
    unsigned long emax = 0;
    for (const auto& f : sq) emax = std::max(emax, f.exponent);
    // d^x | 2^(t-1) - 1 with x >= 2: every prime of d has a_p x <= e_p.
    for (unsigned long x = 2; x <= emax; ++x) {
      std::vector<unsigned long> cap(sq.size()), a(sq.size(), 0);
      for (std::size_t i = 0; i < sq.size(); ++i) cap[i] = sq[i].exponent / x;
      for (;;) {
        std::size_t i = 0;
        while (i < a.size() && a[i] == cap[i]) a[i++] = 0;
        if (i == a.size()) break;
        ++a[i];
        mpz_class d = 1;
        for (std::size_t j = 0; j < a.size(); ++j) {
          mpz_class pe;
          mpz_pow_ui(pe.get_mpz_t(), sq[j].prime.get_mpz_t(), a[j]);
          d *= pe;
        }
        DxCandidate c{t, d, x, 0};
        mpz_pow_ui(c.value.get_mpz_t(), d.get_mpz_t(), x);
        ++rep.candidates;
        if (c.value > rep.largest.value) rep.largest = c;
        if (c.value % Q == 1) rep.violations.push_back(c);
      }
    }
  }
  return rep;
}

}  // namespace mdt
