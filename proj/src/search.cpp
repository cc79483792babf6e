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

#include "mdt/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace mdt {

namespace {

using Triple = std::tuple<long, long, long>;

int rank_int(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 v = static_cast<__int128>(m[r][c]) * m[i][j] -
                     static_cast<__int128>(m[i][c]) * m[r][j];
        m[i][j] = static_cast<std::int64_t>(v / prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

SmallTable::SmallTable(std::uint32_t limit)
    : limit_(limit), spf_(limit + 1, 0), rad_(limit + 1, 1), root_(limit + 1) {
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = i;
      }
    }
  }
  for (std::uint32_t n = 2; n <= limit; ++n) {
    std::uint32_t p = spf_[n], m = n / p;
    rad_[n] = (rad_[m] % p == 0) ? rad_[m] : rad_[m] * p;
  }
  for (std::uint32_t n = 0; n <= limit; ++n) root_[n] = n;
  for (std::uint64_t b = 2; b * b <= limit; ++b) {
    if (root_[b] != b) continue;
    for (std::uint64_t v = b * b; v <= limit; v *= b) root_[v] = static_cast<std::uint32_t>(b);
  }
}

std::vector<std::uint32_t> SmallTable::primes_of(std::uint32_t n) const {
  std::vector<std::uint32_t> out;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

bool SmallTable::triple_2md(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
  return root_[x] == root_[y] || root_[x] == root_[z] || root_[y] == root_[z];
}

bool SmallTable::triple_dependent(std::uint32_t x, std::uint32_t y,
                                  std::uint32_t z) const {
  if (triple_2md(x, y, z)) return true;
  const std::uint64_t rx = rad_[x], ry = rad_[y], rz = rad_[z];
  if ((ry * rz) % rx || (rx * rz) % ry || (rx * ry) % rz) return false;
  std::vector<std::uint32_t> primes = primes_of(x);
  for (std::uint32_t v : {y, z}) {
    for (std::uint32_t p : primes_of(v)) {
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
  }
  std::vector<std::vector<std::int64_t>> m;
  for (std::uint32_t v : {x, y, z}) {
    std::vector<std::int64_t> row;
    for (std::uint32_t p : primes) {
      std::int64_t e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      row.push_back(e);
    }
    m.push_back(std::move(row));
  }
  return rank_int(std::move(m)) < 3;
}

std::array<int, 3> TripleRecord::k_levels() const {
  std::array<int, 3> out{};
  for (int s = 0; s < 3; ++s) out[s] = shifts[s].k.value_or(0);
  return out;
}

std::string TripleRecord::json() const {
  auto k = k_levels();
  std::ostringstream os;
  os << "{\"a\":" << a << ",\"b\":" << b << ",\"c\":" << c << ",\"k0\":" << k[0]
     << ",\"k1\":" << k[1] << ",\"k2\":" << k[2] << ",\"family\":\""
     << to_string(family) << "\"}";
  return os.str();
}

TripleRecord make_record(long a, long b, long c) {
  TripleRecord r;
  r.a = a;
  r.b = b;
  r.c = c;
  for (int s = 0; s < 3; ++s) {
    r.shifts[s] = is_multiplicatively_dependent(
        Tuple{mpz_class(a + s), mpz_class(b + s), mpz_class(c + s)});
  }
  r.family = classify_family(a, b, c);
  return r;
}

namespace {

// Numbers in (lo, hi] whose prime factors all lie in `primes`.
void smooth_numbers(const std::vector<std::uint32_t>& primes, std::uint64_t lo,
                    std::uint64_t hi, std::vector<std::uint64_t>& out) {
  out.clear();
  struct Frame {
    std::uint64_t v;
    std::size_t i;
  };
  std::vector<Frame> stack{{1, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.v > lo) out.push_back(f.v);
    for (std::size_t j = f.i; j < primes.size(); ++j) {
      std::uint64_t nv = f.v * primes[j];
      if (nv <= hi) stack.push_back({nv, j});
    }
  }
}

void powers_in(std::uint64_t base, std::uint64_t lo, std::uint64_t hi,
               std::vector<std::uint64_t>& out) {
  for (std::uint64_t v = base; v <= hi; v *= base) {
    if (v > lo) out.push_back(v);
    if (v > hi / base) break;
  }
}

struct Worker {
  const SmallTable& t;
  long n;
  RequireK require;

  bool shift_ok(long x, long y, long z) const {
    auto ux = static_cast<std::uint32_t>(x), uy = static_cast<std::uint32_t>(y),
         uz = static_cast<std::uint32_t>(z);
    return require == RequireK::kAll2md ? t.triple_2md(ux, uy, uz)
                                        : t.triple_dependent(ux, uy, uz);
  }

  void run_a(long a, std::vector<Triple>& found) const {
    std::vector<std::uint64_t> cand;
    std::vector<std::uint32_t> primes;
    for (long b = a + 1; b < n; ++b) {
      int best = -1;
      double best_est = 0;
      for (int s = 0; s < 3; ++s) {
        auto x = static_cast<std::uint32_t>(a + s), y = static_cast<std::uint32_t>(b + s);
        if (t.pair_dependent(x, y)) continue;
        double est;
        if (require == RequireK::kAll2md) {
          est = 1;
        } else {
          est = 1;
          std::vector<std::uint32_t> ps = t.primes_of(x);
          for (auto p : t.primes_of(y)) {
            if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
          }
          for (auto p : ps) est *= std::log(double(n + 2)) / std::log(double(p)) + 1;
        }
        if (best < 0 || est < best_est) {
          best = s;
          best_est = est;
        }
      }
      cand.clear();
      if (best < 0) {
        for (long c = b + 1; c <= n; ++c) cand.push_back(static_cast<std::uint64_t>(c));
        best = 0;
      } else {
        auto x = static_cast<std::uint32_t>(a + best), y = static_cast<std::uint32_t>(b + best);
        std::uint64_t lo = static_cast<std::uint64_t>(b + best);
        std::uint64_t hi = static_cast<std::uint64_t>(n + best);
        if (require == RequireK::kAll2md) {
          powers_in(t.root(x), lo, hi, cand);
          powers_in(t.root(y), lo, hi, cand);
        } else {
          primes = t.primes_of(x);
          for (auto p : t.primes_of(y)) {
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
          }
          smooth_numbers(primes, lo, hi, cand);
        }
        for (auto& v : cand) v -= static_cast<std::uint64_t>(best);
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      }
      for (std::uint64_t cu : cand) {
        long c = static_cast<long>(cu);
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s) ok = shift_ok(a + s, b + s, c + s);
        if (ok) found.emplace_back(a, b, c);
      }
    }
  }
};

struct Chunk {
  long lo, hi;
};

std::vector<Chunk> make_chunks(long a_lo, long a_hi) {
  std::vector<Chunk> out;
  const long size = 4;
  for (long lo = a_lo; lo <= a_hi; lo += size) out.push_back({lo, std::min(a_hi, lo + size - 1)});
  return out;
}

std::string meta_line(const SearchOptions& opt) {
  std::ostringstream os;
  os << "max=" << opt.max_n << " require=" << (opt.require == RequireK::kAll2md ? "all-2md" : "any")
     << " only_a=" << (opt.only_a ? std::to_string(*opt.only_a) : "none");
  return os.str();
}

}  // namespace

std::vector<TripleRecord> search_consecutive_md_triples(const SearchOptions& opt) {
  std::vector<TripleRecord> out;
  const long n = opt.max_n;
  if (n < 4) return out;
  long a_lo = 2, a_hi = n - 2;
  if (opt.only_a) {
    a_lo = std::max(a_lo, *opt.only_a);
    a_hi = std::min(a_hi, *opt.only_a);
  }
  if (a_lo > a_hi) return out;
  const SmallTable table(static_cast<std::uint32_t>(n + 2));
  const Worker worker{table, n, opt.require};
  const std::vector<Chunk> chunks = make_chunks(a_lo, a_hi);
  std::vector<std::vector<Triple>> per_chunk(chunks.size());
  std::vector<char> done(chunks.size(), 0);

  std::mutex io_mu;
  std::ofstream ck_out, sink_out;
  if (opt.checkpoint) {
    const std::string& path = *opt.checkpoint;
    const std::string meta = meta_line(opt);
    {
      std::ifstream meta_in(path + ".meta");
      std::string existing;
      if (meta_in && std::getline(meta_in, existing) && existing != meta) {
        throw DataError("checkpoint " + path + " was written with different parameters");
      }
    }
    std::ofstream(path + ".meta") << meta << "\n";
    std::set<std::pair<long, long>> done_ranges;
    {
      std::ifstream in(path);
      std::string line;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        long lo, hi;
        if (ls >> word >> lo >> hi && word == "done") done_ranges.insert({lo, hi});
        else if (!line.empty()) throw DataError("malformed checkpoint line: " + line);
      }
    }
    std::map<long, std::vector<Triple>> stored;
    {
      std::ifstream in(path + ".jsonl");
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("a")) throw DataError("malformed sink line: " + line);
        long a = j["a"], b = j["b"], c = j["c"];
        stored[a].emplace_back(a, b, c);
      }
    }
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (!done_ranges.count({chunks[i].lo, chunks[i].hi})) continue;
      done[i] = 1;
      for (long a = chunks[i].lo; a <= chunks[i].hi; ++a) {
        auto it = stored.find(a);
        if (it != stored.end()) {
          std::set<Triple> uniq(it->second.begin(), it->second.end());
          per_chunk[i].insert(per_chunk[i].end(), uniq.begin(), uniq.end());
        }
      }
    }
    ck_out.open(path, std::ios::app);
    sink_out.open(path + ".jsonl", std::ios::app);
    if (!ck_out || !sink_out) throw DataError("cannot open checkpoint files at " + path);
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      if (done[i]) continue;
      std::vector<Triple> found;
      for (long a = chunks[i].lo; a <= chunks[i].hi; ++a) worker.run_a(a, found);
      per_chunk[i] = found;
      if (opt.checkpoint) {
        std::lock_guard<std::mutex> lock(io_mu);
        for (const auto& [a, b, c] : found) {
          sink_out << TripleRecord{a, b, c, {}, Family::kSporadic}.json() << "\n";
        }
        sink_out.flush();
        ck_out << "done " << chunks[i].lo << " " << chunks[i].hi << "\n";
        ck_out.flush();
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(work);
  work();
  for (auto& th : threads) th.join();

  std::vector<Triple> all;
  for (auto& v : per_chunk) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  for (const auto& [a, b, c] : all) {
    TripleRecord r = make_record(a, b, c);
    if (opt.exclude_fam1 && r.family == Family::kFam1) continue;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TripleRecord> exhaustive_scan(long max_n, RequireK require) {
  std::vector<TripleRecord> out;
  if (max_n < 4) return out;
  const SmallTable t(static_cast<std::uint32_t>(max_n + 2));
  for (long a = 2; a <= max_n; ++a) {
    for (long b = a + 1; b <= max_n; ++b) {
      for (long c = b + 1; c <= max_n; ++c) {
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s) {
          auto x = static_cast<std::uint32_t>(a + s), y = static_cast<std::uint32_t>(b + s),
               z = static_cast<std::uint32_t>(c + s);
          ok = require == RequireK::kAll2md ? t.triple_2md(x, y, z) : t.triple_dependent(x, y, z);
        }
        if (ok) out.push_back(make_record(a, b, c));
      }
    }
  }
  return out;
}

TheoremReport verify_theorem_a2(long max_n, int jobs) {
  TheoremReport rep;
  rep.theorem = "a2";
  rep.max_n = max_n;
  SearchOptions opt;
  opt.max_n = max_n;
  opt.only_a = 2;
  opt.jobs = jobs;
  rep.checked = search_consecutive_md_triples(opt);
  for (const auto& r : rep.checked) {
    if (!in_a2_set(r.a, r.b, r.c)) rep.violations.push_back(r);
  }
  return rep;
}

TheoremReport verify_theorem_3x2md(long max_n, int jobs) {
  TheoremReport rep;
  rep.theorem = "3x2md";
  rep.max_n = max_n;
  SearchOptions opt;
  opt.max_n = max_n;
  opt.require = RequireK::kAll2md;
  opt.jobs = jobs;
  rep.checked = search_consecutive_md_triples(opt);
  for (const auto& r : rep.checked) {
    if (!in_three_2md_set(r.a, r.b, r.c)) rep.violations.push_back(r);
  }
  return rep;
}

std::array<TheoremReport, 2> verify_main_theorems(long max_n, int jobs) {
  return {verify_theorem_a2(max_n, jobs), verify_theorem_3x2md(max_n, jobs)};
}

}  // namespace mdt
