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

// mdt: command-line driver. One JSON object per line on stdout, a short
// human summary on stderr. Exit 0 = ok, 1 = assertion violated or not
// provable, 2 = usage or data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mdt/arith.hpp"
#include "mdt/contfrac.hpp"
#include "mdt/dioph.hpp"
#include "mdt/lattice.hpp"
#include "mdt/linforms.hpp"
#include "mdt/muldep.hpp"
#include "mdt/search.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mdt;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct Common {
  long precision = 256;
  double slack = 5.0;
  int jobs = 1;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string sci(const Interval& x, int digits = 10) { return x.str(digits); }

json tuple_json(const LemmaTuple& t) {
  json a = json::array();
  for (const auto& v : t) {
    if (v.fits_slong_p()) {
      a.push_back(v.get_si());
    } else {
      a.push_back(v.get_str());
    }
  }
  return a;
}

Sign parse_sign(const std::string& s) {
  if (s == "plus") return Sign::kPlus;
  if (s == "minus") return Sign::kMinus;
  throw DomainError("sign must be plus or minus, got '" + s + "'");
}

json steps_json(const std::vector<BoundStep>& steps, bool& all) {
  json arr = json::array();
  for (const auto& s : steps) {
    all = all && proven(s.status);
    arr.push_back({{"step", s.name}, {"claim", s.claim}, {"status", to_string(s.status)}});
  }
  return arr;
}

// value <= target * (1 + slack/100), exact.
bool within(const mpz_class& value, const char* target, double slack_pct) {
  mpq_class t = Interval::from_decimal(target, 256).hi_q();
  mpq_class s(static_cast<long>(slack_pct * 1000 + 0.5), 100000);
  return mpq_class(value) <= t * (1 + s);
}

int cmd_search(long max_n, bool all2, bool no_fam1, const std::string& ckpt, const Common& c) {
  SearchOptions opt;
  opt.max_n = max_n;
  opt.require = all2 ? RequireK::kAll2md : RequireK::kAny;
  opt.exclude_fam1 = no_fam1;
  opt.jobs = c.jobs;
  if (!ckpt.empty()) opt.checkpoint = ckpt;
  auto recs = search_consecutive_md_triples(opt);
  for (const auto& r : recs) std::cout << r.json() << '\n';
  std::cerr << recs.size() << " triples with c <= " << max_n << '\n';
  return kOk;
}

int cmd_classify(long a, long b, long cc) {
  if (!(1 < a && a < b && b < cc)) throw DomainError("classify needs 1 < A < B < C");
  auto r = make_record(a, b, cc);
  std::cout << r.json() << '\n';
  auto k = r.k_levels();
  std::cerr << "(" << a << "," << b << "," << cc << "): k-levels (" << k[0] << "," << k[1] << ","
            << k[2] << "), " << to_string(r.family) << '\n';
  return kOk;
}

int cmd_verify(const std::string& which, long max_n, const Common& c) {
  TheoremReport rep;
  if (which == "a2") {
    rep = verify_theorem_a2(max_n, c.jobs);
  } else if (which == "3x2md") {
    rep = verify_theorem_3x2md(max_n, c.jobs);
  } else {
    throw DomainError("theorem must be a2 or 3x2md");
  }
  for (const auto& v : rep.violations) std::cout << v.json() << '\n';
  emit({{"theorem", rep.theorem},
        {"max", rep.max_n},
        {"checked", rep.checked.size()},
        {"violations", rep.violations.size()}});
  std::cerr << rep.theorem << " up to " << max_n << ": " << rep.checked.size() << " triples, "
            << rep.violations.size() << " violations\n";
  return rep.ok() ? kOk : kViolated;
}

int cmd_lemma(const std::string& id, const std::string& bounds) {
  if (id == "list") {
    for (const auto& l : lemma_registry()) {
      json d = json::object();
      for (const auto& [k, v] : l.defaults) d[k] = v;
      emit({{"lemma", l.id}, {"equation", l.equation}, {"tuple", l.variables}, {"defaults", d}});
    }
    return kOk;
  }
  auto r = lemma_search(id, bounds.empty() ? LemmaBounds{} : parse_bounds(bounds));
  json b = json::object();
  for (const auto& [k, v] : r.bounds) b[k] = v;
  json found = json::array(), expected = json::array();
  for (const auto& t : r.found) found.push_back(tuple_json(t));
  for (const auto& t : r.expected) expected.push_back(tuple_json(t));
  emit({{"lemma", r.id},
        {"bounds", b},
        {"found", found},
        {"expected", expected},
        {"matches", r.matches}});
  std::cerr << id << ": " << r.found.size() << " solutions in the box, "
            << (r.matches ? "matches the stated set" : "DIFFERS from the stated set") << '\n';
  return r.matches ? kOk : kViolated;
}

int cmd_sit_pipeline(const std::string& sign, bool sharp, const Common& c) {
  PipelineOptions opt;
  opt.precision = c.precision;
  opt.sharp = sharp;
  PipelineBounds b;
  try {
    b = sit_pipeline(parse_sign(sign), opt);
  } catch (const PrecisionError& e) {
    std::cerr << "not proven: " << e.what() << '\n';
    return kViolated;
  }
  bool all = true;
  for (const auto& s : steps_json(b.steps, all)) emit(s);
  const bool m_ok = within(b.M_max, "2.72e25", c.slack);
  const bool x_ok = within(b.x_max, "1.75e5", c.slack);
  const bool r_ok = within(b.r_reduced, "8.06e27", c.slack);
  emit({{"sign", sign},
        {"M_root", sci(b.M_root)},
        {"M_max", b.M_max.get_str()},
        {"x_max", b.x_max.get_str()},
        {"r_max", b.r_max.get_str()},
        {"x_small_branch", b.x_small_branch.get_str()},
        {"cf_index", b.cf_index},
        {"cf_error", sci(b.cf_error)},
        {"x_reduced", b.x_reduced},
        {"r_reduced", b.r_reduced.get_str()},
        {"all_proven", all},
        {"within_slack", m_ok && x_ok && r_ok}});
  std::cerr << "M < " << b.M_max.get_str() << ", x < " << b.x_max.get_str() << ", after CF x <= "
            << b.x_reduced << ", |r| < " << b.r_reduced.get_str() << '\n';
  return all && m_ok && x_ok && r_ok ? kOk : kViolated;
}

std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw DomainError("range must look like LO..HI");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    long lo = std::stol(a, &u1), hi = std::stol(b, &u2);
    if (u1 != a.size() || u2 != b.size() || lo > hi) throw DomainError("bad range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw DomainError("bad range '" + s + "'");
  }
}

int cmd_sit_solve(const std::string& sign, const std::string& range, const Common& c) {
  SitFinalOptions opt;
  if (!range.empty()) std::tie(opt.x_lo, opt.x_hi) = parse_range(range);
  opt.precision = c.precision;
  opt.jobs = static_cast<unsigned>(std::max(1, c.jobs));
  const Sign s = parse_sign(sign);
  opt.on_x = [](const SitXReport& r) {
    json sols = json::array();
    for (const auto& q : r.solutions) sols.push_back({q.y, q.z, q.w, q.r});
    emit({{"x", r.x},
          {"C", r.C_used.get_str()},
          {"U", sci(r.U, 8)},
          {"candidates", r.candidates},
          {"solutions_yzwr", sols}});
  };
  SitFinalResult res;
  try {
    res = solve_sit_final(s, opt);
  } catch (const GiveUpError& e) {
    std::cerr << e.what() << '\n';
    return kViolated;
  }
  bool all_r0 = true;
  for (const auto& q : res.solutions) all_r0 = all_r0 && is_r0_family(q) && sit_holds(q);
  emit({{"sign", sign},
        {"x_count", res.per_x.size()},
        {"solutions", res.solutions.size()},
        {"only_r0_families", all_r0},
        {"U_max", res.U_max.get_d()},
        {"U_argmax", res.U_argmax}});
  std::cerr << res.per_x.size() << " values of x, " << res.solutions.size() << " solutions"
            << (all_r0 ? ", all in the r = 0 families" : ", SOME OUTSIDE the r = 0 families")
            << "; max U(x) = " << res.U_max.get_d() << " at x = " << res.U_argmax << '\n';
  return all_r0 ? kOk : kViolated;
}

int cmd_x2minus2(const Common& c) {
  X2Minus2Result r;
  try {
    r = x2minus2_exponent_bound(static_cast<unsigned>(std::max(1, c.jobs)), c.precision);
  } catch (const PrecisionError& e) {
    std::cerr << "not proven: " << e.what() << '\n';
    return kViolated;
  }
  bool all = true;
  for (const auto& s : steps_json(r.constants.steps, all)) emit(s);
  for (const auto& s : steps_json(r.steps, all)) emit(s);
  const auto& k = r.constants;
  emit({{"C_max", sci(k.C_max)},
        {"C_prime_max", sci(k.C_prime_max)},
        {"a2_factor", sci(k.a2_factor)},
        {"sweep", {r.sweep_lo, r.sweep_hi}},
        {"n_max", r.n_max},
        {"all_proven", all}});
  std::cerr << "n <= " << r.n_max << " (inequality refuted on [" << r.sweep_lo << ", "
            << r.sweep_hi << "))\n";
  return all && r.n_max == 1237 ? kOk : kViolated;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DataError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

// Integer from "123" or exact scientific form "4.76e30".
mpz_class parse_integer(const std::string& s, const char* what) {
  static const std::regex re(R"(([0-9]+)(?:\.([0-9]+))?(?:[eE]\+?([0-9]+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw DataError(std::string(what) + ": not an integer: '" + s + "'");
  const std::string frac = m[2].str();
  const unsigned long exp = m[3].matched ? std::stoul(m[3].str()) : 0;
  mpz_class v(m[1].str() + frac), ten = 10, scale;
  if (exp >= frac.size()) {
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), exp - frac.size());
    return v * scale;
  }
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), frac.size() - exp);
  if (v % scale != 0) throw DataError(std::string(what) + ": not an integer: '" + s + "'");
  return v / scale;
}

int cmd_reduce(const std::string& path, const std::string& Ms, const std::string& Cs, const Common& c) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::vector<mpq_class> gammas;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    mpq_class g = parse_rational(tok);
    if (g <= 0) throw DataError("gamma must be positive: '" + tok + "'");
    gammas.push_back(g);
  }
  if (gammas.size() < 2) throw DataError("need at least two numbers in '" + path + "'");
  mpz_class M = parse_integer(Ms, "--M"), m4;
  if (M < 1) throw DomainError("--M must be positive");
  mpz_pow_ui(m4.get_mpz_t(), M.get_mpz_t(), 4);
  mpz_class C = 1;
  if (!Cs.empty()) {
    C = parse_integer(Cs, "--C");
  } else {
    while (C <= m4) C *= 10;
  }
  auto logs = [gammas](Precision p) {
    std::vector<Interval> v;
    for (const auto& g : gammas) {
      v.push_back(log_of(mpz_class(g.get_num()), p) - log_of(mpz_class(g.get_den()), p));
    }
    return v;
  };
  AutoReduceResult r;
  try {
    r = auto_reduce(logs, M, C, c.precision);
  } catch (const GiveUpError& e) {
    std::cerr << e.what() << '\n';
    return kViolated;
  }
  const Precision p = r.bound.precision();
  Interval U = -log(r.bound.lower_point()) / log_of(2, p);
  emit({{"C", r.C_used.get_str()},
        {"escalations", r.escalations},
        {"c2", r.certificate.c2.get_d()},
        {"lower_bound", sci(r.bound)},
        {"neg_log2_bound", sci(U)}});
  std::cerr << "|Lambda| > " << r.bound.lo_d() << " with C = " << r.C_used.get_str() << '\n';
  return kOk;
}

RealSource custom_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::string kind;
  in >> kind;
  if (kind == "log") {
    long a = 0, b = 0;
    if (!(in >> a >> b) || a < 2 || b < 2) throw DataError("expected 'log A B' with A, B >= 2");
    return log_ratio_source(a, b);
  }
  if (kind == "sqrt") {
    long n = 0;
    if (!(in >> n) || n < 1) throw DataError("expected 'sqrt N'");
    return sqrt_source(n);
  }
  if (kind == "golden") return golden_ratio_source();
  throw DataError("custom alpha must be 'log A B', 'sqrt N' or 'golden'");
}

int cmd_contfrac(const std::string& alpha, const std::string& file, const std::string& target,
                 const Common& c) {
  RealSource src;
  if (alpha == "log3log2") {
    src = log_ratio_source(3, 2);
  } else if (alpha == "custom") {
    if (file.empty()) throw DomainError("--alpha custom needs a FILE");
    src = custom_source(file);
  } else {
    throw DomainError("--alpha must be log3log2 or custom");
  }
  ExpansionStop stop;
  stop.denominator = parse_integer(target, "--target");
  auto cv = convergents(src, stop, c.precision);
  for (const auto& k : cv) {
    emit({{"index", k.index},
          {"a", k.partial_quotient.get_str()},
          {"p", k.p.get_str()},
          {"q", k.q.get_str()},
          {"error", sci(k.error, 6)}});
  }
  if (!cv.empty()) {
    std::cerr << cv.size() << " convergents, last index " << cv.back().index << " with q of "
              << cv.back().q.get_str().size() << " digits\n";
  }
  return kOk;
}

int cmd_factors(const std::string& path) {
  FactorTable t = load_factor_table(path);
  FactorCheckReport r = factor_table_check(t);
  for (long tt : r.checked) {
    const auto& e = t.entries.at(tt);
    emit({{"t", tt},
          {"square_part", e.square_part().str()},
          {"complete", e.complete()}});
  }
  json viol = json::array();
  for (const auto& v : r.violations) viol.push_back({{"t", v.t}, {"d", v.d.get_str()}, {"x", v.x}});
  emit({{"source", t.source},
        {"checked", r.checked.size()},
        {"missing", r.missing},
        {"incomplete", r.incomplete.size()},
        {"candidates", r.candidates},
        {"largest", {{"t", r.largest.t}, {"d", r.largest.d.get_str()}, {"x", r.largest.x}}},
        {"violations", viol}});
  std::cerr << r.checked.size() << " exponents checked (" << r.incomplete.size()
            << " with an unresolved cofactor, " << r.missing.size() << " missing), "
            << r.candidates << " candidates d^x, " << r.violations.size() << " violations\n";
  return r.violations.empty() ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consecutive multiplicatively dependent triples: searches and certified bounds"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--precision", common.precision, "Interval precision in bits")
      ->check(CLI::Range(53L, 1L << 16));
  app.add_option("--slack", common.slack, "Tolerance in percent for reproduced bounds")
      ->check(CLI::Range(0.0, 100.0));

  long max_n = 1000;
  bool all2 = false, no_fam1 = false, sharp = false;
  std::string ckpt, which, id, bounds, sign, range, logs_path, M, C, alpha, target, table;
  std::vector<long> abc;
  std::vector<std::string> alpha_args;

  auto* search = app.add_subcommand("search", "Consecutive dependent triples up to N");
  search->add_option("--max", max_n)->required()->check(CLI::PositiveNumber);
  search->add_flag("--all-2md", all2);
  search->add_flag("--exclude-fam1", no_fam1);
  search->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", ckpt);

  auto* classify = app.add_subcommand("classify", "k-levels and family of one triple");
  classify->add_option("abc", abc)->required()->expected(3);

  auto* verify = app.add_subcommand("verify-theorem", "Check a classification theorem up to N");
  verify->add_option("theorem", which)->required()->check(CLI::IsMember({"a2", "3x2md"}));
  verify->add_option("--max", max_n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

  auto* lemma = app.add_subcommand("lemma", "Bounded search for a small-case lemma ('list' for ids)");
  lemma->add_option("lemma_id", id)->required();
  lemma->add_option("--bounds", bounds, "e.g. x=30,y=60");

  auto* pipe = app.add_subcommand("sit-pipeline", "Certified bound chain for the x, y, z, w, r equations");
  pipe->add_option("sign", sign)->required()->check(CLI::IsMember({"plus", "minus"}));
  pipe->add_flag("--sharp", sharp, "Unrounded bounds");

  auto* solve = app.add_subcommand("sit-solve", "Per-x LLL reduction and final search");
  solve->add_option("sign", sign)->required()->check(CLI::IsMember({"plus", "minus"}));
  solve->add_option("--x-range", range, "LO..HI (default 3..296)");
  solve->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

  auto* x2 = app.add_subcommand("x2minus2-bound", "Exponent bound for x^2 - 2 = y^n");
  x2->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

  auto* reduce = app.add_subcommand("reduce", "LLL lower bound for a linear form in logarithms");
  reduce->add_option("--logs", logs_path, "File with one positive rational gamma_i per line")
      ->required();
  reduce->add_option("--M", M)->required();
  reduce->add_option("--C", C, "Seed (default: first power of 10 above M^4)");

  auto* cf = app.add_subcommand("contfrac", "Convergents up to a denominator bound");
  cf->add_option("--alpha", alpha_args, "log3log2 | custom FILE")->required()->expected(1, 2);
  cf->add_option("--target", target, "Stop at the first q >= D")->required();

  auto* fc = app.add_subcommand("factors-check", "Check d^x = 1 (mod Q) over a factor table");
  fc->add_option("--table", table)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*search) return cmd_search(max_n, all2, no_fam1, ckpt, common);
    if (*classify) return cmd_classify(abc[0], abc[1], abc[2]);
    if (*verify) return cmd_verify(which, max_n, common);
    if (*lemma) return cmd_lemma(id, bounds);
    if (*pipe) return cmd_sit_pipeline(sign, sharp, common);
    if (*solve) return cmd_sit_solve(sign, range, common);
    if (*x2) return cmd_x2minus2(common);
    if (*reduce) return cmd_reduce(logs_path, M, C, common);
    if (*cf) {
      alpha = alpha_args[0];
      std::string file = alpha_args.size() > 1 ? alpha_args[1] : std::string();
      return cmd_contfrac(alpha, file, target, common);
    }
    if (*fc) return cmd_factors(table);
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kViolated;
  }
  return kUsage;
}
