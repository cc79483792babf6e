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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "mdt/arith.hpp"
#include "mdt/contfrac.hpp"
#include "mdt/dioph.hpp"
#include "mdt/lattice.hpp"
#include "mdt/linforms.hpp"
#include "mdt/muldep.hpp"
#include "mdt/search.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal string form.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value.set_str(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

mdt::Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return mdt::Sign::kPlus;
  if (s == "-" || s == "minus") return mdt::Sign::kMinus;
  throw mdt::DomainError("sign must be '+' or '-'");
}

py::dict record_dict(const mdt::TripleRecord& r) {
  const auto k = r.k_levels();
  py::dict d;
  d["a"] = r.a;
  d["b"] = r.b;
  d["c"] = r.c;
  d["k"] = py::make_tuple(k[0], k[1], k[2]);
  d["family"] = mdt::to_string(r.family);
  return d;
}

py::dict report_dict(const mdt::TheoremReport& rep) {
  py::list checked, bad;
  for (const auto& r : rep.checked) checked.append(record_dict(r));
  for (const auto& r : rep.violations) bad.append(record_dict(r));
  py::dict d;
  d["theorem"] = rep.theorem;
  d["max_n"] = rep.max_n;
  d["checked"] = checked;
  d["violations"] = bad;
  return d;
}

py::dict sit_dict(const mdt::SitSolution& s) {
  py::dict d;
  d["sign"] = std::string(1, mdt::sign_char(s.sign));
  d["x"] = s.x;
  d["y"] = s.y;
  d["z"] = s.z;
  d["w"] = s.w;
  d["r"] = s.r;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mdtriples, m) {
  m.doc() = "Multiplicatively dependent consecutive triples";

  py::register_exception<mdt::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<mdt::PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<mdt::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<mdt::DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<mdt::GiveUpError>(m, "GiveUpError", PyExc_RuntimeError);

  m.def("is_prime", &mdt::is_prime, py::arg("n"));
  m.def(
      "factorize",
      [](const mpz_class& n) {
        const auto f = mdt::factorize(n);
        std::vector<std::pair<mpz_class, unsigned long>> out;
        for (const auto& pp : f.factors()) out.emplace_back(pp.prime, pp.exponent);
        return out;
      },
      py::arg("n"), "Prime factorization as [(p, e), ...].");
  m.def("vp", py::overload_cast<const mpz_class&, const mpz_class&>(&mdt::vp), py::arg("p"), py::arg("m"));
  m.def(
      "primitive_part",
      [](const mpz_class& a, const mpz_class& b, unsigned long n, const std::string& sign) {
        return mdt::primitive_part(a, b, n, parse_sign(sign));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("sign") = "-");

  m.def(
      "is_multiplicatively_dependent",
      [](const mdt::Tuple& t) {
        const auto dc = mdt::is_multiplicatively_dependent(t);
        py::dict d;
        d["dependent"] = dc.dependent;
        d["witness"] = dc.witness ? py::cast(*dc.witness) : py::none();
        d["k"] = dc.k ? py::cast(*dc.k) : py::none();
        return d;
      },
      py::arg("values"));
  m.def("witness_holds", &mdt::witness_holds, py::arg("values"), py::arg("k"));
  m.def("classify_k", &mdt::classify_k, py::arg("values"));
  m.def(
      "classify_family", [](long a, long b, long c) { return std::string(mdt::to_string(mdt::classify_family(a, b, c))); },
      py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "search",
      [](long max_n, bool all_2md, bool exclude_fam1, int jobs) {
        mdt::SearchOptions o;
        o.max_n = max_n;
        o.require = all_2md ? mdt::RequireK::kAll2md : mdt::RequireK::kAny;
        o.exclude_fam1 = exclude_fam1;
        o.jobs = jobs;
        std::vector<mdt::TripleRecord> recs;
        {
          py::gil_scoped_release release;
          recs = mdt::search_consecutive_md_triples(o);
        }
        py::list out;
        for (const auto& r : recs) out.append(record_dict(r));
        return out;
      },
      py::arg("max_n"), py::arg("all_2md") = false, py::arg("exclude_fam1") = false, py::arg("jobs") = 1);
  m.def(
      "verify_main_theorems",
      [](long max_n, int jobs) {
        std::array<mdt::TheoremReport, 2> reps;
        {
          py::gil_scoped_release release;
          reps = mdt::verify_main_theorems(max_n, jobs);
        }
        return py::make_tuple(report_dict(reps[0]), report_dict(reps[1]));
      },
      py::arg("max_n"), py::arg("jobs") = 1);

  m.def(
      "lll_reduce",
      [](const std::vector<std::vector<mpz_class>>& columns) {
        return mdt::lll_reduce(mdt::LatticeBasis{columns}).columns;
      },
      py::arg("columns"), "LLL-reduce a square basis given as a list of column vectors (delta = 3/4).");

  m.def(
      "log_ratio_convergents",
      [](long num, long den, std::size_t count) {
        mdt::ExpansionStop stop;
        stop.count = count;
        std::vector<std::pair<mpz_class, mpz_class>> out;
        for (const auto& c : mdt::convergents(mdt::log_ratio_source(num, den), stop)) out.emplace_back(c.p, c.q);
        return out;
      },
      py::arg("num"), py::arg("den"), py::arg("count"), "Convergents (p, q) of log(num)/log(den).");

  m.def(
      "sit_pipeline",
      [](const std::string& sign) {
        const auto b = mdt::sit_pipeline(parse_sign(sign));
        py::dict d;
        d["M_max"] = b.M_max;
        d["x_max"] = b.x_max;
        d["r_max"] = b.r_max;
        d["x_reduced"] = b.x_reduced;
        d["cf_index"] = b.cf_index;
        d["r_reduced"] = b.r_reduced;
        return d;
      },
      py::arg("sign"));
  m.def(
      "sit_holds",
      [](const std::string& sign, long x, unsigned long y, unsigned long z, unsigned long w, long r) {
        return mdt::sit_holds({parse_sign(sign), x, y, z, w, r});
      },
      py::arg("sign"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("w"), py::arg("r"));
  m.def(
      "solve_sit_final",
      [](const std::string& sign, long x_lo, long x_hi, unsigned jobs) {
        mdt::SitFinalOptions o;
        o.x_lo = x_lo;
        o.x_hi = x_hi;
        o.jobs = jobs;
        mdt::SitFinalResult res;
        {
          py::gil_scoped_release release;
          res = mdt::solve_sit_final(parse_sign(sign), o);
        }
        py::list sols;
        for (const auto& s : res.solutions) sols.append(sit_dict(s));
        py::dict d;
        d["solutions"] = sols;
        d["U_max"] = res.U_max.get_d();
        d["U_argmax"] = res.U_argmax;
        return d;
      },
      py::arg("sign"), py::arg("x_lo") = 3, py::arg("x_hi") = 296, py::arg("jobs") = 1);

  m.def("lemma_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : mdt::lemma_registry()) ids.push_back(info.id);
    return ids;
  });
  m.def(
      "lemma_search",
      [](const std::string& id, const mdt::LemmaBounds& bounds) {
        const auto r = mdt::lemma_search(id, bounds);
        py::dict d;
        d["id"] = r.id;
        d["bounds"] = r.bounds;
        d["found"] = r.found;
        d["expected"] = r.expected;
        d["matches"] = r.matches;
        return d;
      },
      py::arg("id"), py::arg("bounds") = mdt::LemmaBounds{});
}
