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

#include "mdt/linforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdt {

namespace {

Interval unit_log(Precision prec) { return log(Interval(1L, prec) + sqrt_of(2, prec)); }

Interval dec(const char* text, Precision prec) { return Interval::from_decimal(text, prec); }

// a + s*b*sqrt2 with s = +-1, rejected while the enclosure touches zero.
Interval surd_part(const mpz_class& a, const mpz_class& b, int s, Precision prec) {
  return with_escalation(
      [&](Precision p) -> std::optional<Interval> {
        Interval v = Interval(a, p) + Interval(mpz_class(s * b), p) * sqrt_of(2, p);
        if (v.contains_zero()) return std::nullopt;
        return v;
      },
      prec, std::max<Precision>(prec, kMaxPrecision));
}

void require(Tribool t, const std::string& what) {
  if (!proven(t)) throw PreconditionError("condition not proven: " + what);
}

// Pairwise coprime numbers such that each input is a product of their powers.
std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& values) {
  std::vector<mpz_class> base;
  std::vector<mpz_class> work(values.begin(), values.end());
  while (!work.empty()) {
    mpz_class x = work.back();
    work.pop_back();
    if (x == 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      mpz_class g = gcd(x, base[i]);
      if (g == 1) continue;
      mpz_class q = base[i];
      base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(g);
      work.push_back(q / g);
      work.push_back(x / g);
      split = true;
      break;
    }
    if (!split) base.push_back(x);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

}  // namespace

std::string describe(const LogArgument& arg) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerArg>) {
          return v.m.get_str();
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return "(" + v.a.get_str() + "-" + v.b.get_str() + "*sqrt2)/(" + v.a.get_str() + "+" +
                 v.b.get_str() + "*sqrt2)";
        } else {
          return "sqrt2+1";
        }
      },
      arg);
}

Interval log_value(const LogArgument& arg, Precision prec) {
  return std::visit(
      [prec](const auto& v) -> Interval {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerArg>) {
          if (v.m < 1) throw DomainError("log of non-positive integer");
          return log_of(v.m, prec);
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          if (v.a == 0 && v.b == 0) throw DomainError("degenerate quadratic surd");
          if (v.a * v.a - 2 * v.b * v.b < 0) throw DomainError("quadratic surd is negative");
          return log(abs(surd_part(v.a, v.b, -1, prec))) - log(abs(surd_part(v.a, v.b, 1, prec)));
        } else {
          return unit_log(prec);
        }
      },
      arg);
}

Interval height(const LogArgument& arg, Precision prec) {
  return std::visit(
      [prec](const auto& v) -> Interval {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerArg>) {
          if (v.m < 1) throw DomainError("height of non-positive integer");
          return log_of(v.m, prec);
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          mpz_class y = v.a * v.a - 2 * v.b * v.b;
          if (y == 0) throw DomainError("degenerate quadratic surd");
          mpz_class ay = abs(y);
          Interval la = log(abs(surd_part(v.a, v.b, -1, prec))) -
                        log(abs(surd_part(v.a, v.b, 1, prec)));
          return (log_of(ay, prec) + abs(la)) / 2;
        } else {
          return unit_log(prec) / 2;
        }
      },
      arg);
}

Interval surd_height_bound(const Interval& log_y, long n, Precision prec) {
  if (n < 1) throw DomainError("exponent must be positive");
  return (log_y + Interval::ratio(3, n, prec) * unit_log(prec)) / 2;
}

LinearForm::LinearForm(std::vector<LinearTerm> terms) : terms_(std::move(terms)) {
  bool any = std::any_of(terms_.begin(), terms_.end(),
                         [](const LinearTerm& t) { return t.coeff != 0; });
  if (!any) throw PreconditionError("linear form needs a nonzero coefficient");
}

Interval LinearForm::value(Precision prec) const {
  Interval s(0L, prec);
  for (const auto& t : terms_) s += Interval(t.coeff, prec) * log_value(t.arg, prec);
  return s;
}

bool LinearForm::vanishes() const {
  std::vector<mpz_class> values;
  for (const auto& t : terms_) {
    const auto* ia = std::get_if<IntegerArg>(&t.arg);
    if (!ia) throw DomainError("exact vanishing test needs integer arguments");
    if (ia->m < 1) throw DomainError("integer argument must be positive");
    values.push_back(ia->m);
  }
  for (const auto& q : coprime_base(values)) {
    mpz_class total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      mpz_class rest;
      unsigned long e = mpz_remove(rest.get_mpz_t(), values[i].get_mpz_t(), q.get_mpz_t());
      total += terms_[i].coeff * e;
    }
    if (total != 0) return false;
  }
  return true;
}

Interval matveev_constant(long n, Precision prec) {
  if (n < 1) throw DomainError("number of logarithms must be positive");
  Interval nn(n, prec);
  return dec("1.4", prec) * pow(nn, Interval::ratio(9, 2, prec)) * pow(Interval(30L, prec), n + 3);
}

Interval matveev_lower_bound(const LinearForm& form, const mpz_class& maxcoeff, Precision prec) {
  Interval prod(1L, prec);
  for (const auto& t : form.terms()) {
    const auto* ia = std::get_if<IntegerArg>(&t.arg);
    if (!ia || ia->m < 2) throw DomainError("Matveev bound needs integer arguments >= 2");
    if (abs(t.coeff) > maxcoeff) throw PreconditionError("maxcoeff below a coefficient");
    prod *= log_of(ia->m, prec);
  }
  if (maxcoeff < 1) throw PreconditionError("maxcoeff must be >= 1");
  if (form.vanishes()) throw DomainError("linear form vanishes");
  const long n = static_cast<long>(form.size());
  return -(matveev_constant(n, prec) * prod * (1L + log_of(maxcoeff, prec)));
}

Interval corollary_log_A(const LogArgument& arg, long D, Precision prec) {
  if (D < 1) throw DomainError("degree must be positive");
  Interval h = height(arg, prec);
  Interval l = abs(log_value(arg, prec)) / D;
  return max(max(h, l), Interval::ratio(1, D, prec));
}

Interval corollary_b_prime(const CorollaryInput& in) {
  Precision prec = std::max(in.log_A1.precision(), in.log_A2.precision());
  if (in.b1 == 0 && in.b2 == 0) throw DomainError("b1 and b2 are both zero");
  return Interval(mpz_class(abs(in.b1)), prec) / (in.D * in.log_A2) +
         Interval(mpz_class(abs(in.b2)), prec) / (in.D * in.log_A1);
}

Interval laurent_corollary_bound(const CorollaryInput& in, LaurentVariant variant) {
  Precision prec = std::max(in.log_A1.precision(), in.log_A2.precision());
  const bool first = variant == LaurentVariant::kC20_3_m18;
  Interval C = dec(first ? "20.3" : "17.9", prec);
  long m = first ? 18 : 30;
  Interval bp = corollary_b_prime(in);
  Interval inner = max(max(log(bp) + dec("0.38", prec), Interval::ratio(m, in.D, prec)),
                       Interval(1L, prec));
  return -(C * pow(Interval(in.D, prec), 4) * sqr(inner) * in.log_A1 * in.log_A2);
}

LaurentDerived laurent_derived(const LaurentParams& p, const Interval& h, Precision prec) {
  if (!(p.rho > 1)) throw PreconditionError("rho must exceed 1");
  if (!(p.mu >= mpq_class(1, 3) && p.mu < 1)) throw PreconditionError("mu must lie in [1/3, 1)");
  prec = std::max(prec, h.precision());
  const mpq_class sigma_q = (1 + 2 * p.mu - p.mu * p.mu) / 2;
  LaurentDerived d;
  d.sigma = Interval(sigma_q, prec);
  d.lambda = d.sigma * log(Interval(p.rho, prec));
  d.H = h / d.lambda + Interval(1L, prec) / d.sigma;
  Interval root = sqrt(Interval(1L, prec) + Interval(1L, prec) / (4L * sqr(d.H)));
  d.omega = 2L * (1L + root);
  d.theta = root + Interval(1L, prec) / (2L * d.H);
  return d;
}

Interval laurent_C(const LaurentParams& p, const Interval& lambda, const Interval& sigma,
                   const Interval& omega, const Interval& theta, const Interval& H,
                   const Interval& a1, const Interval& a2) {
  Precision prec = std::max({lambda.precision(), omega.precision(), a1.precision(),
                             a2.precision()});
  Interval one(1L, prec);
  Interval mu(p.mu, prec);
  Interval t1 = sqr(omega) / 9L;
  Interval t2 = 8L * lambda * pow(omega, Interval::ratio(5, 4, prec)) *
                pow(theta, Interval::ratio(1, 4, prec)) / (3L * sqrt(a1 * a2) * sqrt(H));
  Interval t3 = Interval::ratio(4, 3, prec) * (one / a1 + one / a2) * lambda * omega / H;
  Interval inner = omega / 6L + sqrt(t1 + t2 + t3) / 2L;
  return mu / (pow(lambda, 3) * sigma) * sqr(inner);
}

Interval laurent_C_prime(const LaurentParams& p, const Interval& lambda, const Interval& sigma,
                         const Interval& omega, const Interval& theta, const Interval& C) {
  Precision prec = std::max(lambda.precision(), C.precision());
  return sqrt(C * sigma * omega * theta / (pow(lambda, 3) * Interval(p.mu, prec)));
}

LaurentResult laurent_theorem_bound(const LaurentParams& params, const Interval& h,
                                    const Interval& a1, const Interval& a2,
                                    const LaurentInput& in) {
  if (in.b1 <= 0 || in.b2 <= 0) throw PreconditionError("b1, b2 must be positive");
  if (in.D < 1) throw PreconditionError("degree must be positive");
  require(gt(in.log_alpha1, Interval(0L, in.log_alpha1.precision())), "alpha1 > 1");
  require(gt(in.log_alpha2, Interval(0L, in.log_alpha2.precision())), "alpha2 > 1");
  Precision prec = std::max({h.precision(), a1.precision(), a2.precision(),
                             in.log_alpha1.precision(), in.log_alpha2.precision()});
  LaurentResult r;
  r.derived = laurent_derived(params, h, prec);
  const auto& d = r.derived;
  const Interval D(in.D, prec);
  const Interval one(1L, prec);

  Interval c1 = D * (log(Interval(in.b1, prec) / a2 + Interval(in.b2, prec) / a1) + log(d.lambda) +
                     dec("1.75", prec)) +
                dec("0.06", prec);
  require(ge(h, c1), "(1) h >= D(log(b1/a2 + b2/a1) + log lambda + 1.75) + 0.06");
  require(ge(h, d.lambda), "(1) h >= lambda");
  require(ge(h, D * log_of(2, prec) / 2L), "(1) h >= D log 2 / 2");
  Interval rho_m1(mpq_class(params.rho - 1), prec);
  require(ge(a1, one), "(2) a1 >= 1");
  require(ge(a1, rho_m1 * in.log_alpha1 + 2L * D * in.height1),
          "(2) a1 >= (rho - 1) log alpha1 + 2 D h(alpha1)");
  require(ge(a2, one), "(2) a2 >= 1");
  require(ge(a2, rho_m1 * in.log_alpha2 + 2L * D * in.height2),
          "(2) a2 >= (rho - 1) log alpha2 + 2 D h(alpha2)");
  require(ge(a1 * a2, sqr(d.lambda)), "(3) a1 a2 >= lambda^2");

  r.C = laurent_C(params, d.lambda, d.sigma, d.omega, d.theta, d.H, a1, a2);
  r.C_prime = laurent_C_prime(params, d.lambda, d.sigma, d.omega, d.theta, r.C);
  Interval g = h + d.lambda / d.sigma;
  Interval core = sqr(g) * a1 * a2;
  r.lower_bound = -(r.C * core) - sqrt(d.omega * d.theta) * g - log(r.C_prime * core);
  return r;
}

}  // namespace mdt
