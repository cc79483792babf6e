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

#include "mdt/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace mdt {

Tribool operator!(Tribool t) {
  switch (t) {
    case Tribool::kTrue:
      return Tribool::kFalse;
    case Tribool::kFalse:
      return Tribool::kTrue;
    default:
      return Tribool::kUnknown;
  }
}

Tribool operator&&(Tribool a, Tribool b) {
  if (a == Tribool::kFalse || b == Tribool::kFalse) return Tribool::kFalse;
  if (a == Tribool::kTrue && b == Tribool::kTrue) return Tribool::kTrue;
  return Tribool::kUnknown;
}

Tribool operator||(Tribool a, Tribool b) {
  if (a == Tribool::kTrue || b == Tribool::kTrue) return Tribool::kTrue;
  if (a == Tribool::kFalse && b == Tribool::kFalse) return Tribool::kFalse;
  return Tribool::kUnknown;
}

const char* to_string(Tribool t) {
  switch (t) {
    case Tribool::kTrue:
      return "proven";
    case Tribool::kFalse:
      return "refuted";
    default:
      return "unknown";
  }
}

namespace {

// RAII scratch value.
struct Scratch {
  mpfr_t v;
  explicit Scratch(Precision p) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
};

mpq_class to_q(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) throw DomainError("non-finite interval endpoint");
  if (mpfr_zero_p(x)) return 0;
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  mpq_class q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

void raise(mpfr_t x, Precision p, mpfr_rnd_t r) {
  if (mpfr_get_prec(x) < p) mpfr_prec_round(x, p, r);
}

void check_finite(mpfr_srcptr lo, mpfr_srcptr hi) {
  if (!mpfr_number_p(lo) || !mpfr_number_p(hi)) {
    throw DomainError("interval operation left the finite reals");
  }
}

}  // namespace

Interval::Interval(Precision prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, Precision prec) : Interval(prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, Precision prec) : Interval(prec) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& value, Precision prec) : Interval(prec) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval Interval::from_decimal(std::string_view text, Precision prec) {
  std::size_t i = 0;
  auto fail = [&]() -> Interval {
    throw DataError("malformed decimal literal: " + std::string(text));
  };
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_dot) ++frac_digits;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (digits.empty()) return fail();
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) return fail();
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
    }
    exponent = std::stol(std::string(text.substr(start, i - start)));
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i != text.size()) return fail();
  mpz_class mant(digits, 10);
  if (neg) mant = -mant;
  long e10 = exponent - frac_digits;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
  mpq_class q = e10 >= 0 ? mpq_class(mant * p10) : mpq_class(mant, p10);
  q.canonicalize();
  return Interval(q, prec);
}

Interval Interval::ratio(long num, long den, Precision prec) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Interval(q, prec);
}

Interval Interval::from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                  Precision prec) {
  if (lo > hi) throw DomainError("interval endpoints out of order");
  Interval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

mpq_class Interval::lo_q() const { return to_q(lo_); }
mpq_class Interval::hi_q() const { return to_q(hi_); }
double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_d() const {
  Scratch m(prec_ + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

Interval Interval::lower_point() const {
  Interval r(*this);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::upper_point() const {
  Interval r(*this);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

bool Interval::contains(const mpq_class& x) const {
  return lo_q() <= x && x <= hi_q();
}

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_);
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

mpq_class Interval::width() const { return hi_q() - lo_q(); }

Interval Interval::with_precision(Precision prec) const {
  Interval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  Precision p = std::max(prec_, o.prec_);
  Scratch l(p), h(p);
  mpfr_add(l.v, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(h.v, hi_, o.hi_, MPFR_RNDU);
  prec_ = p;
  raise(lo_, p, MPFR_RNDD);
  raise(hi_, p, MPFR_RNDU);
  mpfr_swap(lo_, l.v);
  mpfr_swap(hi_, h.v);
  check_finite(lo_, hi_);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Precision p = std::max(prec_, o.prec_);
  Scratch l(p), h(p);
  mpfr_sub(l.v, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(h.v, hi_, o.lo_, MPFR_RNDU);
  prec_ = p;
  raise(lo_, p, MPFR_RNDD);
  raise(hi_, p, MPFR_RNDU);
  mpfr_swap(lo_, l.v);
  mpfr_swap(hi_, h.v);
  check_finite(lo_, hi_);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  Precision p = std::max(prec_, o.prec_);
  Scratch l(p), h(p), t(p);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {o.lo_, o.hi_};
  mpfr_set_inf(l.v, 1);
  mpfr_set_inf(h.v, -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      mpfr_min(l.v, l.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      mpfr_max(h.v, h.v, t.v, MPFR_RNDU);
    }
  }
  prec_ = p;
  raise(lo_, p, MPFR_RNDD);
  raise(hi_, p, MPFR_RNDU);
  mpfr_swap(lo_, l.v);
  mpfr_swap(hi_, h.v);
  check_finite(lo_, hi_);
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw DomainError("division by an interval containing 0");
  Precision p = std::max(prec_, o.prec_);
  Scratch l(p), h(p), t(p);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {o.lo_, o.hi_};
  mpfr_set_inf(l.v, 1);
  mpfr_set_inf(h.v, -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      mpfr_min(l.v, l.v, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      mpfr_max(h.v, h.v, t.v, MPFR_RNDU);
    }
  }
  prec_ = p;
  raise(lo_, p, MPFR_RNDD);
  raise(hi_, p, MPFR_RNDU);
  mpfr_swap(lo_, l.v);
  mpfr_swap(hi_, h.v);
  check_finite(lo_, hi_);
  return *this;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator+(Interval a, long b) { return a += Interval(b, a.prec_); }
Interval operator-(Interval a, long b) { return a -= Interval(b, a.prec_); }
Interval operator*(Interval a, long b) { return a *= Interval(b, a.prec_); }
Interval operator/(Interval a, long b) { return a /= Interval(b, a.prec_); }
Interval operator+(long a, const Interval& b) { return Interval(a, b.prec_) + b; }
Interval operator-(long a, const Interval& b) { return Interval(a, b.prec_) - b; }
Interval operator*(long a, const Interval& b) { return Interval(a, b.prec_) * b; }
Interval operator/(long a, const Interval& b) { return Interval(a, b.prec_) / b; }

std::string Interval::str(int digits) const {
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*RDe", digits - 1, lo_);
  mpfr_asprintf(&hi, "%.*RUe", digits - 1, hi_);
  std::string out = std::string("[") + lo + ", " + hi + "]";
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << x.str();
}

// Free functions work on endpoint copies through the public accessors.
namespace {

Interval make(Precision p, mpfr_srcptr lo, mpfr_srcptr hi) {
  mpq_class l = to_q(lo), h = to_q(hi);
  return Interval::from_endpoints(l, h, p);
}

template <class Fn>
Interval monotone(const Interval& x, Fn fn) {
  Precision p = x.precision();
  Scratch l(p), h(p);
  fn(l.v, x.lo(), MPFR_RNDD);
  fn(h.v, x.hi(), MPFR_RNDU);
  check_finite(l.v, h.v);
  return make(p, l.v, h.v);
}

}  // namespace

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  Interval nx = -x;
  Precision p = x.precision();
  Scratch h(p), z(p);
  mpfr_max(h.v, nx.hi(), x.hi(), MPFR_RNDU);
  mpfr_set_zero(z.v, 1);
  return make(p, z.v, h.v);
}

Interval sqr(const Interval& x) {
  Interval a = abs(x);
  return a * a;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo()) < 0) throw DomainError("sqrt of a possibly negative interval");
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t m) {
    mpfr_sqrt(r, v, m);
  });
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("log of a non-positive interval");
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t m) {
    mpfr_log(r, v, m);
  });
}

Interval exp(const Interval& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t m) {
    mpfr_exp(r, v, m);
  });
}

Interval pow(const Interval& base, long e) {
  Precision p = base.precision();
  if (e == 0) return Interval(1L, p);
  if (e < 0) return Interval(1L, p) / pow(base, -e);
  Interval b = (e % 2 == 0) ? abs(base) : base;
  Scratch l(p), h(p);
  mpfr_pow_si(l.v, b.lo(), e, MPFR_RNDD);
  mpfr_pow_si(h.v, b.hi(), e, MPFR_RNDU);
  check_finite(l.v, h.v);
  return make(p, l.v, h.v);
}

Interval pow(const Interval& base, const Interval& exponent) {
  return exp(exponent * log(base));
}

Interval max(const Interval& a, const Interval& b) {
  Precision p = std::max(a.precision(), b.precision());
  Scratch l(p), h(p);
  mpfr_max(l.v, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(h.v, a.hi(), b.hi(), MPFR_RNDU);
  return make(p, l.v, h.v);
}

Interval min(const Interval& a, const Interval& b) {
  Precision p = std::max(a.precision(), b.precision());
  Scratch l(p), h(p);
  mpfr_min(l.v, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(h.v, a.hi(), b.hi(), MPFR_RNDU);
  return make(p, l.v, h.v);
}

Interval log_of(const mpz_class& n, Precision prec) {
  return log(Interval(n, prec));
}

Interval log_of(long n, Precision prec) { return log(Interval(n, prec)); }

Interval sqrt_of(long n, Precision prec) { return sqrt(Interval(n, prec)); }

Tribool lt(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Tribool::kTrue;
  if (mpfr_greaterequal_p(a.lo(), b.hi())) return Tribool::kFalse;
  return Tribool::kUnknown;
}

Tribool le(const Interval& a, const Interval& b) {
  if (mpfr_lessequal_p(a.hi(), b.lo())) return Tribool::kTrue;
  if (mpfr_greater_p(a.lo(), b.hi())) return Tribool::kFalse;
  return Tribool::kUnknown;
}

Tribool gt(const Interval& a, const Interval& b) { return lt(b, a); }
Tribool ge(const Interval& a, const Interval& b) { return le(b, a); }

std::optional<mpz_class> unique_floor(const Interval& x) {
  mpz_class l, h;
  mpfr_get_z(l.get_mpz_t(), x.lo(), MPFR_RNDD);
  mpfr_get_z(h.get_mpz_t(), x.hi(), MPFR_RNDD);
  if (l != h) return std::nullopt;
  return l;
}

std::optional<mpz_class> unique_round(const Interval& x) {
  mpq_class lo = x.lo_q(), hi = x.hi_q();
  if (hi - lo >= mpq_class(1, 4)) return std::nullopt;
  mpq_class half(1, 2);
  mpq_class a = lo + half, b = hi + half;
  mpz_class fa, fb;
  mpz_fdiv_q(fa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_fdiv_q(fb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  // x + 1/2 must not reach an integer inside the enclosure except at lo.
  if (fa != fb) return std::nullopt;
  if (b == mpq_class(fb)) return std::nullopt;
  return fa;
}

mpz_class ceil_hi(const Interval& x) {
  mpz_class r;
  mpfr_get_z(r.get_mpz_t(), x.hi(), MPFR_RNDU);
  return r;
}

mpz_class floor_lo(const Interval& x) {
  mpz_class r;
  mpfr_get_z(r.get_mpz_t(), x.lo(), MPFR_RNDD);
  return r;
}

mpq_class round_up_significant(const mpq_class& x, int digits) {
  if (x <= 0) throw DomainError("round_up_significant expects x > 0");
  // Find k with 10^k <= x < 10^(k+1).
  long k = 0;
  mpq_class ten(10);
  mpq_class probe(1);
  while (probe * ten <= x) {
    probe *= ten;
    ++k;
  }
  while (probe > x) {
    probe /= ten;
    --k;
  }
  long shift = k - (digits - 1);
  mpq_class scale(1);
  for (long i = 0; i < (shift < 0 ? -shift : shift); ++i) scale *= ten;
  if (shift < 0) scale = 1 / scale;
  mpq_class units = x / scale;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), units.get_num_mpz_t(), units.get_den_mpz_t());
  mpq_class out = mpq_class(c) * scale;
  out.canonicalize();
  return out;
}

}  // namespace mdt
