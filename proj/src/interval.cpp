#include "lckcheck/interval.hpp"

#include <cmath>
#include <utility>

#include "lckcheck/errors.hpp"

namespace lck {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

// --- Float ---------------------------------------------------------------

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Float::Float(mpfr_prec_t prec, long v) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Float::Float(const Float& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Float::Float(Float&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Float& Float::operator=(const Float& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Float::~Float() { mpfr_clear(v_); }

std::string Float::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpq_class Float::to_rational() const {
  if (!mpfr_number_p(v_)) throw Error(Status::kInternal, "non-finite value has no rational form");
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

// --- Interval ------------------------------------------------------------

namespace {

mpfr_prec_t prec2(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

Float min4(const Float& a, const Float& b, const Float& c, const Float& d) {
  const Float* m = &a;
  for (const Float* x : {&b, &c, &d})
    if (mpfr_less_p(x->get(), m->get())) m = x;
  return *m;
}

Float max4(const Float& a, const Float& b, const Float& c, const Float& d) {
  const Float* m = &a;
  for (const Float* x : {&b, &c, &d})
    if (mpfr_greater_p(x->get(), m->get())) m = x;
  return *m;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(const Float& lo, const Float& hi) : lo_(lo), hi_(hi) {}

Interval Interval::point(const Float& v) { return Interval(v, v); }

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::ball(const Float& center, const Float& radius) {
  mpfr_prec_t p = center.precision();
  Interval r(p);
  mpfr_sub(r.lo_.get(), center.get(), radius.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), center.get(), radius.get(), MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.lo_.get()) && mpfr_greaterequal_p(hi_.get(), o.hi_.get());
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.hi_.get()) && mpfr_lessequal_p(o.lo_.get(), hi_.get());
}

Float Interval::width() const {
  Float w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Float Interval::mid() const {
  Float m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Float Interval::mag() const {
  Float a(precision()), b(precision());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
  return mpfr_greater_p(a.get(), b.get()) ? a : b;
}

Float Interval::mig() const {
  if (contains_zero()) return Float(precision());
  Float a(precision()), b(precision());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDD);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDD);
  return mpfr_less_p(a.get(), b.get()) ? a : b;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(prec2(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(prec2(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = prec2(a, b);
  Float d[4] = {Float(p), Float(p), Float(p), Float(p)};
  Float u[4] = {Float(p), Float(p), Float(p), Float(p)};
  const Float* xs[2] = {&a.lo_, &a.hi_};
  const Float* ys[2] = {&b.lo_, &b.hi_};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(d[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDD);
      mpfr_mul(u[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDU);
    }
  return Interval(min4(d[0], d[1], d[2], d[3]), max4(u[0], u[1], u[2], u[3]));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(Status::kInternal, "interval division by an interval containing zero");
  const mpfr_prec_t p = prec2(a, b);
  Float d[4] = {Float(p), Float(p), Float(p), Float(p)};
  Float u[4] = {Float(p), Float(p), Float(p), Float(p)};
  const Float* xs[2] = {&a.lo_, &a.hi_};
  const Float* ys[2] = {&b.lo_, &b.hi_};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(d[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDD);
      mpfr_div(u[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDU);
    }
  return Interval(min4(d[0], d[1], d[2], d[3]), max4(u[0], u[1], u[2], u[3]));
}

Interval Interval::sqr() const {
  Interval r(precision());
  if (contains_zero()) {
    Float m = mag();
    mpfr_set_zero(r.lo_.get(), 1);
    mpfr_sqr(r.hi_.get(), m.get(), MPFR_RNDU);
    return r;
  }
  Float a = mig(), b = mag();
  mpfr_sqr(r.lo_.get(), a.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), b.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (hi_.sign() < 0) throw Error(Status::kInternal, "sqrt of a negative interval");
  Interval r(precision());
  if (lo_.sign() <= 0) {
    mpfr_set_zero(r.lo_.get(), 1);
  } else {
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (lo_.sign() <= 0) throw Error(Status::kInternal, "log of an interval reaching zero");
  Interval r(precision());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  if (contains_zero()) {
    Interval r(precision());
    r.hi_ = mag();
    return r;
  }
  return Interval(mig(), mag());
}

Interval Interval::max_with_one() const {
  Interval r(*this);
  if (mpfr_cmp_ui(r.lo_.get(), 1) < 0) mpfr_set_ui(r.lo_.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_ui(r.hi_.get(), 1) < 0) mpfr_set_ui(r.hi_.get(), 1, MPFR_RNDN);
  return r;
}

Interval Interval::root(unsigned long k) const {
  if (lo_.sign() < 0) throw Error(Status::kInternal, "root of a negative interval");
  Interval r(precision());
  mpfr_rootn_ui(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned long k) const {
  if (lo_.sign() < 0) throw Error(Status::kInternal, "power of a negative interval");
  Interval r(precision());
  mpfr_pow_ui(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
  mpfr_pow_ui(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
  return r;
}

// --- ComplexInterval -----------------------------------------------------

ComplexInterval ComplexInterval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  return {Interval::from_rational(q, prec), Interval(prec)};
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval n = b.norm();
  ComplexInterval num = a * b.conj();
  return {num.re / n, num.im / n};
}

Interval ComplexInterval::norm() const { return re.sqr() + im.sqr(); }

Interval ComplexInterval::abs() const { return norm().sqrt(); }

// The midpoint is rounded, so the full width is used as the bound.
Float ComplexInterval::radius() const {
  Float wr = re.width(), wi = im.width();
  Float r(wr.precision());
  mpfr_hypot(r.get(), wr.get(), wi.get(), MPFR_RNDU);
  return r;
}

}  // namespace lck
