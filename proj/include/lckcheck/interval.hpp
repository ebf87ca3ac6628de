#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace lck {

// Working precision in bits for a decimal digit count, with guard bits.
mpfr_prec_t bits_for_digits(int digits);

// Owning wrapper around an mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = 64);
  Float(mpfr_prec_t prec, long v);
  Float(const Float& o);
  Float(Float&& o) noexcept;
  Float& operator=(const Float& o);
  Float& operator=(Float&& o) noexcept;
  ~Float();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  // Exact rational value (finite numbers only).
  mpq_class to_rational() const;

  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

// Closed real interval [lo, hi] with outward rounding.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Float& lo, const Float& hi);

  static Interval point(const Float& v);
  static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
  // [center - radius, center + radius]
  static Interval ball(const Float& center, const Float& radius);

  const Float& lo() const { return lo_; }
  const Float& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool contains_zero() const;
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool contains(const Interval& o) const;
  bool overlaps(const Interval& o) const;
  // Upper bound on hi - lo.
  Float width() const;
  Float mid() const;
  // Upper bound on max(|lo|, |hi|) and lower bound on min |x| over the interval.
  Float mag() const;
  Float mig() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws Error(kInternal) when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  Interval sqr() const;
  Interval sqrt() const;  // requires lo >= 0 after clamping negatives to 0
  Interval log() const;   // requires lo > 0
  Interval abs() const;
  Interval max_with_one() const;
  Interval root(unsigned long k) const;  // k-th root of a nonnegative interval
  Interval pow(unsigned long k) const;   // nonnegative interval only

 private:
  Float lo_, hi_;
};

struct ComplexInterval {
  Interval re, im;

  explicit ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexInterval from_rational(const mpq_class& q, mpfr_prec_t prec);

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
  ComplexInterval conj() const { return {re, -im}; }

  // |z|^2 and |z|
  Interval norm() const;
  Interval abs() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  // Upper bound on the distance from the midpoint to any point of the box.
  Float radius() const;
};

}  // namespace lck
