#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lck {

// Dense univariate polynomial, coefficients in ascending degree order.
// Canonical form carries no trailing zero coefficients; the zero polynomial
// has an empty coefficient vector and degree -1.
template <class Coeff>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly constant(const Coeff& v) { return Poly(std::vector<Coeff>{v}); }
  static Poly monomial(const Coeff& v, int degree) {
    std::vector<Coeff> c(static_cast<size_t>(degree) + 1, Coeff(0));
    c.back() = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(Coeff(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  const Coeff& lead() const { return c_.back(); }

  Coeff operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Coeff(0);
    return c_[static_cast<size_t>(i)];
  }

  Coeff eval(const Coeff& at) const {
    Coeff acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Coeff> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<Coeff> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Coeff& k, const Poly& a) {
    std::vector<Coeff> r(a.c_);
    for (auto& v : r) v *= k;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

// --- conversions and normalization ---------------------------------------

RatPoly to_rat(const IntPoly& f);
mpz_class content(const IntPoly& f);
// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
// Clears denominators and divides by the content; positive leading coefficient.
IntPoly primitive_part(const RatPoly& f);
// Positive rescaling to a primitive integer polynomial; signs are preserved.
IntPoly positive_primitive(const RatPoly& f);
RatPoly monic(const RatPoly& f);
IntPoly pow(const IntPoly& f, unsigned e);
RatPoly pow(const RatPoly& f, unsigned e);
// f(g(x))
RatPoly compose(const RatPoly& f, const RatPoly& g);
// f(k x)
IntPoly scale_variable(const IntPoly& f, const mpz_class& k);

// --- division ------------------------------------------------------------

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);
// Exact quotient a / b over the integers, or nullopt when b does not divide a.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);
// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
// Exact polynomial square root over the rationals, if one exists.
std::optional<RatPoly> poly_sqrt(const RatPoly& f);

// --- gcd, resultants, squarefree -----------------------------------------

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);
// Primitive gcd over the integers, positive leading coefficient.
IntPoly gcd_int(const IntPoly& a, const IntPoly& b);
struct ExtendedGcd {
  RatPoly gcd, s, t;  // s a + t b = gcd (monic)
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

// lc(a)^deg(b) * prod b(alpha_i) over the roots alpha_i of a.
// Subresultant PRS; throws InvalidInput on a zero argument.
mpz_class resultant(const IntPoly& a, const IntPoly& b);
mpq_class resultant(const RatPoly& a, const RatPoly& b);
// (-1)^(d(d-1)/2) Res(f, f') / lc(f)
mpz_class discriminant(const IntPoly& f);

IntPoly squarefree_part(const IntPoly& f);
bool is_squarefree(const IntPoly& f);
// Yun decomposition: f = content * prod g_i^i, each g_i primitive squarefree.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// --- Sturm ---------------------------------------------------------------

// Rational number or a signed infinity.
struct ExtRat {
  enum class Kind { kFinite, kNegInf, kPosInf };
  Kind kind = Kind::kFinite;
  mpq_class value = 0;

  static ExtRat finite(const mpq_class& v) { return {Kind::kFinite, v}; }
  static ExtRat neg_inf() { return {Kind::kNegInf, 0}; }
  static ExtRat pos_inf() { return {Kind::kPosInf, 0}; }
};

std::vector<IntPoly> sturm_sequence(const IntPoly& f);
// Number of distinct real roots in (lo, hi]. Requires a squarefree f.
int sturm_count(const IntPoly& f, const ExtRat& lo, const ExtRat& hi);
int real_root_count(const IntPoly& f);

// --- resultant constructions ---------------------------------------------

// Newton interpolation through (xs[k], ys[k]); xs pairwise distinct.
RatPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

// Res_y(f(y), f(x y)); vanishes exactly at the ratios alpha_j / alpha_i.
IntPoly conjugate_ratio_poly(const IntPoly& f);
// Primitive polynomial vanishing at the pairwise products alpha_i alpha_j, i < j.
IntPoly conjugate_product_poly(const IntPoly& f);
// Primitive polynomial vanishing at the squares alpha_i^2.
IntPoly conjugate_square_poly(const IntPoly& f);

// --- formatting ----------------------------------------------------------

std::string to_string(const IntPoly& f, const char* var = "x");
std::string to_string(const RatPoly& f, const char* var = "x");
std::vector<std::string> coeff_strings(const IntPoly& f);
std::vector<std::string> coeff_strings(const RatPoly& f);

}  // namespace lck
