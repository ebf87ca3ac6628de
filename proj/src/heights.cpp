#include "lckcheck/heights.hpp"

#include <algorithm>
#include <cmath>

namespace lck {

namespace {

int digits_for_eps(const mpq_class& eps, int base) {
  if (eps <= 0) throw InvalidInput("eps must be positive");
  const double l = static_cast<double>(mpz_sizeinbase(eps.get_den().get_mpz_t(), 2)) -
                   static_cast<double>(mpz_sizeinbase(eps.get_num().get_mpz_t(), 2));
  return std::max(base, static_cast<int>(std::ceil(l * 0.30103)) + 10);
}

HeightValue exact_value(const mpq_class& q) {
  const mpfr_prec_t prec = 128;
  return {Interval::from_rational(q, prec), q};
}

bool width_at_most(const Interval& v, const mpq_class& eps) {
  return mpfr_cmp_q(v.width().get(), eps.get_mpq_t()) <= 0;
}

// |lc| * prod max(1, |z|) over isolated roots of the squarefree h.
Interval mahler_squarefree(const IntPoly& h, int digits, const PrecisionContext& ctx) {
  auto boxes = isolate_roots(h, ctx.with_digits(digits));
  const mpfr_prec_t prec = bits_for_digits(digits);
  mpz_class lc = h.lead();
  Interval m = Interval::from_rational(mpq_class(abs(lc)), prec);
  for (const auto& b : boxes) m = m * b.enclosure().abs().max_with_one();
  return m;
}

// h squarefree, primitive: true iff every irreducible factor is x or cyclotomic.
bool all_cyclotomic_or_x(const IntPoly& h, int degree_cap) {
  if (h.lead() != 1 && h.lead() != -1) return false;
  if (h.degree() > degree_cap) return false;
  auto fac = factor_int_poly(h, degree_cap);
  for (const auto& [g, e] : fac.factors) {
    (void)e;
    if (g != IntPoly{0, 1} && !is_cyclotomic(g)) return false;
  }
  return true;
}

long totient(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

IntPoly normalize_min_poly(IntPoly m) {
  m = primitive_part(to_rat(m));
  return m;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Number of roots on the unit circle of an irreducible palindromic f of even
// degree: f(x) = x^m g(x + 1/x), and unit-circle roots pair up with real roots
// of g in (-2, 2). Returns -1 when f is not palindromic.
int unit_circle_roots(const IntPoly& f) {
  const int d = f.degree();
  if (d % 2) return -1;
  for (int i = 0; i <= d; ++i)
    if (f[i] != f[d - i]) return -1;
  const int m = d / 2;
  // x^k + x^-k = P_k(y), P_0 = 2, P_1 = y, P_{k+1} = y P_k - P_{k-1}
  IntPoly g = IntPoly::constant(f[m]);
  IntPoly prev = IntPoly::constant(2), cur = IntPoly{0, 1};
  for (int k = 1; k <= m; ++k) {
    g += IntPoly::constant(f[m + k]) * cur;
    IntPoly next = IntPoly{0, 1} * cur - prev;
    prev = cur;
    cur = next;
  }
  return 2 * sturm_count(squarefree_part(g), ExtRat::finite(-2), ExtRat::finite(2));
}

// M(f) <= b for primitive irreducible f of degree >= 2. Throws
// PrecisionExhausted on an undecidable boundary tie.
bool mahler_at_most(const IntPoly& f, const mpq_class& b, const PrecisionContext& ctx) {
  const mpz_class lc = abs(f.lead()), c0 = abs(f[0]);
  if (lc > b || c0 > b) return false;
  // Landau: M(f) <= ||f||_2
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  if (norm2 <= b * b) return true;
  for (int digits = 32;; digits *= ctx.escalation_factor) {
    digits = std::min(digits, ctx.max_digits);
    auto boxes = isolate_roots(f, ctx.with_digits(digits));
    const mpfr_prec_t prec = bits_for_digits(digits);
    Interval m = Interval::from_rational(mpq_class(lc), prec);
    int inside = 0, outside = 0, unknown = 0;
    const Interval one = Interval::from_rational(1, prec);
    for (const auto& box : boxes) {
      Interval a = box.enclosure().abs();
      if (mpfr_cmp_ui(a.lo().get(), 1) > 0) {
        ++outside;
      } else if (mpfr_cmp_ui(a.hi().get(), 1) < 0) {
        ++inside;
      } else {
        ++unknown;
      }
      m = m * a.max_with_one();
    }
    if (mpfr_cmp_q(m.hi().get(), b.get_mpq_t()) <= 0) return true;
    if (mpfr_cmp_q(m.lo().get(), b.get_mpq_t()) > 0) return false;
    // exact shortcuts for a bound inside the enclosure
    if (b == 1) return is_cyclotomic(f);
    // roots proved to lie on the circle count as neither inside nor outside
    if (unknown > 0 && unit_circle_roots(f) == unknown) unknown = 0;
    if (unknown == 0 && inside == 0) return c0 <= b;
    if (unknown == 0 && outside == 0) return lc <= b;
    if (digits >= ctx.max_digits) throw PrecisionExhausted("boundary tie: M(" + to_string(f) + ") against " + b.get_str());
  }
}

}  // namespace

Float HeightValue::error() const {
  if (exact) return Float(enclosure.precision());
  return enclosure.width();
}

AlgebraicNumber AlgebraicNumber::from_poly(const IntPoly& f, size_t index, const PrecisionContext& ctx,
                                           int degree_cap) {
  if (f.degree() < 1) throw InvalidInput("algebraic number needs a polynomial of degree >= 1");
  IntPoly m = normalize_min_poly(f);
  if (m.degree() > degree_cap) throw BudgetExceeded("degree exceeds degree cap");
  if (m.degree() >= 2) {
    auto fac = factor_int_poly(m, degree_cap);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
      throw ReducibleInput("polynomial is reducible; factor " + to_string(fac.factors[0].first), fac.factors[0].first);
  }
  auto boxes = isolate_roots(m, ctx);
  if (index >= boxes.size()) throw InvalidInput("root index out of range");
  return {m, boxes[index]};
}

HeightValue mahler_measure(const IntPoly& f, const mpq_class& eps, const PrecisionContext& ctx, int degree_cap) {
  if (f.is_zero()) throw InvalidInput("Mahler measure of the zero polynomial");
  ctx.validate();
  const mpz_class c = abs(content(f));
  const IntPoly g = primitive_part(f);
  if (g.degree() == 0) return exact_value(mpq_class(c));
  if (g.degree() == 1) return exact_value(mpq_class(c * std::max(abs(g[0]), abs(g[1]))));

  auto parts = squarefree_decomposition(g);
  // exact parts first: linear factors and cyclotomic products
  mpz_class exact_part = c;
  std::vector<std::pair<IntPoly, int>> numeric;
  for (const auto& [h, e] : parts) {
    if (h.degree() == 1) {
      mpz_class v = std::max(abs(h[0]), abs(h[1]));
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
      exact_part *= p;
    } else {
      numeric.emplace_back(h, e);
    }
  }
  if (numeric.empty()) return exact_value(mpq_class(exact_part));

  int digits = digits_for_eps(eps, ctx.working_digits);
  std::vector<bool> is_one(numeric.size(), false);
  for (;;) {
    if (digits > ctx.max_digits) throw PrecisionExhausted("Mahler measure needs more than max digits");
    const mpfr_prec_t prec = bits_for_digits(digits);
    Interval m = Interval::from_rational(mpq_class(exact_part), prec);
    bool all_one = true;
    for (size_t i = 0; i < numeric.size(); ++i) {
      if (is_one[i]) continue;
      Interval mi = mahler_squarefree(numeric[i].first, digits, ctx);
      if (mpfr_cmp_ui(mi.lo().get(), 1) <= 0 && all_cyclotomic_or_x(numeric[i].first, degree_cap)) {
        is_one[i] = true;
        continue;
      }
      all_one = false;
      m = m * mi.pow(static_cast<unsigned long>(numeric[i].second));
    }
    if (all_one) return exact_value(mpq_class(exact_part));
    if (width_at_most(m, eps)) return {m, std::nullopt};
    digits *= ctx.escalation_factor;
  }
}

bool is_cyclotomic(const IntPoly& m0) {
  if (m0.degree() < 1) return false;
  IntPoly m = normalize_min_poly(m0);
  if (m.lead() != 1 || m[0] == 0) return false;
  const long d = m.degree();
  for (long n = 1; n <= 2 * d * d; ++n) {
    if (totient(n) != d) continue;
    std::vector<mpz_class> c(static_cast<size_t>(n + 1), 0);
    c[0] = -1;
    c.back() = 1;
    if (exact_divide(IntPoly(std::move(c)), m)) return true;
  }
  return false;
}

HeightValue height_of_min_poly(const IntPoly& m0, const mpq_class& eps, const PrecisionContext& ctx, int degree_cap) {
  IntPoly m = normalize_min_poly(m0);
  if (m.degree() < 1) throw InvalidInput("minimal polynomial must have degree >= 1");
  if (m == IntPoly{0, 1}) return exact_value(1);
  if (m.degree() == 1) return exact_value(mpq_class(std::max(abs(m[0]), abs(m[1]))));
  if (is_cyclotomic(m)) return exact_value(1);
  const unsigned long d = static_cast<unsigned long>(m.degree());
  mpq_class e = eps;
  for (int round = 0;; ++round) {
    HeightValue mm = mahler_measure(m, e, ctx, degree_cap);
    Interval h = mm.enclosure.root(d);
    if (width_at_most(h, eps)) return {h, std::nullopt};
    if (round > 8) throw PrecisionExhausted("height enclosure does not shrink");
    e /= 16;
  }
}

HeightValue height_algebraic(const AlgebraicNumber& a, const mpq_class& eps, const PrecisionContext& ctx) {
  return height_of_min_poly(a.min_poly, eps, ctx);
}

HeightValue height_algebraic(const FieldElement& a, const mpq_class& eps) {
  if (a.is_zero()) return exact_value(1);
  return height_of_min_poly(min_poly_int(a), eps, a.field()->precision(), a.field()->degree_cap());
}

bool is_root_of_unity(const AlgebraicNumber& a) {
  if (normalize_min_poly(a.min_poly) == IntPoly{0, 1}) throw InvalidInput("zero is not a root of unity candidate");
  return is_cyclotomic(a.min_poly);
}

bool is_root_of_unity(const FieldElement& a) {
  if (a.is_zero()) throw InvalidInput("zero is not a root of unity candidate");
  return is_cyclotomic(min_poly_int(a));
}

mpz_class projective_height_rational(const std::vector<mpq_class>& coords) {
  if (coords.empty() || std::all_of(coords.begin(), coords.end(), [](const mpq_class& q) { return q == 0; }))
    throw InvalidInput("projective point needs a nonzero coordinate");
  mpz_class l = 1;
  for (const auto& q : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  mpz_class g = 0, top = 0;
  std::vector<mpz_class> ints;
  for (const auto& q : coords) {
    mpz_class v = mpz_class(q * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(abs(v));
  }
  for (const auto& v : ints) top = std::max(top, v);
  return top / g;
}

RatioHeight unit_ratio_height(const FieldElement& u, int k, const mpq_class& eps) {
  const auto& field = *u.field();
  const int s = field.s(), t = field.t();
  if (k < 2 || k > t) throw InvalidInput("ratio index must lie in 2..t");
  if (u.is_zero() || !is_unit(u)) throw InvalidInput("unit point height needs a unit");
  const IntPoly m = min_poly_int(u);
  const IntPoly r = squarefree_part(conjugate_ratio_poly(m));
  auto fac = factor_int_poly(r, field.degree_cap());
  const auto& ctx = field.precision();
  for (int digits = ctx.working_digits;; digits *= ctx.escalation_factor) {
    digits = std::min(digits, ctx.max_digits);
    auto z = embed_all(u, digits);
    const ComplexInterval ratio = z[static_cast<size_t>(s + k - 1)] / z[static_cast<size_t>(s)];
    const IntPoly* hit = nullptr;
    int hits = 0;
    for (const auto& [h, e] : fac.factors) {
      (void)e;
      if (eval_enclosure(to_rat(h), ratio).contains_zero()) {
        hit = &h;
        ++hits;
      }
    }
    if (hits == 1) return {*hit, height_of_min_poly(*hit, eps, ctx, field.degree_cap())};
    if (hits == 0) throw Error(Status::kInternal, "ratio matches no factor of the ratio polynomial");
    if (digits >= ctx.max_digits) throw PrecisionExhausted("cannot identify the ratio's minimal polynomial");
  }
}

RatioHeight unit_point_height(const FieldElement& u, const mpq_class& eps) {
  if (u.field()->t() != 2) throw InvalidInput("unit point height needs t = 2");
  return unit_ratio_height(u, 2, eps);
}

std::vector<EnumeratedNumber> enumerate_bounded_height(int deg_max, const mpq_class& h_max,
                                                       const EnumerationOptions& opts) {
  if (deg_max < 1 || deg_max > 6) throw InvalidInput("degree bound must lie in 1..6");
  if (h_max < 1) throw InvalidInput("height bound must be >= 1");
  opts.ctx.validate();
  const mpq_class eps("1/1000000000000000000000000000000");  // 1e-30

  // size the search first so the budget check happens before any work
  std::vector<std::vector<mpz_class>> bounds;
  mpz_class total = 0;
  mpq_class b = 1;
  for (int d = 1; d <= deg_max; ++d) {
    b *= h_max;
    std::vector<mpz_class> B;
    for (int i = 0; i <= d; ++i) B.push_back(floor_q(binom(d, i) * b));
    // M >= |a_d| and M >= |a_0|
    B[0] = std::min(B[0], floor_q(b));
    B[static_cast<size_t>(d)] = std::min(B[static_cast<size_t>(d)], floor_q(b));
    mpz_class count = B[static_cast<size_t>(d)];
    for (int i = 0; i < d; ++i) count *= 2 * B[static_cast<size_t>(i)] + 1;
    total += count;
    bounds.push_back(std::move(B));
  }
  if (total > mpz_class(opts.candidate_cap))
    throw BudgetExceeded("enumeration needs " + total.get_str() + " candidates, cap is " +
                         std::to_string(opts.candidate_cap));

  std::vector<EnumeratedNumber> out;
  b = 1;
  for (int d = 1; d <= deg_max; ++d) {
    b *= h_max;
    const auto& B = bounds[static_cast<size_t>(d - 1)];
    std::vector<mpz_class> a(static_cast<size_t>(d + 1));
    for (int i = 0; i < d; ++i) a[static_cast<size_t>(i)] = -B[static_cast<size_t>(i)];
    a[static_cast<size_t>(d)] = 1;
    if (B[static_cast<size_t>(d)] < 1) continue;
    for (;;) {
      const IntPoly f(a);
      mpz_class g = 0;
      for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      bool keep = g == 1;
      if (keep && d == 1) {
        keep = std::max(abs(a[0]), abs(a[1])) <= b;
      } else if (keep) {
        keep = a[0] != 0 && is_irreducible(f) && mahler_at_most(f, b, opts.ctx);
      }
      if (keep) {
        EnumeratedNumber e{f, height_of_min_poly(f, eps, opts.ctx), false};
        e.root_of_unity = is_cyclotomic(f);
        out.push_back(std::move(e));
      }
      // odometer: a_0 fastest, lead last
      size_t i = 0;
      for (; i <= static_cast<size_t>(d); ++i) {
        const mpz_class hi = B[i];
        if (a[i] < hi) {
          ++a[i];
          break;
        }
        a[i] = i == static_cast<size_t>(d) ? mpz_class(1) : mpz_class(-hi);
      }
      if (i > static_cast<size_t>(d)) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const EnumeratedNumber& x, const EnumeratedNumber& y) {
    if (x.min_poly.degree() != y.min_poly.degree()) return x.min_poly.degree() < y.min_poly.degree();
    return std::lexicographical_compare(x.min_poly.coeffs().begin(), x.min_poly.coeffs().end(),
                                        y.min_poly.coeffs().begin(), y.min_poly.coeffs().end());
  });
  return out;
}

std::vector<SignedPower> search_equal_modulus_units(const UnitSubgroup& U, long box) {
  if (box < 0) throw InvalidInput("exponent box must be >= 0");
  const size_t k = U.generators.size();
  std::vector<long> e(k, -box);
  std::vector<SignedPower> out;
  for (;;) {
    FieldElement x = FieldElement::rational(U.field, 1);
    for (size_t i = 0; i < k; ++i) x = x * U.generators[i].pow(e[i]);
    if (is_equal_modulus(x).value) {
      out.push_back({1, e, x});
      out.push_back({-1, e, -x});
    }
    size_t i = 0;
    while (i < k && e[i] == box) e[i++] = -box;
    if (i == k) break;
    ++e[i];
  }
  return out;
}

}  // namespace lck
