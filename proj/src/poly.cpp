#include "lckcheck/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lckcheck/errors.hpp"

namespace lck {

RatPoly to_rat(const IntPoly& f) {
  std::vector<mpq_class> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

mpz_class content(const IntPoly& f) {
  mpz_class g = 0;
  for (const auto& v : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

IntPoly divide_coeffs(const IntPoly& f, const mpz_class& k) {
  std::vector<mpz_class> c(f.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly clear_denominators(const RatPoly& f) {
  mpz_class l = 1;
  for (const auto& v : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v.get_num() * (l / v.get_den()));
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  mpz_class g = content(f);
  if (sgn(f.lead()) < 0) g = -g;
  return divide_coeffs(f, g);
}

IntPoly primitive_part(const RatPoly& f) { return primitive_part(clear_denominators(f)); }

IntPoly positive_primitive(const RatPoly& f) {
  IntPoly g = clear_denominators(f);
  if (g.is_zero()) return g;
  return divide_coeffs(g, content(g));
}

RatPoly monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  mpq_class inv = 1 / f.lead();
  return inv * f;
}

template <class P>
static P pow_impl(const P& f, unsigned e) {
  P result = P::constant(1);
  P base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPoly pow(const IntPoly& f, unsigned e) { return pow_impl(f, e); }
RatPoly pow(const RatPoly& f, unsigned e) { return pow_impl(f, e); }

RatPoly compose(const RatPoly& f, const RatPoly& g) {
  RatPoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + RatPoly::constant(f[i]);
  return acc;
}

IntPoly scale_variable(const IntPoly& f, const mpz_class& k) {
  std::vector<mpz_class> c(f.coeffs());
  mpz_class p = 1;
  for (auto& v : c) {
    v *= p;
    p *= k;
  }
  return IntPoly(std::move(c));
}

// --- division ------------------------------------------------------------

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<mpq_class> r(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<mpq_class> q(static_cast<size_t>(a.degree() - db) + 1);
  const mpq_class inv = 1 / b.lead();
  for (int i = a.degree() - db; i >= 0; --i) {
    mpq_class k = r[static_cast<size_t>(i + db)] * inv;
    q[static_cast<size_t>(i)] = k;
    if (sgn(k) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i + j)] -= k * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<mpz_class> r(a.coeffs());
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - db) + 1);
  for (int i = a.degree() - db; i >= 0; --i) {
    mpz_class& top = r[static_cast<size_t>(i + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) return std::nullopt;
    mpz_class k;
    mpz_divexact(k.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    if (sgn(k) != 0) {
      for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i + j)] -= k * b.coeffs()[static_cast<size_t>(j)];
    }
    q[static_cast<size_t>(i)] = k;
  }
  for (int j = 0; j < db; ++j)
    if (sgn(r[static_cast<size_t>(j)]) != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<mpz_class> r(a.coeffs());
  const mpz_class& lb = b.lead();
  for (int top = a.degree(); top >= db; --top) {
    mpz_class k = r[static_cast<size_t>(top)];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(top - db + j)] -= k * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return IntPoly(std::move(r));
}

std::optional<RatPoly> poly_sqrt(const RatPoly& f) {
  if (f.is_zero()) return RatPoly();
  if (f.degree() % 2 != 0) return std::nullopt;
  const mpq_class& lc = f.lead();
  if (sgn(lc) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(lc.get_num_mpz_t()) || !mpz_perfect_square_p(lc.get_den_mpz_t()))
    return std::nullopt;
  const int m = f.degree() / 2;
  std::vector<mpq_class> s(static_cast<size_t>(m) + 1);
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), lc.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), lc.get_den_mpz_t());
  s[static_cast<size_t>(m)] = mpq_class(num, den);
  for (int k = m - 1; k >= 0; --k) {
    mpq_class c = f[m + k];
    for (int i = k + 1; i <= m - 1; ++i) c -= s[static_cast<size_t>(i)] * s[static_cast<size_t>(m + k - i)];
    s[static_cast<size_t>(k)] = c / (2 * s[static_cast<size_t>(m)]);
  }
  RatPoly root(std::move(s));
  if (root * root != f) return std::nullopt;
  return root;
}

// --- gcd -----------------------------------------------------------------

IntPoly gcd_int(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = primitive_part(a0);
  IntPoly b = primitive_part(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) return RatPoly();
  return monic(to_rat(gcd_int(primitive_part(a), primitive_part(b))));
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

// --- resultants ----------------------------------------------------------

mpz_class resultant(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw InvalidInput("resultant of the zero polynomial");
  const int da0 = a0.degree(), db0 = b0.degree();
  mpz_class out;
  if (da0 == 0) {
    mpz_pow_ui(out.get_mpz_t(), a0.lead().get_mpz_t(), static_cast<unsigned long>(db0));
    return out;
  }
  if (db0 == 0) {
    mpz_pow_ui(out.get_mpz_t(), b0.lead().get_mpz_t(), static_cast<unsigned long>(da0));
    return out;
  }
  const mpz_class ca = content(a0), cb = content(b0);
  IntPoly a = divide_coeffs(a0, ca);
  IntPoly b = divide_coeffs(b0, cb);
  mpz_class t, tmp;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(db0));
  mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(da0));
  t *= tmp;

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  mpz_class g = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    b = divide_coeffs(r, g * hd);
    g = a.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      mpz_class gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
    if (b.degree() > 0) continue;
    const int da = a.degree();
    mpz_class lb, hp;
    mpz_pow_ui(lb.get_mpz_t(), b.lead().get_mpz_t(), static_cast<unsigned long>(da));
    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(da - 1));
    mpz_divexact(h.get_mpz_t(), lb.get_mpz_t(), hp.get_mpz_t());
    return s * t * h;
  }
}

mpq_class resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("resultant of the zero polynomial");
  // a = ka * A with A integral; Res(ka A, kb B) = ka^deg b kb^deg a Res(A, B)
  IntPoly ia = clear_denominators(a), ib = clear_denominators(b);
  mpq_class ka = a.lead() / mpq_class(ia.lead());
  mpq_class kb = b.lead() / mpq_class(ib.lead());
  mpq_class r(resultant(ia, ib));
  for (int i = 0; i < b.degree(); ++i) r *= ka;
  for (int i = 0; i < a.degree(); ++i) r *= kb;
  r.canonicalize();
  return r;
}

mpz_class discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("discriminant needs degree >= 1");
  if (f.degree() == 1) return 1;
  const int d = f.degree();
  mpz_class r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

// --- squarefree ----------------------------------------------------------

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  return gcd_int(f, f.derivative()).degree() == 0;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  if (f.degree() == 0) return IntPoly{1};
  IntPoly g = gcd_int(f, f.derivative());
  auto q = exact_divide(primitive_part(f), g);
  return primitive_part(*q);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() <= 0) return out;
  RatPoly p = to_rat(primitive_part(f));
  RatPoly dp = p.derivative();
  RatPoly g = poly_gcd(p, dp);
  RatPoly c = divmod(p, g).first;
  RatPoly d = divmod(dp, g).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    RatPoly a = poly_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  return out;
}

// --- Sturm ---------------------------------------------------------------

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
  std::vector<IntPoly> seq;
  if (f.is_zero()) return seq;
  seq.push_back(f);
  IntPoly d = f.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    RatPoly r = rem(to_rat(seq[seq.size() - 2]), to_rat(seq.back()));
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

namespace {

int sign_at(const IntPoly& p, const ExtRat& at) {
  if (p.is_zero()) return 0;
  switch (at.kind) {
    case ExtRat::Kind::kPosInf:
      return sgn(p.lead());
    case ExtRat::Kind::kNegInf:
      return (p.degree() % 2 == 0) ? sgn(p.lead()) : -sgn(p.lead());
    case ExtRat::Kind::kFinite: {
      mpq_class acc = 0;
      for (int i = p.degree(); i >= 0; --i) acc = acc * at.value + p[i];
      return sgn(acc);
    }
  }
  return 0;
}

int variations(const std::vector<IntPoly>& seq, const ExtRat& at) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

bool less_than(const ExtRat& a, const ExtRat& b) {
  using K = ExtRat::Kind;
  if (a.kind == K::kPosInf || b.kind == K::kNegInf) return false;
  if (a.kind == K::kNegInf || b.kind == K::kPosInf) return true;
  return a.value < b.value;
}

}  // namespace

int sturm_count(const IntPoly& f, const ExtRat& lo, const ExtRat& hi) {
  if (!is_squarefree(f)) throw InvalidInput("sturm_count requires a squarefree polynomial");
  if (!less_than(lo, hi)) throw InvalidInput("sturm_count requires lo < hi");
  auto seq = sturm_sequence(f);
  return variations(seq, lo) - variations(seq, hi);
}

int real_root_count(const IntPoly& f) { return sturm_count(f, ExtRat::neg_inf(), ExtRat::pos_inf()); }

// --- resultant constructions ---------------------------------------------

RatPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const size_t n = xs.size();
  std::vector<mpq_class> dd(ys);
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  RatPoly acc = RatPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    RatPoly lin(std::vector<mpq_class>{-xs[i], 1});
    acc = acc * lin + RatPoly::constant(dd[i]);
  }
  return acc;
}

namespace {

IntPoly to_int_exact(const RatPoly& p) {
  std::vector<mpz_class> c;
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) throw Error(Status::kInternal, "interpolated resultant is not integral");
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

// Res_y(a(y), b_x(y)) as a polynomial in x, sampled at x = first .. first + count - 1.
template <class MakeB>
IntPoly resultant_in_y(const IntPoly& a, MakeB make_b, long first, long count) {
  std::vector<mpq_class> xs, ys;
  xs.reserve(static_cast<size_t>(count));
  ys.reserve(static_cast<size_t>(count));
  for (long k = 0; k < count; ++k) {
    mpz_class x0 = first + k;
    IntPoly b = make_b(x0);
    xs.emplace_back(x0);
    ys.emplace_back(b.is_zero() ? mpz_class(0) : resultant(a, b));
  }
  return to_int_exact(interpolate(xs, ys));
}

}  // namespace

IntPoly conjugate_ratio_poly(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("conjugate_ratio_poly of the zero polynomial");
  if (sgn(f[0]) == 0) throw InvalidInput("conjugate_ratio_poly requires f(0) != 0");
  const long d = f.degree();
  if (d == 0) return IntPoly{1};
  // deg_x = d^2; x = 0 would drop the y-degree of f(x y), so sample from 1
  return resultant_in_y(f, [&](const mpz_class& x0) { return scale_variable(f, x0); }, 1, d * d + 1);
}

IntPoly conjugate_square_poly(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("conjugate_square_poly of the zero polynomial");
  const long d = f.degree();
  if (d == 0) return IntPoly{1};
  IntPoly r = resultant_in_y(
      f, [](const mpz_class& x0) { return IntPoly(std::vector<mpz_class>{x0, 0, -1}); }, 0, d + 1);
  return primitive_part(r);
}

IntPoly conjugate_product_poly(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("conjugate_product_poly of the zero polynomial");
  const int d = f.degree();
  if (d <= 1) return IntPoly{1};
  if (sgn(f[0]) == 0) {
    // f = x g: products with the zero root all vanish
    IntPoly g(std::vector<mpz_class>(f.coeffs().begin() + 1, f.coeffs().end()));
    return IntPoly::monomial(1, g.degree()) * conjugate_product_poly(g);
  }
  // y^d f(x / y) = sum a_k x^k y^(d-k); Res_y(f, .) = lc^(2d) prod_{i,j} (x - a_i a_j)
  auto reversed_scaled = [&](const mpz_class& x0) {
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    mpz_class p = 1;
    for (int k = 0; k <= d; ++k) {
      c[static_cast<size_t>(d - k)] = f[k] * p;
      p *= x0;
    }
    return IntPoly(std::move(c));
  };
  IntPoly all = resultant_in_y(f, reversed_scaled, 0, static_cast<long>(d) * d + 1);
  // all = c * squares * pairs^2
  IntPoly squares = conjugate_square_poly(f);
  auto [q, r] = divmod(to_rat(all), to_rat(squares));
  if (!r.is_zero()) throw Error(Status::kInternal, "square factor does not divide product resultant");
  auto root = poly_sqrt(monic(q));
  if (!root) throw Error(Status::kInternal, "pair-product quotient is not a perfect square");
  return primitive_part(*root);
}

// --- formatting ----------------------------------------------------------

namespace {

template <class Coeff>
std::string format_poly(const Poly<Coeff>& f, const char* var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Coeff c = f[i];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Coeff a = abs(c);
    bool unit = (a == 1);
    if (!unit || i == 0) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& f, const char* var) { return format_poly(f, var); }
std::string to_string(const RatPoly& f, const char* var) { return format_poly(f, var); }

std::vector<std::string> coeff_strings(const IntPoly& f) {
  std::vector<std::string> out;
  for (const auto& v : f.coeffs()) out.push_back(v.get_str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

std::vector<std::string> coeff_strings(const RatPoly& f) {
  std::vector<std::string> out;
  for (const auto& v : f.coeffs()) out.push_back(v.get_str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

}  // namespace lck
