#include "lckcheck/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "lckcheck/errors.hpp"

namespace lck {

IntPoly Factorization::expand() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& [g, e] : factors) out *= pow(g, static_cast<unsigned>(e));
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31. Ascending coefficients,
// no trailing zeros.

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

  ZpPoly reduce(const IntPoly& f) const {
    ZpPoly r;
    mpz_class pp = static_cast<unsigned long>(p);
    for (const auto& c : f.coeffs()) {
      mpz_class m;
      mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
      r.push_back(m.get_ui());
    }
    trim(r);
    return r;
  }

  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  }

  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  // a = q b + r
  void divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly* q, ZpPoly* r) const {
    ZpPoly rem = a;
    const int db = deg(b);
    ZpPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const u64 li = inv(b.back());
    for (int i = deg(rem) - db; i >= 0; --i) {
      u64 k = mul(rem[static_cast<size_t>(i + db)], li);
      quo[static_cast<size_t>(i)] = k;
      if (!k) continue;
      for (int j = 0; j <= db; ++j) {
        u64& slot = rem[static_cast<size_t>(i + j)];
        slot = sub(slot, mul(k, b[static_cast<size_t>(j)]));
      }
    }
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
  }

  ZpPoly mod(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r;
    divmod(a, b, nullptr, &r);
    return r;
  }

  ZpPoly monic(const ZpPoly& a) const {
    if (a.empty()) return a;
    u64 li = inv(a.back());
    ZpPoly r(a);
    for (auto& v : r) v = mul(v, li);
    return r;
  }

  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s a + t b = 1 for coprime a, b; deg s < deg b, deg t < deg a.
  void bezout(const ZpPoly& a, const ZpPoly& b, ZpPoly* s, ZpPoly* t) const {
    ZpPoly r0 = a, r1 = b, s0 = {1}, s1, t0, t1 = {1};
    while (!r1.empty()) {
      ZpPoly q, r;
      divmod(r0, r1, &q, &r);
      r0 = std::move(r1);
      r1 = std::move(r);
      ZpPoly s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      ZpPoly t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 li = inv(r0.back());
    for (auto& v : s0) v = mul(v, li);
    for (auto& v : t0) v = mul(v, li);
    *s = std::move(s0);
    *t = std::move(t0);
  }

  ZpPoly derivative(const ZpPoly& a) const {
    ZpPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }

  ZpPoly powmod(ZpPoly base, const mpz_class& e, const ZpPoly& m) const {
    ZpPoly r = {1};
    base = mod(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }

  bool squarefree(const ZpPoly& f) const { return deg(gcd(f, derivative(f))) == 0; }

  // Distinct-degree factorization of a monic squarefree f.
  std::vector<std::pair<ZpPoly, int>> ddf(ZpPoly f) const {
    std::vector<std::pair<ZpPoly, int>> out;
    const ZpPoly x = {0, 1};
    ZpPoly h = x;
    const mpz_class pe = static_cast<unsigned long>(p);
    for (int i = 1; deg(f) >= 2 * i; ++i) {
      h = powmod(h, pe, f);
      ZpPoly g = gcd(sub(h, x), f);
      if (deg(g) > 0) {
        out.emplace_back(g, i);
        ZpPoly q;
        divmod(f, g, &q, nullptr);
        f = std::move(q);
        h = mod(h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
  }

  // Equal-degree splitting of a monic product of degree-d irreducibles.
  void edf(const ZpPoly& g, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) const {
    if (deg(g) == d) {
      out.push_back(g);
      return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    for (;;) {
      ZpPoly a(static_cast<size_t>(deg(g)), 0);
      for (auto& v : a) v = coef(rng);
      trim(a);
      if (deg(a) < 1) continue;
      ZpPoly b = powmod(a, e, g);
      b = sub(b, ZpPoly{1});
      ZpPoly h = gcd(b, g);
      if (deg(h) > 0 && deg(h) < deg(g)) {
        ZpPoly q;
        divmod(g, h, &q, nullptr);
        edf(h, d, rng, out);
        edf(q, d, rng, out);
        return;
      }
    }
  }

  std::vector<ZpPoly> factor(const ZpPoly& f) const {
    std::mt19937_64 rng(0x5eed0000u + p);
    std::vector<ZpPoly> out;
    for (const auto& [g, d] : ddf(monic(f))) edf(g, d, rng, out);
    std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
  }
};

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long next_prime(unsigned long n) {
  do {
    ++n;
  } while (!is_prime(n));
  return n;
}

IntPoly from_zp(const ZpPoly& a) {
  std::vector<mpz_class> c;
  for (u64 v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Arithmetic modulo m = p^k on integer polynomials with coefficients in [0, m).

IntPoly mod_m(const IntPoly& a, const mpz_class& m) {
  std::vector<mpz_class> c(a.coeffs());
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& a, const mpz_class& m) {
  std::vector<mpz_class> c(a.coeffs());
  const mpz_class half = m / 2;
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

// Division by a monic b modulo m.
void divmod_monic(const IntPoly& a, const IntPoly& b, const mpz_class& m, IntPoly* q, IntPoly* r) {
  std::vector<mpz_class> rem(mod_m(a, m).coeffs());
  const int db = b.degree();
  const int da = static_cast<int>(rem.size()) - 1;
  std::vector<mpz_class> quo(da >= db ? static_cast<size_t>(da - db) + 1 : 0);
  for (int i = da - db; i >= 0; --i) {
    mpz_class k = rem[static_cast<size_t>(i + db)];
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    quo[static_cast<size_t>(i)] = k;
    if (sgn(k) == 0) continue;
    for (int j = 0; j <= db; ++j) {
      mpz_class& slot = rem[static_cast<size_t>(i + j)];
      slot -= k * b[j];
      mpz_fdiv_r(slot.get_mpz_t(), slot.get_mpz_t(), m.get_mpz_t());
    }
  }
  if (db < static_cast<int>(rem.size())) rem.resize(static_cast<size_t>(std::max(db, 0)));
  if (q) *q = mod_m(IntPoly(std::move(quo)), m);
  if (r) *r = mod_m(IntPoly(std::move(rem)), m);
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m) { return mod_m(a * b, m); }

struct Lifted {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) to the same mod m^2.
// h monic, lc(g) = lc(f).
Lifted hensel_step(const IntPoly& f, const Lifted& in, const mpz_class& m) {
  const mpz_class m2 = m * m;
  IntPoly e = mod_m(f - in.g * in.h, m2);
  IntPoly q, r;
  divmod_monic(mul_mod(in.s, e, m2), in.h, m2, &q, &r);
  IntPoly g = mod_m(in.g + in.t * e + q * in.g, m2);
  IntPoly h = mod_m(in.h + r, m2);
  IntPoly b = mod_m(in.s * g + in.t * h - IntPoly{1}, m2);
  IntPoly c, d;
  divmod_monic(mul_mod(in.s, b, m2), h, m2, &c, &d);
  IntPoly s = mod_m(in.s - d, m2);
  IntPoly t = mod_m(in.t - in.t * b - c * g, m2);
  return {g, h, s, t};
}

IntPoly product_mod(const std::vector<IntPoly>& fs, size_t lo, size_t hi, const mpz_class& m) {
  IntPoly out{1};
  for (size_t i = lo; i < hi; ++i) out = mul_mod(out, fs[i], m);
  return out;
}

// Lifts f = lc(f) * prod factors (mod p) to mod `target` = p^(2^j).
void multifactor_lift(const IntPoly& f, const std::vector<IntPoly>& factors, size_t lo, size_t hi,
                      const Zp& zp, const mpz_class& target, std::vector<IntPoly>& out) {
  const mpz_class p = static_cast<unsigned long>(zp.p);
  if (hi - lo == 1) {
    // f = lc * u  =>  u = f / lc mod target
    mpz_class inv;
    mpz_class lc = f.lead();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
    out[lo] = mod_m(inv * f, target);
    return;
  }
  const size_t mid = lo + (hi - lo) / 2;
  const mpz_class lc = f.lead();
  IntPoly g0 = mod_m(lc * product_mod(factors, lo, mid, p), p);
  IntPoly h0 = mod_m(product_mod(factors, mid, hi, p), p);
  ZpPoly s0, t0;
  zp.bezout(zp.reduce(g0), zp.reduce(h0), &s0, &t0);
  Lifted cur{g0, h0, from_zp(s0), from_zp(t0)};
  for (mpz_class m = p; m < target; m *= m) cur = hensel_step(f, cur, m);
  multifactor_lift(cur.g, factors, lo, mid, zp, target, out);
  multifactor_lift(cur.h, factors, mid, hi, zp, target, out);
}

// Factors a primitive squarefree f of degree >= 2 with positive leading coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  // Pick the good prime with the fewest modular factors among the first few.
  unsigned long best_p = 0;
  std::vector<ZpPoly> best;
  int tried = 0;
  for (unsigned long p = 3; tried < 5; p = next_prime(p)) {
    Zp zp{p};
    ZpPoly fp = zp.reduce(f);
    if (Zp::deg(fp) != n || !zp.squarefree(fp)) continue;
    ++tried;
    auto fs = zp.factor(fp);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) return {f};
  }
  const Zp zp{best_p};
  const mpz_class p = best_p;

  // Coefficients of any factor are bounded by 2^n ||f||_2 (Mignotte).
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  const mpz_class limit = 2 * bound * abs(f.lead()) + 1;
  mpz_class target = p;
  while (target <= limit) target *= target;

  std::vector<IntPoly> local;
  for (const auto& u : best) local.push_back(from_zp(u));
  std::vector<IntPoly> lifted(local.size());
  multifactor_lift(f, local, 0, local.size(), zp, target, lifted);

  // Recombination by subsets of increasing size.
  std::vector<IntPoly> result;
  std::vector<size_t> remaining(lifted.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  IntPoly rest = f;
  size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<size_t> pick(size);
    for (size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      IntPoly cand = IntPoly::constant(rest.lead());
      for (size_t i : pick) cand = mul_mod(cand, lifted[remaining[i]], target);
      cand = primitive_part(symmetric_mod(cand, target));
      if (cand.degree() > 0) {
        if (auto q = exact_divide(rest, cand)) {
          result.push_back(cand);
          rest = *q;
          std::vector<size_t> keep;
          for (size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      size_t k = size;
      while (k > 0 && pick[k - 1] == remaining.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  return result;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      mpz_class e = n / d;
      if (e != d) large.push_back(e);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Factorization factor_int_poly(const IntPoly& f, int degree_cap) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (f.degree() > degree_cap)
    throw BudgetExceeded("degree " + std::to_string(f.degree()) + " exceeds the factorization cap " +
                         std::to_string(degree_cap));
  Factorization out;
  out.content = content(f);
  if (sgn(f.lead()) < 0) out.content = -out.content;
  if (f.degree() == 0) {
    out.content = f.lead();
    return out;
  }
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    IntPoly part = g;
    // split off the factor x first so the modular stage sees g(0) != 0
    if (sgn(part[0]) == 0) {
      out.factors.emplace_back(IntPoly{0, 1}, mult);
      part = *exact_divide(part, IntPoly{0, 1});
    }
    if (part.degree() == 0) continue;
    if (part.degree() == 1) {
      out.factors.emplace_back(primitive_part(part), mult);
      continue;
    }
    for (auto& h : zassenhaus(primitive_part(part))) out.factors.emplace_back(primitive_part(h), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<int> modular_factor_degrees(const IntPoly& f, unsigned long p) {
  Zp zp{p};
  ZpPoly fp = zp.reduce(f);
  if (Zp::deg(fp) != f.degree() || !zp.squarefree(fp))
    throw InvalidInput("prime " + std::to_string(p) + " is not good for this polynomial");
  std::vector<int> degs;
  for (const auto& [g, d] : zp.ddf(zp.monic(fp)))
    for (int k = 0; k < Zp::deg(g) / d; ++k) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  return degs;
}

IrreducibilityWitness irreducibility_witness(const IntPoly& f) {
  using K = IrreducibilityWitness::Kind;
  if (f.degree() < 1) throw InvalidInput("irreducibility witness needs degree >= 1");
  IntPoly g = primitive_part(f);
  if (g.degree() > 1 && sgn(g[0]) == 0) return {K::kReducible, 0, IntPoly{0, 1}};
  if (!is_squarefree(g)) return {K::kReducible, 0, gcd_int(g, g.derivative())};

  // Rational roots p/q with p | a0, q | lc, only when both are small enough to enumerate.
  if (g.degree() > 1) {
    static const mpz_class kRootSearchLimit("10000000000");
    if (abs(g[0]) <= kRootSearchLimit && abs(g.lead()) <= kRootSearchLimit) {
      for (const auto& num : positive_divisors(g[0])) {
        for (const auto& den : positive_divisors(g.lead())) {
          for (int sign : {1, -1}) {
            mpq_class r(sign * num, den);
            r.canonicalize();
            if (r.get_den() != den) continue;
            if (sgn(to_rat(g).eval(r)) == 0)
              return {K::kReducible, 0, IntPoly(std::vector<mpz_class>{-r.get_num(), r.get_den()})};
          }
        }
      }
    }
  }

  mpz_class bad = g.lead() * discriminant(g);
  int tried = 0;
  for (unsigned long p = 3; tried < 10; p = next_prime(p)) {
    if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    ++tried;
    auto degs = modular_factor_degrees(g, p);
    if (degs.size() == 1) return {K::kIrreducible, static_cast<long>(p), {}};
  }
  return {K::kUnknown, 0, {}};
}

bool is_irreducible(const IntPoly& f, int degree_cap) {
  auto w = irreducibility_witness(f);
  if (w.kind == IrreducibilityWitness::Kind::kIrreducible) return true;
  if (w.kind == IrreducibilityWitness::Kind::kReducible) return false;
  auto fac = factor_int_poly(f, degree_cap);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace lck
