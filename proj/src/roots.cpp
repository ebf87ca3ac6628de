#include "lckcheck/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lckcheck/errors.hpp"

namespace lck {

void PrecisionContext::validate() const {
  if (working_digits < 32) throw InvalidInput("working precision must be at least 32 digits");
  if (max_digits < working_digits) throw InvalidInput("max_digits must be >= working digits");
  if (escalation_factor < 2) throw InvalidInput("escalation factor must be >= 2");
}

PrecisionContext PrecisionContext::with_digits(int digits) const {
  PrecisionContext c = *this;
  c.working_digits = digits;
  if (c.max_digits < digits) c.max_digits = digits;
  return c;
}

const char* root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::kReal:
      return "real";
    case RootKind::kComplexUpper:
      return "complex_upper";
    case RootKind::kComplexLower:
      return "complex_lower";
  }
  return "?";
}

// --- RootBox -------------------------------------------------------------

ComplexInterval RootBox::enclosure() const {
  Interval re = Interval::ball(center_re, radius);
  if (kind == RootKind::kReal) return {re, Interval(center_re.precision())};
  return {re, Interval::ball(center_im, radius)};
}

Interval RootBox::real_enclosure() const { return Interval::ball(center_re, radius); }

namespace {

Interval center_distance(const RootBox& a, const RootBox& b) {
  ComplexInterval za{Interval::point(a.center_re), Interval::point(a.center_im)};
  ComplexInterval zb{Interval::point(b.center_re), Interval::point(b.center_im)};
  return (za - zb).abs();
}

}  // namespace

bool RootBox::disk_intersects(const RootBox& o) const {
  Interval d = center_distance(*this, o);
  Float sum(std::max(radius.precision(), o.radius.precision()));
  mpfr_add(sum.get(), radius.get(), o.radius.get(), MPFR_RNDU);
  return mpfr_lessequal_p(d.lo().get(), sum.get());
}

bool RootBox::disk_inside(const RootBox& o) const {
  Interval d = center_distance(*this, o);
  Float reach(std::max(radius.precision(), d.precision()));
  mpfr_add(reach.get(), d.hi().get(), radius.get(), MPFR_RNDU);
  return mpfr_less_p(reach.get(), o.radius.get());
}

// --- interval evaluation -------------------------------------------------

ComplexInterval eval_enclosure(const RatPoly& g, const ComplexInterval& z) {
  const mpfr_prec_t p = z.re.precision();
  ComplexInterval acc(p);
  for (int i = g.degree(); i >= 0; --i) acc = acc * z + ComplexInterval::from_rational(g[i], p);
  return acc;
}

Interval eval_enclosure(const RatPoly& g, const Interval& x) {
  const mpfr_prec_t p = x.precision();
  Interval acc(p);
  for (int i = g.degree(); i >= 0; --i) acc = acc * x + Interval::from_rational(g[i], p);
  return acc;
}

// --- Aberth–Ehrlich ------------------------------------------------------

namespace {

struct Cx {
  Float re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
  void set_prec(mpfr_prec_t p) {
    mpfr_prec_round(re.get(), p, MPFR_RNDN);
    mpfr_prec_round(im.get(), p, MPFR_RNDN);
  }
};

Cx cadd(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx csub(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cmul(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Cx r(p);
  Float t(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

bool cis_zero(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Cx cdiv(const Cx& a, const Cx& b, mpfr_prec_t p) {
  Float n(p), t(p);
  mpfr_sqr(n.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
  Cx conj(p);
  mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
  Cx r = cmul(a, conj, p);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
  return r;
}

void cabs(Float& out, const Cx& a) { mpfr_hypot(out.get(), a.re.get(), a.im.get(), MPFR_RNDN); }

class AberthSolver {
 public:
  explicit AberthSolver(const IntPoly& f) : f_(f), n_(f.degree()) {}

  // Refines `z` (size n) in place to roughly `prec` bits.
  void solve(std::vector<Cx>& z, mpfr_prec_t target) {
    if (z.empty()) initial(z, 128);
    mpfr_prec_t p = std::min<mpfr_prec_t>(target, std::max<mpfr_prec_t>(128, z[0].re.precision()));
    for (;;) {
      for (auto& c : z) c.set_prec(p);
      iterate(z, p, z[0].re.precision() <= 128 ? 2000 : 200);
      if (p >= target) break;
      p = std::min<mpfr_prec_t>(target, 2 * p);
    }
  }

 private:
  void initial(std::vector<Cx>& z, mpfr_prec_t p) {
    // Fujiwara-type radius 2 max |a_{n-k}/a_n|^(1/k), in log2 form to avoid overflow.
    auto log2abs = [](const mpz_class& v) {
      long e = 0;
      double d = mpz_get_d_2exp(&e, v.get_mpz_t());
      return std::log2(std::fabs(d)) + static_cast<double>(e);
    };
    const double lead = log2abs(f_.lead());
    double best = -1e300;
    for (int k = 1; k <= n_; ++k) {
      const mpz_class& a = f_.coeffs()[static_cast<size_t>(n_ - k)];
      if (sgn(a) == 0) continue;
      best = std::max(best, (log2abs(a) - lead) / k);
    }
    const double log_radius = (best < -1e299 ? 0.0 : best) + 1.0;
    z.clear();
    for (int k = 0; k < n_; ++k) {
      Cx c(p);
      const double angle = 2.0 * M_PI * k / n_ + 0.7 / n_;
      mpfr_set_d(c.re.get(), std::cos(angle), MPFR_RNDN);
      mpfr_set_d(c.im.get(), std::sin(angle), MPFR_RNDN);
      mpfr_mul_2si(c.re.get(), c.re.get(), static_cast<long>(std::ceil(log_radius)), MPFR_RNDN);
      mpfr_mul_2si(c.im.get(), c.im.get(), static_cast<long>(std::ceil(log_radius)), MPFR_RNDN);
      z.push_back(std::move(c));
    }
  }

  void eval(const Cx& z, Cx& p, Cx& dp, mpfr_prec_t prec) const {
    p = Cx(prec);
    dp = Cx(prec);
    for (int k = n_; k >= 0; --k) {
      dp = cadd(cmul(dp, z, prec), p, prec);
      p = cmul(p, z, prec);
      mpfr_add_z(p.re.get(), p.re.get(), f_.coeffs()[static_cast<size_t>(k)].get_mpz_t(), MPFR_RNDN);
    }
  }

  void iterate(std::vector<Cx>& z, mpfr_prec_t prec, int max_iter) const {
    Cx one(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    Float wabs(prec), zabs(prec), tol(prec);
    std::vector<bool> done(z.size(), false);
    for (int it = 0; it < max_iter; ++it) {
      bool all_done = true;
      for (size_t i = 0; i < z.size(); ++i) {
        if (done[i]) continue;
        Cx p(prec), dp(prec);
        eval(z[i], p, dp, prec);
        if (cis_zero(p)) {
          done[i] = true;
          continue;
        }
        if (cis_zero(dp)) {
          mpfr_nextabove(z[i].re.get());
          all_done = false;
          continue;
        }
        Cx ratio = cdiv(p, dp, prec);
        Cx sum(prec);
        for (size_t j = 0; j < z.size(); ++j) {
          if (j == i) continue;
          Cx diff = csub(z[i], z[j], prec);
          if (cis_zero(diff)) continue;
          sum = cadd(sum, cdiv(one, diff, prec), prec);
        }
        Cx denom = csub(one, cmul(ratio, sum, prec), prec);
        Cx w = cis_zero(denom) ? ratio : cdiv(ratio, denom, prec);
        z[i] = csub(z[i], w, prec);
        cabs(wabs, w);
        cabs(zabs, z[i]);
        if (mpfr_cmp_ui(zabs.get(), 1) < 0) mpfr_set_ui(zabs.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(tol.get(), zabs.get(), -(static_cast<long>(prec) - 6), MPFR_RNDN);
        if (mpfr_lessequal_p(wabs.get(), tol.get())) {
          done[i] = true;
        } else {
          all_done = false;
        }
      }
      if (all_done) return;
    }
  }

  const IntPoly& f_;
  int n_;
};

// Certifies approximations as isolating disks. Returns false on failure.
bool certify(const IntPoly& f, const std::vector<Cx>& z, int real_count, mpfr_prec_t prec, int digits,
             std::vector<RootBox>& out) {
  const int n = f.degree();
  // Classify: the real_count approximations closest to the axis are snapped to it.
  std::vector<size_t> order(z.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Float> absim;
  absim.reserve(z.size());
  for (const auto& c : z) {
    Float a(prec);
    mpfr_abs(a.get(), c.im.get(), MPFR_RNDN);
    absim.push_back(std::move(a));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return mpfr_less_p(absim[a].get(), absim[b].get()); });

  std::vector<Cx> reals, uppers;
  for (int k = 0; k < n; ++k) {
    const Cx& c = z[order[static_cast<size_t>(k)]];
    if (k < real_count) {
      Cx r(prec);
      mpfr_set(r.re.get(), c.re.get(), MPFR_RNDN);
      reals.push_back(std::move(r));
    } else if (mpfr_sgn(c.im.get()) > 0) {
      uppers.push_back(c);
    }
  }
  if (static_cast<int>(uppers.size()) * 2 != n - real_count) return false;

  auto cmp_cx = [](const Cx& a, const Cx& b) {
    int c = mpfr_cmp(a.re.get(), b.re.get());
    if (c != 0) return c < 0;
    return mpfr_less_p(a.im.get(), b.im.get()) != 0;
  };
  std::sort(reals.begin(), reals.end(), cmp_cx);
  std::sort(uppers.begin(), uppers.end(), cmp_cx);

  std::vector<Cx> centers;
  std::vector<RootKind> kinds;
  for (auto& c : reals) {
    centers.push_back(c);
    kinds.push_back(RootKind::kReal);
  }
  for (auto& c : uppers) {
    centers.push_back(c);
    kinds.push_back(RootKind::kComplexUpper);
  }
  for (auto& c : uppers) {
    Cx lo(prec);
    mpfr_set(lo.re.get(), c.re.get(), MPFR_RNDN);
    mpfr_neg(lo.im.get(), c.im.get(), MPFR_RNDN);
    centers.push_back(std::move(lo));
    kinds.push_back(RootKind::kComplexLower);
  }

  // Gerschgorin inclusion: disks D(z_i, n |W_i|) with W_i the Weierstrass
  // corrections; pairwise disjoint disks each hold exactly one root.
  std::vector<ComplexInterval> pts;
  for (const auto& c : centers) pts.push_back({Interval::point(c.re), Interval::point(c.im)});
  const RatPoly fr = to_rat(f);
  const Interval lead = Interval::from_rational(mpq_class(f.lead()), prec);
  std::vector<Float> radii;
  for (int i = 0; i < n; ++i) {
    ComplexInterval val = eval_enclosure(fr, pts[static_cast<size_t>(i)]);
    ComplexInterval den{lead, Interval(prec)};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      den = den * (pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]);
    }
    if (den.norm().contains_zero()) return false;
    Interval w = (val.abs()) / den.abs();
    Float r(prec);
    mpfr_mul_ui(r.get(), w.hi().get(), static_cast<unsigned long>(n), MPFR_RNDU);
    radii.push_back(std::move(r));
  }

  out.clear();
  for (int i = 0; i < n; ++i) {
    RootBox b{centers[static_cast<size_t>(i)].re, centers[static_cast<size_t>(i)].im,
              radii[static_cast<size_t>(i)], kinds[static_cast<size_t>(i)], std::nullopt, digits};
    out.push_back(std::move(b));
  }
  const int t = static_cast<int>(uppers.size());
  for (int k = 0; k < t; ++k) {
    out[static_cast<size_t>(real_count + k)].pair_id = static_cast<size_t>(real_count + t + k);
    out[static_cast<size_t>(real_count + t + k)].pair_id = static_cast<size_t>(real_count + k);
    // the upper disk must stay off the real axis
    const RootBox& up = out[static_cast<size_t>(real_count + k)];
    if (!mpfr_greater_p(up.center_im.get(), up.radius.get())) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (out[static_cast<size_t>(i)].disk_intersects(out[static_cast<size_t>(j)])) return false;
  return true;
}

std::vector<RootBox> isolate_with_start(const IntPoly& f, const PrecisionContext& ctx) {
  ctx.validate();
  if (f.is_zero()) throw InvalidInput("cannot isolate the roots of the zero polynomial");
  if (f.degree() > 64) throw InvalidInput("root isolation is limited to degree 64");
  if (f.degree() == 0) return {};
  if (!is_squarefree(f)) throw InvalidInput("root isolation requires a squarefree polynomial");
  const int real_count = real_root_count(f);
  AberthSolver solver(f);
  std::vector<Cx> approx;
  int digits = ctx.working_digits;
  for (;;) {
    const mpfr_prec_t prec = bits_for_digits(digits);
    solver.solve(approx, prec);
    std::vector<RootBox> boxes;
    if (certify(f, approx, real_count, prec, digits, boxes)) return boxes;
    if (digits >= ctx.max_digits)
      throw PrecisionExhausted("root isolation failed to separate roots at " + std::to_string(digits) + " digits");
    digits = std::min(ctx.max_digits, digits * ctx.escalation_factor);
  }
}

}  // namespace

std::vector<RootBox> isolate_roots(const IntPoly& f, const PrecisionContext& ctx) {
  return isolate_with_start(f, ctx);
}

std::optional<mpq_class> root_separation_bound(const IntPoly& f) {
  if (f.degree() < 1) throw InvalidInput("separation bound needs degree >= 1");
  if (!is_squarefree(f)) throw InvalidInput("separation bound requires a squarefree polynomial");
  const int d = f.degree();
  if (d == 1) return std::nullopt;
  // delta^2 = 3 |disc| / (d^(d+2) ||f||_2^(2(d-1)))
  mpz_class disc = abs(discriminant(f));
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class den, t;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d + 2));
  mpz_pow_ui(t.get_mpz_t(), norm2.get_mpz_t(), static_cast<unsigned long>(d - 1));
  den *= t;
  mpz_class num = 3 * disc;
  // floor(sqrt(num 4^k / den)) / 2^k with k large enough for ~64 significant bits
  long k = 64;
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  if (db > nb) k += (db - nb) / 2 + 1;
  mpz_class scaled = num;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
  scaled /= den;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpq_class out(root);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  return out;
}

RootBox refine_root(const IntPoly& f, const RootBox& box, const mpq_class& eps, const PrecisionContext& ctx) {
  if (sgn(eps) <= 0) throw InvalidInput("refinement tolerance must be positive");
  if (mpfr_cmp_q(box.radius.get(), eps.get_mpq_t()) <= 0) return box;
  // radius shrinks roughly like 10^-digits; aim directly at the target
  if (mpfr_zero_p(box.radius.get())) return box;
  const double log10_radius = static_cast<double>(mpfr_get_exp(box.radius.get())) * 0.30103;
  const double log10_eps = (static_cast<double>(mpz_sizeinbase(eps.get_num_mpz_t(), 2)) -
                            static_cast<double>(mpz_sizeinbase(eps.get_den_mpz_t(), 2))) * 0.30103;
  const int gap = static_cast<int>(std::ceil(std::max(0.0, log10_radius - log10_eps)));
  int digits = std::max(ctx.working_digits, box.digits + gap + 8);
  for (;;) {
    if (digits > ctx.max_digits) {
      if (box.digits >= ctx.max_digits)
        throw PrecisionExhausted("refinement needs more than " + std::to_string(ctx.max_digits) + " digits");
      digits = ctx.max_digits;
    }
    auto boxes = isolate_roots(f, ctx.with_digits(digits));
    const RootBox* hit = nullptr;
    int hits = 0;
    for (const auto& b : boxes)
      if (b.disk_intersects(box)) {
        hit = &b;
        ++hits;
      }
    if (hits == 1 && mpfr_cmp_q(hit->radius.get(), eps.get_mpq_t()) <= 0) {
      RootBox out = *hit;
      out.kind = box.kind;
      out.pair_id = box.pair_id;
      return out;
    }
    if (digits >= ctx.max_digits)
      throw PrecisionExhausted("refinement needs more than " + std::to_string(ctx.max_digits) + " digits");
    digits = std::min(ctx.max_digits, digits * ctx.escalation_factor);
  }
}

int certified_sign(const IntPoly& f, const RootBox& box, const RatPoly& g, const PrecisionContext& ctx) {
  if (box.kind != RootKind::kReal) throw InvalidInput("certified_sign needs a real root");
  RootBox cur = box;
  for (;;) {
    Interval v = eval_enclosure(g, Interval::ball(cur.center_re, cur.radius));
    if (v.positive()) return 1;
    if (v.negative()) return -1;
    if (cur.digits >= ctx.max_digits)
      throw PrecisionExhausted("sign undecided at " + std::to_string(cur.digits) + " digits");
    const int next = std::min(ctx.max_digits, cur.digits * ctx.escalation_factor);
    mpq_class eps(1);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(next));
    eps /= den;
    cur = refine_root(f, cur, eps, ctx.with_digits(std::max(ctx.working_digits, next)));
    cur.digits = std::max(cur.digits, next);
  }
}

}  // namespace lck
