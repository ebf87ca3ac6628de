#include "lckcheck/units.hpp"

#include <algorithm>
#include <cmath>

namespace lck {

namespace {

// Digits needed so that embedding enclosures are comfortably below delta.
int digits_for(const mpq_class& delta, int base) {
  mpz_class num = delta.get_num(), den = delta.get_den();
  const double log10_delta =
      (static_cast<double>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<double>(mpz_sizeinbase(den.get_mpz_t(), 2))) *
      0.30103;
  return std::max(base, static_cast<int>(std::ceil(-log10_delta)) + 16);
}

Float lower_gap(const Interval& below, const Interval& above) {
  Float g(std::max(below.precision(), above.precision()));
  mpfr_sub(g.get(), above.lo().get(), below.hi().get(), MPFR_RNDD);
  return g;
}

// Runs step(digits) with escalating precision until it returns a decision.
template <typename Step>
Decision escalate(const PrecisionContext& ctx, int start, Step step) {
  std::vector<int> trace;
  for (int d = start;; d *= ctx.escalation_factor) {
    d = std::min(d, ctx.max_digits);
    trace.push_back(d);
    if (auto r = step(d)) {
      r->certificate.precision_digits = d;
      r->certificate.escalation = trace;
      return *r;
    }
    if (d >= ctx.max_digits) break;
  }
  throw PrecisionExhausted("decision not reached within " + std::to_string(ctx.max_digits) + " digits");
}

Decision vacuous() {
  Decision d{true, {}};
  d.certificate.method = "vacuous";
  return d;
}

// Separation bound of the squarefree polynomial p, or nullopt if p has at most one root.
std::optional<mpq_class> separation(const IntPoly& p) {
  if (p.degree() <= 1) return std::nullopt;
  return root_separation_bound(p);
}

Float half(const mpq_class& q, mpfr_prec_t prec) {
  Float h(prec);
  mpfr_set_q(h.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_div_2ui(h.get(), h.get(), 1, MPFR_RNDD);
  return h;
}

}  // namespace

std::string decimal_lower(const Float& x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RDg", digits, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

UnitSubgroup::UnitSubgroup(FieldPtr k, std::vector<FieldElement> gens) : field(std::move(k)), generators(std::move(gens)) {
  for (size_t i = 0; i < generators.size(); ++i) {
    if (!generators[i].field()->same_as(*field)) throw InvalidInput("generator " + std::to_string(i) + " lies in another field");
    if (generators[i].is_zero() || !is_unit(generators[i]))
      throw InvalidInput("generator " + std::to_string(i) + " is not a unit");
  }
}

// --- log embedding --------------------------------------------------------

std::vector<Interval> log_embedding(const FieldElement& u, int digits) {
  if (u.is_zero() || !is_unit(u)) throw InvalidInput("log embedding needs a unit");
  const auto& k = *u.field();
  const PrecisionContext& ctx = k.precision();
  const size_t s = static_cast<size_t>(k.s()), t = static_cast<size_t>(k.t());
  for (int d = digits;; d *= ctx.escalation_factor) {
    d = std::min(d, ctx.max_digits);
    auto z = embed_all(u, d);
    std::vector<Interval> out;
    bool ok = true;
    for (size_t i = 0; i < s + t && ok; ++i) {
      Interval n = i < s ? z[i].re.abs() : z[i].norm();
      if (!n.positive()) {
        ok = false;
        break;
      }
      out.push_back(n.log());
    }
    if (ok) return out;
    if (d >= ctx.max_digits) throw PrecisionExhausted("log embedding needs more than max digits");
  }
}

std::vector<Interval> log_embedding(const FieldElement& u) {
  return log_embedding(u, u.field()->precision().working_digits);
}

// --- rank -----------------------------------------------------------------

RankResult rank(const UnitSubgroup& U) {
  const auto& k = *U.field;
  const PrecisionContext& ctx = k.precision();
  const size_t rows = U.generators.size(), cols = static_cast<size_t>(k.s() + k.t());
  RankResult res;
  res.digits = ctx.working_digits;
  if (rows == 0 || cols == 0) return res;

  for (int d = ctx.working_digits;; d *= ctx.escalation_factor) {
    d = std::min(d, ctx.max_digits);
    const mpfr_prec_t prec = bits_for_digits(d);
    std::vector<std::vector<Interval>> L;
    for (const auto& g : U.generators) L.push_back(log_embedding(g, d));

    // greedy full pivoting on midpoints
    std::vector<std::vector<Float>> m(rows, std::vector<Float>(cols, Float(prec)));
    Float scale(prec, 1);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        m[i][j] = L[i][j].mid();
        Float a(prec);
        mpfr_abs(a.get(), m[i][j].get(), MPFR_RNDN);
        if (mpfr_greater_p(a.get(), scale.get())) scale = a;
      }
    Float tau(prec);
    mpfr_set_ui(tau.get(), 10, MPFR_RNDN);
    mpfr_pow_si(tau.get(), tau.get(), -(ctx.working_digits / 2), MPFR_RNDN);
    mpfr_mul(tau.get(), tau.get(), scale.get(), MPFR_RNDN);

    std::vector<size_t> prow, pcol;
    std::vector<bool> rused(rows, false), cused(cols, false);
    for (;;) {
      size_t bi = rows, bj = cols;
      Float best(prec);
      for (size_t i = 0; i < rows; ++i) {
        if (rused[i]) continue;
        for (size_t j = 0; j < cols; ++j) {
          if (cused[j]) continue;
          Float a(prec);
          mpfr_abs(a.get(), m[i][j].get(), MPFR_RNDN);
          if (mpfr_greater_p(a.get(), best.get())) {
            best = a;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows || !mpfr_greater_p(best.get(), tau.get())) break;
      rused[bi] = cused[bj] = true;
      prow.push_back(bi);
      pcol.push_back(bj);
      for (size_t i = 0; i < rows; ++i) {
        if (rused[i]) continue;
        Float f(prec);
        mpfr_div(f.get(), m[i][bj].get(), m[bi][bj].get(), MPFR_RNDN);
        for (size_t j = 0; j < cols; ++j) {
          Float p(prec);
          mpfr_mul(p.get(), f.get(), m[bi][j].get(), MPFR_RNDN);
          mpfr_sub(m[i][j].get(), m[i][j].get(), p.get(), MPFR_RNDN);
        }
      }
    }
    const size_t e = prow.size();
    if (e + 1 > cols) throw Error(Status::kInternal, "rank estimate exceeds the Dirichlet bound");

    // interval elimination in pivot order; the leading m-minor determinant is the
    // product of the first m pivots
    std::vector<std::vector<Interval>> a(e, std::vector<Interval>(e, Interval(prec)));
    for (size_t i = 0; i < e; ++i)
      for (size_t j = 0; j < e; ++j) a[i][j] = L[prow[i]][pcol[j]];
    size_t certified = 0;
    for (size_t p = 0; p < e; ++p) {
      if (a[p][p].contains_zero()) break;
      ++certified;
      for (size_t i = p + 1; i < e; ++i) {
        Interval f = a[i][p] / a[p][p];
        for (size_t j = p; j < e; ++j) a[i][j] = a[i][j] - f * a[p][j];
      }
    }
    res.estimate = static_cast<int>(e);
    res.certified = static_cast<int>(certified);
    res.digits = d;
    if (certified == e) return res;
    if (d >= ctx.max_digits) throw PrecisionExhausted("rank certification needs more than max digits");
  }
}

// --- decisions ------------------------------------------------------------

Decision is_equal_modulus(const FieldElement& u) {
  if (u.is_zero()) throw InvalidInput("equal-modulus test needs a nonzero element");
  const auto& k = *u.field();
  const size_t s = static_cast<size_t>(k.s()), t = static_cast<size_t>(k.t());
  if (t <= 1) return vacuous();
  const IntPoly m = min_poly_int(u);
  if (m.degree() == 1) {
    Decision d{true, {}};
    d.certificate.method = "exact";
    return d;
  }
  // moduli squared are products of two conjugates of u, or squares when the
  // pair of embeddings sends u to a real number
  const IntPoly p = squarefree_part(conjugate_product_poly(m) * conjugate_square_poly(m));
  const auto delta = separation(p);
  const int start = delta ? digits_for(*delta, k.precision().working_digits) : k.precision().working_digits;

  return escalate(k.precision(), start, [&](int digits) -> std::optional<Decision> {
    auto z = embed_all(u, digits);
    std::vector<Interval> mod;
    for (size_t i = 0; i < t; ++i) mod.push_back(z[s + i].norm());
    // any disjoint pair decides "unequal"
    Float best_gap(mod[0].precision());
    mpfr_set_inf(best_gap.get(), -1);
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j) {
        if (i == j) continue;
        Float g = lower_gap(mod[i], mod[j]);
        if (mpfr_greater_p(g.get(), best_gap.get())) best_gap = g;
      }
    if (best_gap.sign() > 0) {
      Decision d{false, {}};
      d.certificate.method = "separation";
      d.certificate.separation = delta;
      d.certificate.margin = decimal_lower(best_gap);
      return d;
    }
    if (!delta) return std::nullopt;
    // widths below delta/2 plus pairwise overlap force equality
    const Float h = half(*delta, mod[0].precision());
    Float worst(mod[0].precision());
    for (const auto& iv : mod) {
      Float w = iv.width();
      if (mpfr_greater_p(w.get(), worst.get())) worst = w;
    }
    if (!mpfr_less_p(worst.get(), h.get())) return std::nullopt;
    Decision d{true, {}};
    d.certificate.method = "separation";
    d.certificate.separation = delta;
    Float margin(h.precision());
    mpfr_sub(margin.get(), h.get(), worst.get(), MPFR_RNDD);
    d.certificate.margin = decimal_lower(margin);
    return d;
  });
}

Decision is_equal_conjugates(const FieldElement& u) {
  const auto& k = *u.field();
  const size_t s = static_cast<size_t>(k.s()), t = static_cast<size_t>(k.t());
  if (t <= 1) return vacuous();
  if (u.is_rational()) {
    Decision d{true, {}};
    d.certificate.method = "exact";
    return d;
  }
  const IntPoly m = min_poly_int(u);
  const auto delta = separation(m);
  const int start = delta ? digits_for(*delta, k.precision().working_digits) : k.precision().working_digits;

  return escalate(k.precision(), start, [&](int digits) -> std::optional<Decision> {
    auto z = embed_all(u, digits);
    const mpfr_prec_t prec = z[0].re.precision();
    Float best_gap(prec);
    mpfr_set_inf(best_gap.get(), -1);
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j) {
        if (i == j) continue;
        Float g1 = lower_gap(z[s + i].re, z[s + j].re), g2 = lower_gap(z[s + i].im, z[s + j].im);
        for (Float* g : {&g1, &g2})
          if (mpfr_greater_p(g->get(), best_gap.get())) best_gap = *g;
      }
    if (best_gap.sign() > 0) {
      Decision d{false, {}};
      d.certificate.method = "separation";
      d.certificate.separation = delta;
      d.certificate.margin = decimal_lower(best_gap);
      return d;
    }
    if (!delta) return std::nullopt;
    const Float h = half(*delta, prec);
    Float worst(prec);
    for (size_t i = 0; i < t; ++i) {
      Float r = z[s + i].radius();
      if (mpfr_greater_p(r.get(), worst.get())) worst = r;
    }
    if (!mpfr_less_p(worst.get(), h.get())) return std::nullopt;
    Decision d{true, {}};
    d.certificate.method = "separation";
    d.certificate.separation = delta;
    Float margin(prec);
    mpfr_sub(margin.get(), h.get(), worst.get(), MPFR_RNDD);
    d.certificate.margin = decimal_lower(margin);
    return d;
  });
}

Decision is_totally_positive(const FieldElement& u) {
  if (u.is_zero()) throw InvalidInput("total positivity test needs a nonzero element");
  const auto& k = *u.field();
  const size_t s = static_cast<size_t>(k.s());
  if (s == 0) return vacuous();
  if (u.is_rational()) {
    Decision d{u.poly()[0] > 0, {}};
    d.certificate.method = "exact";
    return d;
  }
  return escalate(k.precision(), k.precision().working_digits, [&](int digits) -> std::optional<Decision> {
    auto z = embed_all(u, digits);
    Float least(z[0].re.precision());
    mpfr_set_inf(least.get(), 1);
    for (size_t i = 0; i < s; ++i) {
      const Interval& v = z[i].re;
      if (v.contains_zero()) return std::nullopt;
      if (v.negative()) {
        Decision d{false, {}};
        d.certificate.method = "sign";
        d.certificate.margin = decimal_lower(v.mig());
        return d;
      }
      Float m = v.mig();
      if (mpfr_less_p(m.get(), least.get())) least = m;
    }
    Decision d{true, {}};
    d.certificate.method = "sign";
    d.certificate.margin = decimal_lower(least);
    return d;
  });
}

SubgroupReport analyze_subgroup(const UnitSubgroup& U) {
  SubgroupReport rep;
  for (const auto& g : U.generators) {
    GeneratorVerdict v;
    v.totally_positive = is_totally_positive(g);
    v.equal_modulus = is_equal_modulus(g);
    v.equal_conjugates = is_equal_conjugates(g);
    rep.generators.push_back(std::move(v));
  }
  rep.rank = rank(U);
  const int s = U.field->s(), t = U.field->t();
  rep.rank_equals_s = rep.rank.certified == s && rep.rank.estimate == s;
  rep.rank_within_dirichlet = rep.rank.estimate <= s + t - 1;
  return rep;
}

}  // namespace lck
