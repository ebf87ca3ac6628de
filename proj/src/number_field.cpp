#include "lckcheck/number_field.hpp"

#include <algorithm>

namespace lck {

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field())) throw InvalidInput("field mismatch");
}

}  // namespace

// --- NumberField ---------------------------------------------------------

FieldPtr NumberField::create(const IntPoly& f, const PrecisionContext& ctx, int degree_cap) {
  ctx.validate();
  if (f.degree() < 1) throw InvalidInput("defining polynomial must have degree >= 1");
  if (f.lead() != 1) throw InvalidInput("defining polynomial must be monic: " + to_string(f));
  if (f.degree() > degree_cap)
    throw BudgetExceeded("degree " + std::to_string(f.degree()) + " exceeds degree cap " + std::to_string(degree_cap));
  return FieldPtr(new NumberField(f, ctx, degree_cap));
}

NumberField::NumberField(IntPoly f, PrecisionContext ctx, int degree_cap)
    : f_(std::move(f)), ctx_(ctx), degree_cap_(degree_cap) {
  if (f_.degree() == 1) {
    proof_ = "linear";
  } else {
    auto w = irreducibility_witness(f_);
    switch (w.kind) {
      case IrreducibilityWitness::Kind::kIrreducible:
        proof_ = "irreducible mod " + std::to_string(w.prime);
        break;
      case IrreducibilityWitness::Kind::kReducible:
        throw ReducibleInput("defining polynomial is reducible; factor " + to_string(w.factor), w.factor);
      case IrreducibilityWitness::Kind::kUnknown: {
        auto fac = factor_int_poly(f_, degree_cap_);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1) {
          const IntPoly& g = fac.factors[0].first;
          throw ReducibleInput("defining polynomial is reducible; factor " + to_string(g), g);
        }
        proof_ = "full factorization";
        break;
      }
    }
  }
  s_ = real_root_count(f_);
  t_ = (f_.degree() - s_) / 2;
  base_ = isolate_roots(f_, ctx_);
  cache_[base_.empty() ? ctx_.working_digits : base_[0].digits] = base_;
}

std::vector<RootBox> NumberField::embeddings_at(int digits) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.lower_bound(digits);
    if (it != cache_.end()) return it->second;
  }
  const size_t n = base_.size();
  int d = digits;
  for (;;) {
    if (d > ctx_.max_digits) throw PrecisionExhausted("cannot certify embeddings at " + std::to_string(digits) + " digits");
    auto fresh = isolate_roots(f_, ctx_.with_digits(d));
    // match each base disk with the unique fresh disk meeting it
    std::vector<RootBox> ordered;
    std::vector<bool> used(n, false);
    bool ok = fresh.size() == n;
    for (size_t i = 0; ok && i < n; ++i) {
      size_t hit = n, hits = 0;
      for (size_t j = 0; j < n; ++j)
        if (!used[j] && fresh[j].kind == base_[i].kind && fresh[j].disk_intersects(base_[i])) {
          hit = j;
          ++hits;
        }
      if (hits != 1) {
        ok = false;
        break;
      }
      used[hit] = true;
      ordered.push_back(fresh[hit]);
    }
    if (ok) {
      for (auto& b : ordered) b.pair_id.reset();
      const size_t s = static_cast<size_t>(s_), t = static_cast<size_t>(t_);
      for (size_t k = 0; k < t; ++k) {
        ordered[s + k].pair_id = s + t + k;
        ordered[s + t + k].pair_id = s + k;
      }
      std::lock_guard<std::mutex> lock(mu_);
      cache_[d] = ordered;
      return ordered;
    }
    d *= ctx_.escalation_factor;
  }
}

// --- FieldElement --------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, const RatPoly& value) : field_(std::move(field)) {
  if (!field_) throw InvalidInput("element without a field");
  value_ = value.degree() >= field_->degree() ? rem(value, to_rat(field_->defining_poly())) : value;
}

FieldElement FieldElement::rational(FieldPtr field, const mpq_class& q) {
  return FieldElement(std::move(field), RatPoly::constant(q));
}

FieldElement FieldElement::generator(FieldPtr field) { return FieldElement(std::move(field), RatPoly::x()); }

std::vector<mpq_class> FieldElement::coeffs() const {
  std::vector<mpq_class> c(static_cast<size_t>(field_->degree()), 0);
  for (int i = 0; i <= value_.degree(); ++i) c[static_cast<size_t>(i)] = value_[i];
  return c;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.value_ + b.value_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.value_ - b.value_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.value_ * b.value_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a * b.inverse();
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -value_); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  // f irreducible, so gcd(value, f) = 1 and s*value + t*f = 1
  auto e = extended_gcd(value_, to_rat(field_->defining_poly()));
  if (e.gcd.degree() != 0) throw Error(Status::kInternal, "element shares a factor with the defining polynomial");
  return FieldElement(field_, mpq_class(1 / e.gcd[0]) * e.s);
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  FieldElement acc = rational(field_, 1);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

// --- minimal polynomial, norm, trace -------------------------------------

namespace {

// Res_y(f(y), D x - G(y)) where a = G(theta)/D, as an integer polynomial in x.
// Equals D^d times the characteristic polynomial.
IntPoly scaled_char_poly(const FieldElement& a, mpz_class& denom) {
  const IntPoly& f = a.field()->defining_poly();
  const int d = f.degree();
  denom = 1;
  for (const auto& c : a.poly().coeffs()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> g;
  for (const auto& c : a.poly().coeffs()) g.emplace_back(mpz_class(c * denom));
  const IntPoly G(g);
  if (G.degree() <= 0) {
    // (D x - G0)^d
    return pow(IntPoly(std::vector<mpz_class>{-G[0], denom}), static_cast<unsigned>(d));
  }
  std::vector<mpq_class> xs, ys;
  for (int x0 = 0; x0 <= d; ++x0) {
    IntPoly h = IntPoly::constant(denom * x0) - G;
    xs.emplace_back(x0);
    ys.emplace_back(resultant(f, h));
  }
  RatPoly p = interpolate(xs, ys);
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw Error(Status::kInternal, "non-integral resultant interpolation");
    out.emplace_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace

RatPoly char_poly(const FieldElement& a) {
  mpz_class D;
  IntPoly p = scaled_char_poly(a, D);
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(a.field()->degree()));
  return mpq_class(1, 1) / mpq_class(scale) * to_rat(p);
}

IntPoly min_poly_int(const FieldElement& a) {
  mpz_class D;
  return squarefree_part(scaled_char_poly(a, D));
}

RatPoly min_poly(const FieldElement& a) { return monic(to_rat(min_poly_int(a))); }

NormTrace norm_trace(const FieldElement& a) {
  RatPoly c = char_poly(a);
  const int d = c.degree();
  mpq_class n = c[0];
  if (d % 2) n = -n;
  return {n, -c[d - 1]};
}

bool is_algebraic_integer(const FieldElement& a) {
  RatPoly m = min_poly(a);
  return std::all_of(m.coeffs().begin(), m.coeffs().end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

bool is_unit(const FieldElement& a) {
  if (a.is_zero()) throw InvalidInput("zero is not a unit");
  if (!is_algebraic_integer(a)) return false;
  mpq_class n = norm_trace(a).norm;
  return n == 1 || n == -1;
}

bool congruence_check(const FieldElement& u, const FieldElement& alpha) {
  if (alpha.is_zero()) throw InvalidInput("congruence modulus is zero");
  if (!is_algebraic_integer(alpha)) throw InvalidInput("congruence modulus is not an algebraic integer");
  if (!is_unit(u)) throw InvalidInput("element is not a unit");
  return is_algebraic_integer((u - FieldElement::rational(u.field(), 1)) / alpha);
}

// --- embeddings ----------------------------------------------------------

ComplexInterval embed(const FieldElement& a, size_t i, int digits) {
  auto boxes = a.field()->embeddings_at(digits);
  if (i >= boxes.size()) throw InvalidInput("embedding index out of range");
  return eval_enclosure(a.poly(), boxes[i].enclosure());
}

std::vector<ComplexInterval> embed_all(const FieldElement& a, int digits) {
  auto boxes = a.field()->embeddings_at(digits);
  std::vector<ComplexInterval> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) out.push_back(eval_enclosure(a.poly(), b.enclosure()));
  return out;
}

}  // namespace lck
