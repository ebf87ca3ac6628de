#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lckcheck/errors.hpp"
#include "lckcheck/factor.hpp"
#include "lckcheck/poly.hpp"
#include "lckcheck/roots.hpp"

namespace lck {

// Raised by NumberField::create when the defining polynomial factors.
class ReducibleInput : public InvalidInput {
 public:
  ReducibleInput(const std::string& what, IntPoly factor) : InvalidInput(what), factor_(std::move(factor)) {}
  const IntPoly& factor() const { return factor_; }

 private:
  IntPoly factor_;
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q(theta) for a monic irreducible integer polynomial f. Immutable apart from
// an internal cache of refined embeddings, which is guarded by a mutex.
class NumberField {
 public:
  static FieldPtr create(const IntPoly& f, const PrecisionContext& ctx = {}, int degree_cap = kDefaultDegreeCap);

  const IntPoly& defining_poly() const { return f_; }
  int degree() const { return f_.degree(); }
  int s() const { return s_; }
  int t() const { return t_; }
  const PrecisionContext& precision() const { return ctx_; }
  int degree_cap() const { return degree_cap_; }
  // How irreducibility was established, e.g. "irreducible mod 3".
  const std::string& irreducibility_proof() const { return proof_; }

  // sigma_1..sigma_s real ascending, then upper representatives, then their conjugates.
  const std::vector<RootBox>& embeddings() const { return base_; }
  // Same order, certified at >= digits.
  std::vector<RootBox> embeddings_at(int digits) const;

  bool same_as(const NumberField& o) const { return this == &o || f_ == o.f_; }

 private:
  NumberField(IntPoly f, PrecisionContext ctx, int degree_cap);

  IntPoly f_;
  PrecisionContext ctx_;
  int degree_cap_;
  int s_ = 0, t_ = 0;
  std::string proof_;
  std::vector<RootBox> base_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<RootBox>> cache_;
};

// Element of a number field as a polynomial in theta of degree < d.
class FieldElement {
 public:
  FieldElement(FieldPtr field, const RatPoly& value);
  static FieldElement rational(FieldPtr field, const mpq_class& q);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const RatPoly& poly() const { return value_; }
  // Power-basis coefficients, padded to length d.
  std::vector<mpq_class> coeffs() const;
  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  // Throws InvalidInput on division by zero.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  RatPoly value_;
};

// prod_i (x - sigma_i(a)), monic of degree d.
RatPoly char_poly(const FieldElement& a);
// Monic minimal polynomial.
RatPoly min_poly(const FieldElement& a);
// Minimal polynomial scaled to a primitive integer polynomial with positive lead.
IntPoly min_poly_int(const FieldElement& a);

struct NormTrace {
  mpq_class norm;
  mpq_class trace;
};
NormTrace norm_trace(const FieldElement& a);

bool is_algebraic_integer(const FieldElement& a);
// Throws InvalidInput for a = 0.
bool is_unit(const FieldElement& a);
// (u - 1)/alpha integral. Throws InvalidInput when alpha is zero or not
// integral, or u is not a unit.
bool congruence_check(const FieldElement& u, const FieldElement& alpha);

// Enclosure of sigma_i(a), using embeddings certified at `digits`.
ComplexInterval embed(const FieldElement& a, size_t i, int digits);
std::vector<ComplexInterval> embed_all(const FieldElement& a, int digits);

}  // namespace lck
