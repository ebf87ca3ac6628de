#pragma once

#include <optional>
#include <vector>

#include "lckcheck/number_field.hpp"
#include "lckcheck/units.hpp"

namespace lck {

// An algebraic number given by its minimal polynomial and one isolated root.
struct AlgebraicNumber {
  IntPoly min_poly;  // primitive, irreducible, positive lead
  RootBox box;

  // Checks irreducibility and picks root `index` in the isolation order.
  static AlgebraicNumber from_poly(const IntPoly& f, size_t index = 0, const PrecisionContext& ctx = {},
                                   int degree_cap = kDefaultDegreeCap);
};

// Absolute height or Mahler measure. `exact` is set when the value is a known
// rational (then enclosure is the point interval around it).
struct HeightValue {
  Interval enclosure;
  std::optional<mpq_class> exact;

  Float value() const { return enclosure.mid(); }
  // Upper bound on |value() - true value|.
  Float error() const;
};

HeightValue mahler_measure(const IntPoly& f, const mpq_class& eps, const PrecisionContext& ctx = {},
                           int degree_cap = kDefaultDegreeCap);

// H(a) = M(min poly)^(1/deg); H(0) = 1.
HeightValue height_of_min_poly(const IntPoly& m, const mpq_class& eps, const PrecisionContext& ctx = {},
                               int degree_cap = kDefaultDegreeCap);
HeightValue height_algebraic(const AlgebraicNumber& a, const mpq_class& eps, const PrecisionContext& ctx = {});
HeightValue height_algebraic(const FieldElement& a, const mpq_class& eps);

// Primitive irreducible m with a root of unity as root.
bool is_cyclotomic(const IntPoly& m);
// Throws InvalidInput for zero.
bool is_root_of_unity(const AlgebraicNumber& a);
bool is_root_of_unity(const FieldElement& a);

// max |x_i| after scaling to coprime integers. Throws InvalidInput if all zero.
mpz_class projective_height_rational(const std::vector<mpq_class>& coords);

struct RatioHeight {
  IntPoly ratio_min_poly;
  HeightValue height;
};

// Height of sigma_{s+k}(u) / sigma_{s+1}(u) for 2 <= k <= t.
RatioHeight unit_ratio_height(const FieldElement& u, int k, const mpq_class& eps);
// Requires t = 2.
RatioHeight unit_point_height(const FieldElement& u, const mpq_class& eps);

struct EnumeratedNumber {
  IntPoly min_poly;
  HeightValue height;
  bool root_of_unity = false;
};

struct EnumerationOptions {
  PrecisionContext ctx;
  long candidate_cap = 20000000;
};

// Minimal polynomials of all algebraic numbers of degree <= deg_max and
// height <= h_max, sorted by degree then coefficients.
std::vector<EnumeratedNumber> enumerate_bounded_height(int deg_max, const mpq_class& h_max,
                                                       const EnumerationOptions& opts = {});

struct SignedPower {
  int sign = 1;
  std::vector<long> exponents;
  FieldElement element;
};

// sign * prod g_i^e_i with |e_i| <= box that pass the equal-modulus test.
std::vector<SignedPower> search_equal_modulus_units(const UnitSubgroup& u, long box);

}  // namespace lck
