#pragma once

#include <optional>
#include <vector>

#include "lckcheck/interval.hpp"
#include "lckcheck/poly.hpp"

namespace lck {

struct PrecisionContext {
  int working_digits = 64;
  int escalation_factor = 2;
  int max_digits = 4096;

  // Throws InvalidInput unless working_digits >= 32, max_digits >= working_digits
  // and escalation_factor >= 2.
  void validate() const;
  PrecisionContext with_digits(int digits) const;
};

enum class RootKind { kReal, kComplexUpper, kComplexLower };

const char* root_kind_name(RootKind k);

// A closed disk containing exactly one root of the polynomial it was isolated
// for. Real roots have a real center; complex roots come in conjugate pairs
// linked through pair_id (index of the partner in the isolation result).
struct RootBox {
  Float center_re;
  Float center_im;
  Float radius;
  RootKind kind = RootKind::kReal;
  std::optional<size_t> pair_id;
  int digits = 0;  // precision the box was certified at

  // Axis-aligned box containing the disk (degenerate imaginary part for real roots).
  ComplexInterval enclosure() const;
  Interval real_enclosure() const;
  bool disk_intersects(const RootBox& o) const;
  // True when this disk lies inside `o`.
  bool disk_inside(const RootBox& o) const;
};

// Certified isolation of all complex roots of a squarefree integer polynomial.
// Order: real roots ascending, then upper-half-plane roots sorted by (re, im),
// then their conjugates in the same order. Throws PrecisionExhausted rather
// than returning overlapping disks.
std::vector<RootBox> isolate_roots(const IntPoly& f, const PrecisionContext& ctx);

// Rational lower bound on the minimum distance between distinct roots
// (Mahler-type bound); nullopt for degree <= 1. Throws InvalidInput when f is
// not squarefree.
std::optional<mpq_class> root_separation_bound(const IntPoly& f);

// Shrinks `box` to radius <= eps. The same root is kept.
RootBox refine_root(const IntPoly& f, const RootBox& box, const mpq_class& eps, const PrecisionContext& ctx);

// Sign of g(root) for the real root isolated by `box`; g(root) must be nonzero.
int certified_sign(const IntPoly& f, const RootBox& box, const RatPoly& g, const PrecisionContext& ctx);

// Horner evaluation in interval arithmetic.
ComplexInterval eval_enclosure(const RatPoly& g, const ComplexInterval& z);
Interval eval_enclosure(const RatPoly& g, const Interval& x);

}  // namespace lck
