#pragma once

#include <utility>
#include <vector>

#include "lckcheck/poly.hpp"

namespace lck {

constexpr int kDefaultDegreeCap = 24;

struct Factorization {
  mpz_class content = 1;                         // carries the sign of f
  std::vector<std::pair<IntPoly, int>> factors;  // primitive, positive lc, irreducible

  IntPoly expand() const;
};

// Complete factorization over the rationals. Throws BudgetExceeded above the
// degree cap and InvalidInput for the zero polynomial.
Factorization factor_int_poly(const IntPoly& f, int degree_cap = kDefaultDegreeCap);

struct IrreducibilityWitness {
  enum class Kind { kIrreducible, kReducible, kUnknown };
  Kind kind = Kind::kUnknown;
  long prime = 0;  // for kIrreducible: f mod prime is irreducible
  IntPoly factor;  // for kReducible: a proper factor
};

// Sound but incomplete: tries a rational-root/squarefree check and the first
// ten primes >= 3 not dividing lc(f) * disc(f).
IrreducibilityWitness irreducibility_witness(const IntPoly& f);

// Witness first, full factorization as the fallback.
bool is_irreducible(const IntPoly& f, int degree_cap = kDefaultDegreeCap);

// Degrees of the irreducible factors of f mod p (f squarefree mod p, p odd, p not dividing lc).
std::vector<int> modular_factor_degrees(const IntPoly& f, unsigned long p);

}  // namespace lck
