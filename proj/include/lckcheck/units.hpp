#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lckcheck/number_field.hpp"

namespace lck {

struct Certificate {
  std::string method;                   // "vacuous", "exact", "separation", "sign"
  int precision_digits = 0;             // digits of the deciding evaluation
  std::optional<mpq_class> separation;  // delta, when a separation bound was used
  std::string margin;                   // decimal lower bound on the deciding gap
  std::vector<int> escalation;          // digits tried, in order
};

struct Decision {
  bool value = false;
  Certificate certificate;
};

// Generators are checked to be units on construction.
struct UnitSubgroup {
  FieldPtr field;
  std::vector<FieldElement> generators;

  UnitSubgroup(FieldPtr k, std::vector<FieldElement> gens);
};

// n_i log|sigma_i(u)| for the s real embeddings and t pair representatives
// (n_i = 1 or 2). Throws InvalidInput unless u is a unit.
std::vector<Interval> log_embedding(const FieldElement& u, int digits);
std::vector<Interval> log_embedding(const FieldElement& u);

struct RankResult {
  int certified = 0;  // lower bound: largest minor with determinant excluding 0
  int estimate = 0;   // numeric rank at pivot threshold 10^(-digits/2)
  int digits = 0;
};
RankResult rank(const UnitSubgroup& u);

// |sigma_{s+1}(u)| = ... = |sigma_{s+t}(u)|, decided exactly. u must be nonzero.
Decision is_equal_modulus(const FieldElement& u);
// sigma_{s+1}(u) = ... = sigma_{s+t}(u) as complex numbers.
Decision is_equal_conjugates(const FieldElement& u);
// sigma_i(u) > 0 for every real embedding. u must be nonzero.
Decision is_totally_positive(const FieldElement& u);

struct GeneratorVerdict {
  bool unit = true;
  Decision totally_positive;
  Decision equal_modulus;
  Decision equal_conjugates;
};

struct SubgroupReport {
  std::vector<GeneratorVerdict> generators;
  RankResult rank;
  bool rank_equals_s = false;
  bool rank_within_dirichlet = true;  // estimate <= s + t - 1
};

SubgroupReport analyze_subgroup(const UnitSubgroup& u);

// Decimal rendering of a lower bound.
std::string decimal_lower(const Float& x, int digits = 20);

}  // namespace lck
