#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lckcheck/heights.hpp"
#include "lckcheck/units.hpp"

namespace lck {

struct SignaturePair {
  long s = 0;
  long t = 0;
};

struct CaseRecord {
  long s_prime = 0;
  int t_prime = 0;
  long degree = 0;  // [K:L]
  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct MQ {
  long m = 0;
  long q = 0;
};

// Smallest (m, q), m >= 0, q >= 2, with (2t + 2m) q = s + 2t. Requires s, t >= 1.
std::optional<MQ> dubickas_feasible(SignaturePair sig);

// All (s', t', D) with (s' + 2t') D = s + 2t, t' in {0, 1}, D >= t,
// (s' - 1) D <= s and s' + t' - 1 >= s. Requires s, t >= 1.
std::vector<CaseRecord> signature_case_analysis(SignaturePair sig);

struct Reason {
  std::string code;  // "signature", "unit", "totally_positive", "rank", "equal_modulus"
  std::optional<size_t> generator;
  std::string detail;
};

struct GeneratorCheck {
  bool unit = false;
  std::optional<Decision> totally_positive;  // unset for non-units
  std::optional<Decision> equal_modulus;
};

struct LckVerdict {
  SignaturePair signature;
  bool all_units = true;
  bool all_totally_positive = true;
  bool rank_equals_s = false;
  bool all_equal_modulus = true;
  bool lck = false;
  RankResult rank;
  std::vector<GeneratorCheck> generators;
  std::vector<Reason> reasons;
};

// Requires s >= 1 and t >= 1 (InvalidInput otherwise).
LckVerdict lck_admissible(const FieldPtr& field, const std::vector<FieldElement>& gens);

struct PointHeightTrace {
  size_t generator = 0;
  std::optional<RatioHeight> height;
  std::string error;  // set when the height could not be computed
};

struct AuditReport {
  bool consistent = true;
  LckVerdict verdict;
  std::vector<CaseRecord> case_analysis;
  std::vector<size_t> equal_modulus_violations;
  std::vector<PointHeightTrace> point_heights;  // t = 2 only
  std::vector<std::string> notes;
};

// Accepts any signature. Never throws for user data; an INCONSISTENT result
// means the implementation contradicts the main theorem.
AuditReport main_theorem_audit(const FieldPtr& field, const std::vector<FieldElement>& gens);

}  // namespace lck
