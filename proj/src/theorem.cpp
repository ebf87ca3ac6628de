#include "lckcheck/theorem.hpp"

namespace lck {

namespace {

void require_positive(SignaturePair sig) {
  if (sig.s < 1 || sig.t < 1) throw InvalidInput("signature needs s >= 1 and t >= 1");
}

// Verdict without the signature precondition.
LckVerdict evaluate(const FieldPtr& field, const std::vector<FieldElement>& gens) {
  LckVerdict v;
  v.signature = {field->s(), field->t()};
  if (v.signature.s < 1 || v.signature.t < 1)
    v.reasons.push_back({"signature", std::nullopt, "needs s >= 1 and t >= 1"});
  std::vector<FieldElement> units;
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (!g.field()->same_as(*field)) throw InvalidInput("generator " + std::to_string(i) + " lies in another field");
    GeneratorCheck c;
    c.unit = !g.is_zero() && is_unit(g);
    if (!c.unit) {
      v.all_units = false;
      v.reasons.push_back({"unit", i, "not a unit"});
      v.generators.push_back(std::move(c));
      continue;
    }
    units.push_back(g);
    c.totally_positive = is_totally_positive(g);
    c.equal_modulus = is_equal_modulus(g);
    if (!c.totally_positive->value) {
      v.all_totally_positive = false;
      v.reasons.push_back({"totally_positive", i, "negative at a real embedding"});
    }
    if (!c.equal_modulus->value) {
      v.all_equal_modulus = false;
      v.reasons.push_back({"equal_modulus", i, "complex embeddings have different moduli"});
    }
    v.generators.push_back(std::move(c));
  }
  v.rank = rank(UnitSubgroup(field, units));
  v.rank_equals_s = v.rank.certified == v.signature.s && v.rank.estimate == v.signature.s;
  if (!v.rank_equals_s)
    v.reasons.push_back({"rank", std::nullopt,
                         "rank " + std::to_string(v.rank.certified) + " (estimate " + std::to_string(v.rank.estimate) +
                             ") differs from s = " + std::to_string(v.signature.s)});
  v.lck = v.reasons.empty();
  return v;
}

}  // namespace

std::optional<MQ> dubickas_feasible(SignaturePair sig) {
  require_positive(sig);
  const long n = sig.s + 2 * sig.t;
  for (long m = 0; 2 * (2 * sig.t + 2 * m) <= n; ++m) {
    const long base = 2 * sig.t + 2 * m;
    if (n % base == 0 && n / base >= 2) return MQ{m, n / base};
  }
  return std::nullopt;
}

std::vector<CaseRecord> signature_case_analysis(SignaturePair sig) {
  require_positive(sig);
  const long n = sig.s + 2 * sig.t;
  std::vector<CaseRecord> out;
  for (long D = 1; D <= n; ++D) {
    if (n % D || D < sig.t) continue;
    for (int tp = 0; tp <= 1; ++tp) {
      const long sp = n / D - 2 * tp;
      if (sp < 0) continue;
      if ((sp - 1) * D > sig.s) continue;
      if (sp + tp - 1 < sig.s) continue;
      out.push_back({sp, tp, D});
    }
  }
  return out;
}

LckVerdict lck_admissible(const FieldPtr& field, const std::vector<FieldElement>& gens) {
  require_positive({field->s(), field->t()});
  return evaluate(field, gens);
}

AuditReport main_theorem_audit(const FieldPtr& field, const std::vector<FieldElement>& gens) {
  AuditReport a;
  a.verdict = evaluate(field, gens);
  const SignaturePair sig = a.verdict.signature;
  if (sig.s >= 1 && sig.t >= 1) {
    a.case_analysis = signature_case_analysis(sig);
    if (sig.t >= 2 && !a.case_analysis.empty()) {
      a.consistent = false;
      a.notes.push_back("case analysis admits a subfield configuration with t >= 2");
    }
  } else {
    a.notes.push_back("signature outside s >= 1, t >= 1: not admissible");
  }
  if (a.verdict.lck && sig.t != 1) {
    a.consistent = false;
    a.notes.push_back("lck verdict with t = " + std::to_string(sig.t));
  }
  for (size_t i = 0; i < a.verdict.generators.size(); ++i) {
    const auto& g = a.verdict.generators[i];
    if (g.equal_modulus && !g.equal_modulus->value) a.equal_modulus_violations.push_back(i);
  }
  const bool others_hold = a.verdict.all_units && a.verdict.all_totally_positive && a.verdict.rank_equals_s &&
                           sig.s >= 1;
  if (sig.t >= 2 && others_hold) {
    if (a.equal_modulus_violations.empty()) {
      a.consistent = false;
      a.notes.push_back("no generator violates equal modulus although t >= 2");
    } else {
      a.notes.push_back("equal modulus fails as required for t >= 2");
    }
  }
  if (sig.t == 1 && a.verdict.lck) a.notes.push_back("t = 1");
  if (sig.t == 2) {
    const mpq_class eps("1/1000000000000000000000000000000");
    for (size_t i = 0; i < gens.size(); ++i) {
      if (!a.verdict.generators[i].unit) continue;
      PointHeightTrace tr;
      tr.generator = i;
      try {
        tr.height = unit_point_height(gens[i], eps);
      } catch (const Error& e) {
        tr.error = std::string(status_name(e.status())) + ": " + e.what();
      }
      a.point_heights.push_back(std::move(tr));
    }
  }
  return a;
}

}  // namespace lck
