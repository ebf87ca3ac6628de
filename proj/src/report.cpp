#include "report.hpp"

namespace lck::report {

namespace {

std::string upper_decimal(const Float& x, int digits = 3) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUe", digits - 1, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// Bound on |printed - true| for a `digits`-digit rendering of the midpoint.
Float printed_error(const Interval& v, int digits) {
  const mpfr_prec_t prec = v.precision();
  Float err = v.width();
  Float rel(prec), mag = v.mag();
  mpfr_set_ui(rel.get(), 10, MPFR_RNDU);
  mpfr_pow_si(rel.get(), rel.get(), 1 - digits, MPFR_RNDU);
  mpfr_mul(rel.get(), rel.get(), mag.get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), rel.get(), MPFR_RNDU);
  return err;
}

Json rank_json(const RankResult& r) { return Json{{"certified", r.certified}, {"estimate", r.estimate}, {"digits", r.digits}}; }

Json signature_json(long s, long t) { return Json::array({s, t}); }

Json ratio_height(const RatioHeight& r) {
  return Json{{"ratio_min_poly", integers(r.ratio_min_poly)},
              {"ratio_min_poly_text", to_string(r.ratio_min_poly)},
              {"height", height(r.height)}};
}

}  // namespace

Json rationals(const std::vector<mpq_class>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

Json integers(const IntPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

Json real(const Interval& v, int digits) {
  return Json{{"value", v.mid().to_string(digits)}, {"error", upper_decimal(printed_error(v, digits))}};
}

Json height(const HeightValue& h, int digits) {
  if (h.exact) return Json{{"value", h.exact->get_str()}, {"error", "0"}, {"exact", true}};
  Json j = real(h.enclosure, digits);
  j["exact"] = false;
  return j;
}

std::string height_decimal(const HeightValue& h, int digits) {
  if (h.exact) return h.exact->get_str();
  return h.value().to_string(digits);
}

Json decision(const Decision& d) {
  const auto& c = d.certificate;
  Json cert{{"method", c.method}, {"precision_digits", c.precision_digits}};
  cert["separation_bound"] = c.separation ? Json(c.separation->get_str()) : Json(nullptr);
  cert["margin"] = c.margin.empty() ? Json(nullptr) : Json(c.margin);
  cert["escalation"] = c.escalation;
  return Json{{"value", d.value}, {"certificate", cert}};
}

Json field_info(const NumberField& k) {
  Json emb = Json::array();
  const auto& boxes = k.embeddings();
  for (size_t i = 0; i < boxes.size(); ++i) {
    const auto& b = boxes[i];
    const ComplexInterval z = b.enclosure();
    emb.push_back(Json{{"index", i + 1},
                       {"kind", root_kind_name(b.kind)},
                       {"re", real(z.re)},
                       {"im", real(z.im)},
                       {"radius", upper_decimal(b.radius)}});
  }
  return Json{{"degree", k.degree()},
              {"signature", signature_json(k.s(), k.t())},
              {"polynomial", to_string(k.defining_poly())},
              {"coefficients", integers(k.defining_poly())},
              {"irreducibility", k.irreducibility_proof()},
              {"discriminant", discriminant(k.defining_poly()).get_str()},
              {"embeddings", emb}};
}

Json element(const FieldElement& a) { return rationals(a.coeffs()); }

Json verdict(const LckVerdict& v) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons) {
    Json j{{"code", r.code}};
    j["generator"] = r.generator ? Json(*r.generator) : Json(nullptr);
    j["detail"] = r.detail;
    reasons.push_back(j);
  }
  Json certs = Json::array();
  for (size_t i = 0; i < v.generators.size(); ++i) {
    const auto& g = v.generators[i];
    Json j{{"generator", i}, {"unit", g.unit}};
    j["totally_positive"] = g.totally_positive ? decision(*g.totally_positive) : Json(nullptr);
    j["equal_modulus"] = g.equal_modulus ? decision(*g.equal_modulus) : Json(nullptr);
    certs.push_back(j);
  }
  return Json{{"signature", signature_json(v.signature.s, v.signature.t)},
              {"lck", v.lck},
              {"reasons", reasons},
              {"checks",
               {{"all_units", v.all_units},
                {"all_totally_positive", v.all_totally_positive},
                {"rank_equals_s", v.rank_equals_s},
                {"all_equal_modulus", v.all_equal_modulus}}},
              {"rank", rank_json(v.rank)},
              {"certificates", certs}};
}

Json cases(const SignaturePair& sig, const std::vector<CaseRecord>& c) {
  Json list = Json::array();
  for (const auto& r : c) list.push_back(Json{{"s_prime", r.s_prime}, {"t_prime", r.t_prime}, {"degree", r.degree}});
  return Json{{"signature", signature_json(sig.s, sig.t)}, {"cases", list}, {"empty", c.empty()}};
}

Json audit(const AuditReport& a) {
  Json j = verdict(a.verdict);
  Json ca = Json::array();
  for (const auto& r : a.case_analysis) ca.push_back(Json{{"s_prime", r.s_prime}, {"t_prime", r.t_prime}, {"degree", r.degree}});
  j["case_analysis"] = ca;
  j["audit"] = a.consistent ? "CONSISTENT" : "INCONSISTENT";
  j["equal_modulus_violations"] = a.equal_modulus_violations;
  Json ph = Json::array();
  for (const auto& p : a.point_heights) {
    Json e{{"generator", p.generator}};
    if (p.height) {
      e["point_height"] = ratio_height(*p.height);
    } else {
      e["error"] = p.error;
    }
    ph.push_back(e);
  }
  j["point_heights"] = ph;
  j["notes"] = a.notes;
  return j;
}

Json subgroup(const UnitSubgroup& u, const SubgroupReport& r) {
  Json gens = Json::array();
  for (size_t i = 0; i < r.generators.size(); ++i) {
    const auto& g = r.generators[i];
    gens.push_back(Json{{"element", element(u.generators[i])},
                        {"unit", g.unit},
                        {"totally_positive", decision(g.totally_positive)},
                        {"equal_modulus", decision(g.equal_modulus)},
                        {"equal_conjugates", decision(g.equal_conjugates)}});
  }
  return Json{{"signature", signature_json(u.field->s(), u.field->t())},
              {"generators", gens},
              {"rank", rank_json(r.rank)},
              {"flags", {{"rank_equals_s", r.rank_equals_s}, {"rank_within_dirichlet", r.rank_within_dirichlet}}}};
}

std::string enumeration_line(const EnumeratedNumber& e) {
  return integers(e.min_poly).dump() + "\t" + height_decimal(e.height) + "\t" + (e.root_of_unity ? "true" : "false");
}

}  // namespace lck::report
