#pragma once

// JSON renderings shared by the C API. Rationals are strings; reals carry an
// explicit error bound.

#include <json.hpp>

#include "lckcheck/heights.hpp"
#include "lckcheck/theorem.hpp"

namespace lck::report {

using Json = nlohmann::ordered_json;

Json rationals(const std::vector<mpq_class>& v);
Json integers(const IntPoly& f);
Json real(const Interval& v, int digits = 30);
Json height(const HeightValue& h, int digits = 30);
Json decision(const Decision& d);
Json field_info(const NumberField& k);
Json element(const FieldElement& a);
Json verdict(const LckVerdict& v);
Json audit(const AuditReport& a);
Json subgroup(const UnitSubgroup& u, const SubgroupReport& r);
Json cases(const SignaturePair& sig, const std::vector<CaseRecord>& c);
// "coeffs_json<TAB>height<TAB>is_root_of_unity"
std::string enumeration_line(const EnumeratedNumber& e);
// Decimal rendering of a height value, exact when possible.
std::string height_decimal(const HeightValue& h, int digits = 30);

}  // namespace lck::report
