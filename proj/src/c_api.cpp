#include "lckcheck/lckcheck.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "lckcheck/parse.hpp"
#include "report.hpp"

using lck::report::Json;

struct lck_context {
  lck::PrecisionContext precision;
  int degree_cap = lck::kDefaultDegreeCap;
  int relative_degree = 0;
  std::string last_error;
};

struct lck_field {
  lck::FieldPtr field;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
lck_status guard(lck_context* ctx, Fn&& fn) {
  if (!ctx) return LCK_INVALID_INPUT;
  ctx->last_error.clear();
  try {
    fn();
    return LCK_OK;
  } catch (const lck::Error& e) {
    ctx->last_error = e.what();
    return static_cast<lck_status>(e.status());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = std::string("malformed JSON: ") + e.what();
    return LCK_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return LCK_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return LCK_INTERNAL_ERROR;
  }
}

void emit(char** out, const Json& j) {
  if (!out) throw lck::InvalidInput("null output pointer");
  *out = dup_string(j.dump());
}

const char* need(const char* s, const char* what) {
  if (!s) throw lck::InvalidInput(std::string("missing ") + what);
  return s;
}

const lck::FieldPtr& need_field(const lck_field* f) {
  if (!f || !f->field) throw lck::InvalidInput("missing field");
  return f->field;
}

lck::FieldElement parse_element(const lck::FieldPtr& k, const char* coeffs) {
  return lck::FieldElement(k, lck::parse_rat_poly(need(coeffs, "element coefficients")));
}

std::vector<lck::FieldElement> parse_gens(const lck::FieldPtr& k, const char* const* gens, size_t n) {
  if (n && !gens) throw lck::InvalidInput("missing generator list");
  std::vector<lck::FieldElement> out;
  for (size_t i = 0; i < n; ++i) out.push_back(parse_element(k, gens[i]));
  return out;
}

mpq_class height_eps(const lck_context* ctx) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(std::max(20, ctx->precision.working_digits / 2)));
  return mpq_class(1, den);
}

// Adds the relative height H^D when requested.
void add_relative(const lck_context* ctx, Json& j, const lck::HeightValue& h) {
  if (ctx->relative_degree <= 0) return;
  const unsigned long d = static_cast<unsigned long>(ctx->relative_degree);
  lck::HeightValue rel = h;
  if (h.exact) {
    mpq_class q = 1;
    for (unsigned long i = 0; i < d; ++i) q *= *h.exact;
    rel = {lck::Interval::from_rational(q, 128), q};
  } else {
    rel = {h.enclosure.pow(d), std::nullopt};
  }
  j["relative_degree"] = ctx->relative_degree;
  j["relative_height"] = lck::report::height(rel);
}

}  // namespace

extern "C" {

lck_context* lck_context_new(void) { return new (std::nothrow) lck_context(); }

void lck_context_free(lck_context* ctx) { delete ctx; }

lck_status lck_context_configure(lck_context* ctx, int precision_digits, int max_digits, int degree_cap) {
  return guard(ctx, [&] {
    lck::PrecisionContext p = ctx->precision;
    p.working_digits = precision_digits;
    p.max_digits = max_digits;
    p.validate();
    if (degree_cap < 1) throw lck::InvalidInput("degree cap must be >= 1");
    ctx->precision = p;
    ctx->degree_cap = degree_cap;
  });
}

lck_status lck_context_set_relative_degree(lck_context* ctx, int degree) {
  return guard(ctx, [&] {
    if (degree < 0) throw lck::InvalidInput("relative degree must be >= 0");
    ctx->relative_degree = degree;
  });
}

const char* lck_last_error(const lck_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* lck_status_name(lck_status status) { return lck::status_name(static_cast<lck::Status>(status)); }

void lck_string_free(char* s) { std::free(s); }

lck_status lck_field_new(lck_context* ctx, const char* poly, lck_field** out) {
  return guard(ctx, [&] {
    if (!out) throw lck::InvalidInput("null output pointer");
    auto k = lck::NumberField::create(lck::parse_int_poly(need(poly, "polynomial")), ctx->precision, ctx->degree_cap);
    *out = new lck_field{std::move(k)};
  });
}

void lck_field_free(lck_field* field) { delete field; }

lck_status lck_field_info(lck_context* ctx, const lck_field* field, char** out) {
  return guard(ctx, [&] { emit(out, lck::report::field_info(*need_field(field))); });
}

lck_status lck_element(lck_context* ctx, const lck_field* field, const char* op, const char* coeffs, char** out) {
  return guard(ctx, [&] {
    const auto& k = need_field(field);
    const std::string o = need(op, "operation");
    auto a = parse_element(k, coeffs);
    Json j{{"element", lck::report::element(a)}};
    if (o == "minpoly") {
      auto m = lck::min_poly(a);
      j["min_poly"] = lck::report::rationals(m.coeffs());
      j["min_poly_text"] = lck::to_string(m);
      j["degree"] = m.degree();
    } else if (o == "norm") {
      auto nt = lck::norm_trace(a);
      j["norm"] = nt.norm.get_str();
      j["trace"] = nt.trace.get_str();
    } else if (o == "integer") {
      j["integer"] = lck::is_algebraic_integer(a);
      j["min_poly"] = lck::report::rationals(lck::min_poly(a).coeffs());
    } else if (o == "unit") {
      j["unit"] = lck::is_unit(a);
      j["norm"] = lck::norm_trace(a).norm.get_str();
    } else {
      throw lck::InvalidInput("unknown element operation: " + o);
    }
    emit(out, j);
  });
}

lck_status lck_unit(lck_context* ctx, const lck_field* field, const char* op, const char* coeffs, const char* alpha,
                    char** out) {
  return guard(ctx, [&] {
    const auto& k = need_field(field);
    const std::string o = need(op, "operation");
    auto u = parse_element(k, coeffs);
    Json j{{"element", lck::report::element(u)}};
    if (o == "logvec") {
      auto l = lck::log_embedding(u);
      Json v = Json::array();
      lck::Interval sum(l.empty() ? 64 : l[0].precision());
      for (const auto& x : l) {
        v.push_back(lck::report::real(x));
        sum = sum + x;
      }
      j["log_embedding"] = v;
      j["sum"] = lck::report::real(sum);
    } else if (o == "equalmod") {
      j["equal_modulus"] = lck::report::decision(lck::is_equal_modulus(u));
    } else if (o == "equalconj") {
      j["equal_conjugates"] = lck::report::decision(lck::is_equal_conjugates(u));
    } else if (o == "totpos") {
      j["totally_positive"] = lck::report::decision(lck::is_totally_positive(u));
    } else if (o == "pointheight") {
      auto r = lck::unit_point_height(u, height_eps(ctx));
      j["ratio_min_poly"] = lck::report::integers(r.ratio_min_poly);
      j["ratio_min_poly_text"] = lck::to_string(r.ratio_min_poly);
      j["height"] = lck::report::height(r.height);
      add_relative(ctx, j, r.height);
    } else if (o == "congruence") {
      auto a = parse_element(k, need(alpha, "congruence modulus"));
      j["modulus"] = lck::report::element(a);
      j["congruent"] = lck::congruence_check(u, a);
    } else {
      throw lck::InvalidInput("unknown unit operation: " + o);
    }
    emit(out, j);
  });
}

lck_status lck_height_algebraic(lck_context* ctx, const char* poly, const char* coeffs, char** out) {
  return guard(ctx, [&] {
    const mpq_class eps = height_eps(ctx);
    const lck::IntPoly f = lck::parse_int_poly(need(poly, "polynomial"));
    Json j;
    lck::HeightValue h;
    lck::IntPoly m;
    if (coeffs) {
      auto k = lck::NumberField::create(f, ctx->precision, ctx->degree_cap);
      auto a = parse_element(k, coeffs);
      j["field"] = lck::to_string(f);
      j["element"] = lck::report::element(a);
      m = a.is_zero() ? lck::IntPoly{0, 1} : lck::min_poly_int(a);
      h = lck::height_algebraic(a, eps);
    } else {
      auto a = lck::AlgebraicNumber::from_poly(f, 0, ctx->precision, ctx->degree_cap);
      m = a.min_poly;
      h = lck::height_algebraic(a, eps, ctx->precision);
    }
    j["min_poly"] = lck::report::integers(m);
    j["min_poly_text"] = lck::to_string(m);
    j["degree"] = m.degree();
    j["height"] = lck::report::height(h);
    j["root_of_unity"] = m == lck::IntPoly{0, 1} ? Json(false) : Json(lck::is_cyclotomic(m));
    add_relative(ctx, j, h);
    emit(out, j);
  });
}

lck_status lck_height_projective(lck_context* ctx, const char* const* coords, size_t n, char** out) {
  return guard(ctx, [&] {
    if (n && !coords) throw lck::InvalidInput("missing coordinates");
    std::vector<std::string> items(coords, coords + n);
    auto q = lck::parse_rational_list(items);
    mpz_class h = lck::projective_height_rational(q);
    Json j{{"height", h.get_str()}};
    if (ctx->relative_degree > 0) {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(ctx->relative_degree));
      j["relative_degree"] = ctx->relative_degree;
      j["relative_height"] = r.get_str();
    }
    emit(out, j);
  });
}

lck_status lck_enumerate(lck_context* ctx, int deg_max, const char* bound, long candidate_cap, char** out) {
  return guard(ctx, [&] {
    if (!out) throw lck::InvalidInput("null output pointer");
    lck::EnumerationOptions opts;
    opts.ctx = ctx->precision;
    if (candidate_cap > 0) opts.candidate_cap = candidate_cap;
    auto list = lck::enumerate_bounded_height(deg_max, lck::parse_rational(need(bound, "height bound")), opts);
    std::string s;
    for (const auto& e : list) s += lck::report::enumeration_line(e) + "\n";
    *out = dup_string(s);
  });
}

lck_status lck_subgroup_analyze(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n,
                                char** out) {
  return guard(ctx, [&] {
    const auto& k = need_field(field);
    lck::UnitSubgroup u(k, parse_gens(k, gens, n));
    emit(out, lck::report::subgroup(u, lck::analyze_subgroup(u)));
  });
}

lck_status lck_subgroup_search(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n, long box,
                               char** out) {
  return guard(ctx, [&] {
    const auto& k = need_field(field);
    lck::UnitSubgroup u(k, parse_gens(k, gens, n));
    Json list = Json::array();
    for (const auto& p : lck::search_equal_modulus_units(u, box))
      list.push_back(Json{{"sign", p.sign}, {"exponents", p.exponents}, {"element", lck::report::element(p.element)}});
    emit(out, Json{{"box", box}, {"count", list.size()}, {"units", list}});
  });
}

lck_status lck_check(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n, char** out) {
  return guard(ctx, [&] {
    const auto& k = need_field(field);
    auto v = lck::lck_admissible(k, parse_gens(k, gens, n));
    Json j = lck::report::verdict(v);
    j["case_analysis"] = lck::report::cases(v.signature, lck::signature_case_analysis(v.signature))["cases"];
    emit(out, j);
  });
}

lck_status lck_audit(lck_context* ctx, const lck_field* field, const char* const* gens, size_t n, char** out) {
  return guard(ctx, [&] {
    const auto& k = need_field(field);
    emit(out, lck::report::audit(lck::main_theorem_audit(k, parse_gens(k, gens, n))));
  });
}

lck_status lck_feasible(lck_context* ctx, long s, long t, char** out) {
  return guard(ctx, [&] {
    auto r = lck::dubickas_feasible({s, t});
    Json j{{"feasible", r.has_value()}};
    if (r) {
      j["m"] = r->m;
      j["q"] = r->q;
    }
    emit(out, j);
  });
}

lck_status lck_cases(lck_context* ctx, long s, long t, char** out) {
  return guard(ctx, [&] { emit(out, lck::report::cases({s, t}, lck::signature_case_analysis({s, t}))); });
}

}  // extern "C"
