// Command-line front end. Talks to the library only through lckcheck.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "lckcheck/lckcheck.h"

using Json = nlohmann::ordered_json;

namespace {

struct Options {
  int precision = 64;
  int max_digits = 4096;
  int degree_cap = 24;
  int relative_degree = 0;
  std::string output = "json";
};

struct ContextDeleter {
  void operator()(lck_context* c) const { lck_context_free(c); }
};
struct FieldDeleter {
  void operator()(lck_field* f) const { lck_field_free(f); }
};
using ContextPtr = std::unique_ptr<lck_context, ContextDeleter>;
using FieldPtr = std::unique_ptr<lck_field, FieldDeleter>;

// Thrown to abort a command with a status already recorded on the context.
struct Failure {
  lck_status status;
  std::string message;
};

Json error_json(lck_status s, const std::string& msg) {
  return Json{{"error", {{"status", lck_status_name(s)}, {"code", static_cast<int>(s)}, {"message", msg}}}};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

class Runner {
 public:
  explicit Runner(const Options& o) : opts_(o), ctx_(lck_context_new()) {
    if (!ctx_) throw Failure{LCK_INTERNAL_ERROR, "could not allocate context"};
    check(lck_context_configure(ctx_.get(), o.precision, o.max_digits, o.degree_cap));
    check(lck_context_set_relative_degree(ctx_.get(), o.relative_degree));
  }

  lck_context* ctx() { return ctx_.get(); }

  void check(lck_status s) {
    if (s != LCK_OK) throw Failure{s, lck_last_error(ctx_.get())};
  }

  // Takes ownership of a C string returned by the library.
  std::string take(char* s) {
    std::string r(s ? s : "");
    lck_string_free(s);
    return r;
  }

  FieldPtr field(const std::string& poly) {
    lck_field* f = nullptr;
    check(lck_field_new(ctx_.get(), poly.c_str(), &f));
    return FieldPtr(f);
  }

  void print(const std::string& json_text) {
    if (opts_.output == "text") {
      flatten(Json::parse(json_text), "", std::cout);
      std::cout << "\n";
    } else {
      std::cout << json_text << "\n";
    }
  }

  void print_error(const Failure& f) {
    Json e = error_json(f.status, f.message);
    if (opts_.output == "text")
      std::cout << "error: " << lck_status_name(f.status) << ": " << f.message << "\n";
    else
      std::cout << e.dump() << "\n";
  }

 private:
  Options opts_;
  ContextPtr ctx_;
};

// One stdin line to an element argument: {"coeffs": ...}, a bare JSON array,
// a JSON string, or plain polynomial text.
std::string element_from_line(const std::string& line) {
  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded()) return line;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw Failure{LCK_INVALID_INPUT, "stdin object lacks \"coeffs\": " + line};
    j = j["coeffs"];
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return j.dump();
  throw Failure{LCK_INVALID_INPUT, "unrecognised stdin element: " + line};
}

std::vector<std::string> read_stdin_elements() {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(element_from_line(line));
  }
  return out;
}

// "-" anywhere in the list splices in elements read from stdin.
std::vector<std::string> expand(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (a == "-") {
      auto more = read_stdin_elements();
      out.insert(out.end(), more.begin(), more.end());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

Json enumeration_record(const std::string& line) {
  std::istringstream in(line);
  std::string coeffs, height, rou;
  std::getline(in, coeffs, '\t');
  std::getline(in, height, '\t');
  std::getline(in, rou, '\t');
  return Json{{"min_poly", Json::parse(coeffs)}, {"height", height}, {"root_of_unity", rou == "true"}};
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Exact number-field units, heights and OT/LCK admissibility checks", "lckcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", opts.precision, "Working precision in decimal digits")->capture_default_str();
  app.add_option("--max-digits", opts.max_digits, "Precision escalation ceiling in digits")->capture_default_str();
  app.add_option("--degree-cap", opts.degree_cap, "Largest accepted field degree")->capture_default_str();
  app.add_option("--output", opts.output, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--relative-to-degree", opts.relative_degree, "Also report heights raised to this degree");

  // Each command fills `action`, run after parsing once the context exists.
  std::function<int(Runner&)> action;

  std::string poly, coeffs, alpha, op, bound;
  std::vector<std::string> items;
  long s = 0, t = 0, box = 2, cap = 0;
  int deg = 1;

  auto* field_cmd = app.add_subcommand("field", "Number field queries")->require_subcommand(1);
  auto* field_info = field_cmd->add_subcommand("info", "Degree, signature and embeddings of Q[x]/(f)");
  field_info->add_option("poly", poly, "Monic irreducible polynomial")->required();
  field_info->callback([&] {
    action = [&](Runner& r) {
      auto f = r.field(poly);
      char* out = nullptr;
      r.check(lck_field_info(r.ctx(), f.get(), &out));
      r.print(r.take(out));
      return 0;
    };
  });

  // element / unit: one result per element; "-" reads a batch from stdin.
  auto per_element = [&](const std::string& kind) {
    return [&, kind](Runner& r) {
      auto f = r.field(poly);
      int status = 0;
      for (const auto& e : expand({coeffs})) {
        try {
          char* out = nullptr;
          if (kind == "element")
            r.check(lck_element(r.ctx(), f.get(), op.c_str(), e.c_str(), &out));
          else
            r.check(lck_unit(r.ctx(), f.get(), op.c_str(), e.c_str(), alpha.empty() ? nullptr : alpha.c_str(), &out));
          r.print(r.take(out));
        } catch (const Failure& fail) {
          r.print_error(fail);
          if (!status) status = fail.status;
        }
      }
      return status;
    };
  };

  auto* element_cmd = app.add_subcommand("element", "Element queries");
  element_cmd->add_option("op", op, "minpoly | norm | integer | unit")
      ->required()
      ->check(CLI::IsMember({"minpoly", "norm", "integer", "unit"}));
  element_cmd->add_option("poly", poly, "Defining polynomial")->required();
  element_cmd->add_option("coeffs", coeffs, "Element in the generator x, or - for stdin")->required();
  element_cmd->callback([&] { action = per_element("element"); });

  auto* unit_cmd = app.add_subcommand("unit", "Unit queries");
  unit_cmd->add_option("op", op, "logvec | equalmod | equalconj | totpos | pointheight | congruence")
      ->required()
      ->check(CLI::IsMember({"logvec", "equalmod", "equalconj", "totpos", "pointheight", "congruence"}));
  unit_cmd->add_option("poly", poly, "Defining polynomial")->required();
  unit_cmd->add_option("coeffs", coeffs, "Unit in the generator x, or - for stdin")->required();
  unit_cmd->add_option("alpha", alpha, "Congruence modulus (congruence only)");
  unit_cmd->callback([&] {
    if (op == "congruence" && alpha.empty()) throw CLI::ValidationError("alpha", "congruence needs a modulus");
    action = per_element("unit");
  });

  auto* height_cmd = app.add_subcommand("height", "Absolute Weil heights")->require_subcommand(1);
  auto* height_alg = height_cmd->add_subcommand("algebraic", "Height of a root of f, or of an element of Q[x]/(f)");
  height_alg->add_option("poly", poly, "Irreducible polynomial")->required();
  height_alg->add_option("coeffs", coeffs, "Optional element in the generator x");
  height_alg->callback([&] {
    action = [&](Runner& r) {
      char* out = nullptr;
      r.check(lck_height_algebraic(r.ctx(), poly.c_str(), coeffs.empty() ? nullptr : coeffs.c_str(), &out));
      r.print(r.take(out));
      return 0;
    };
  });
  auto* height_proj = height_cmd->add_subcommand("projective", "Height of a rational projective point");
  height_proj->add_option("coords", items, "Rational coordinates")->required();
  height_proj->callback([&] {
    action = [&](Runner& r) {
      auto c = c_strings(items);
      char* out = nullptr;
      r.check(lck_height_projective(r.ctx(), c.data(), c.size(), &out));
      r.print(r.take(out));
      return 0;
    };
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "All algebraic numbers of degree <= D and height <= H");
  enum_cmd->add_option("--deg", deg, "Maximum degree (1..6)")->required();
  enum_cmd->add_option("--bound", bound, "Height bound, rational >= 1")->required();
  enum_cmd->add_option("--cap", cap, "Candidate budget (0 = library default)");
  enum_cmd->callback([&] {
    action = [&](Runner& r) {
      char* out = nullptr;
      r.check(lck_enumerate(r.ctx(), deg, bound.c_str(), cap, &out));
      std::istringstream lines(r.take(out));
      std::string line;
      while (std::getline(lines, line)) {
        if (opts.output == "text")
          std::cout << line << "\n";
        else
          std::cout << enumeration_record(line).dump() << "\n";
      }
      return 0;
    };
  });

  // Commands over a field and a generator list.
  using GenFn = lck_status (*)(lck_context*, const lck_field*, const char* const*, size_t, char**);
  auto with_gens = [&](GenFn fn) {
    return [&, fn](Runner& r) {
      auto f = r.field(poly);
      auto gens = expand(items);
      auto c = c_strings(gens);
      char* out = nullptr;
      r.check(fn(r.ctx(), f.get(), c.data(), c.size(), &out));
      r.print(r.take(out));
      return 0;
    };
  };

  auto* sub_cmd = app.add_subcommand("subgroup", "Unit subgroup analysis")->require_subcommand(1);
  auto* sub_an = sub_cmd->add_subcommand("analyze", "Rank and per-generator decisions");
  sub_an->add_option("poly", poly, "Defining polynomial")->required();
  sub_an->add_option("gens", items, "Generators, or - for stdin");
  sub_an->callback([&] {
    action = with_gens(&lck_subgroup_analyze);
  });
  auto* sub_search = sub_cmd->add_subcommand("search", "Equal-modulus units +-prod g_i^e_i with |e_i| <= box");
  sub_search->add_option("poly", poly, "Defining polynomial")->required();
  sub_search->add_option("gens", items, "Generators, or - for stdin");
  sub_search->add_option("--box", box, "Exponent bound")->capture_default_str();
  sub_search->callback([&] {
    action = [&](Runner& r) {
      auto f = r.field(poly);
      auto gens = expand(items);
      auto c = c_strings(gens);
      char* out = nullptr;
      r.check(lck_subgroup_search(r.ctx(), f.get(), c.data(), c.size(), box, &out));
      r.print(r.take(out));
      return 0;
    };
  });

  auto* lck_cmd = app.add_subcommand("lck", "OT/LCK admissibility")->require_subcommand(1);
  auto* lck_chk = lck_cmd->add_subcommand("check", "Verdict with reasons and certificates");
  lck_chk->add_option("poly", poly, "Defining polynomial")->required();
  lck_chk->add_option("gens", items, "Generators, or - for stdin");
  lck_chk->callback([&] {
    action = with_gens(&lck_check);
  });

  auto* audit_cmd = app.add_subcommand("audit", "Verdict cross-checked against the signature case analysis");
  audit_cmd->add_option("poly", poly, "Defining polynomial")->required();
  audit_cmd->add_option("gens", items, "Generators, or - for stdin");
  audit_cmd->callback([&] {
    action = with_gens(&lck_audit);
  });

  using SigFn = lck_status (*)(lck_context*, long, long, char**);
  auto with_sig = [&](SigFn fn) {
    return [&, fn](Runner& r) {
      char* out = nullptr;
      r.check(fn(r.ctx(), s, t, &out));
      r.print(r.take(out));
      return 0;
    };
  };
  auto* feas_cmd = app.add_subcommand("feasible", "Smallest m >= 0 with s = (2t + 2m)q - 2t, q >= 2");
  feas_cmd->add_option("s", s)->required();
  feas_cmd->add_option("t", t)->required();
  feas_cmd->callback([&] { action = with_sig(&lck_feasible); });
  auto* cases_cmd = app.add_subcommand("cases", "Signature case analysis");
  cases_cmd->add_option("s", s)->required();
  cases_cmd->add_option("t", t)->required();
  cases_cmd->callback([&] { action = with_sig(&lck_cases); });

  // CLI11 splits "[a,b]" into two values for vector options; a trailing space
  // keeps JSON coefficient arrays intact (the library ignores whitespace).
  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) {
    std::string a = argv[i];
    if (a.size() > 1 && a.front() == '[' && a.back() == ']') a += ' ';
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json(LCK_INVALID_INPUT, e.what()).dump() << "\n";
    return LCK_INVALID_INPUT;
  }

  std::unique_ptr<Runner> runner;
  try {
    runner = std::make_unique<Runner>(opts);
    return action(*runner);
  } catch (const Failure& f) {
    if (runner)
      runner->print_error(f);
    else
      std::cout << error_json(f.status, f.message).dump() << "\n";
    return f.status;
  } catch (const std::exception& e) {
    std::cout << error_json(LCK_INTERNAL_ERROR, e.what()).dump() << "\n";
    return LCK_INTERNAL_ERROR;
  }
}
