#include "lckcheck/parse.hpp"

#include <cctype>
#include <json.hpp>

#include "lckcheck/errors.hpp"

namespace lck {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class TextParser {
 public:
  explicit TextParser(std::string_view text) : s_(text) {}

  RatPoly parse() {
    std::vector<mpq_class> c;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      auto [coef, deg] = term();
      if (c.size() <= deg) c.resize(deg + 1, mpq_class(0));
      c[deg] += sign * coef;
      first = false;
      skip_ws();
    }
    for (auto& v : c) v.canonicalize();
    return RatPoly(std::move(c));
  }

 private:
  std::pair<mpq_class, size_t> term() {
    mpq_class coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        mpq_class den = number();
        if (den == 0) fail("zero denominator");
        coef /= den;
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_coef) fail("expected a coefficient or 'x'");
      return {coef, 0};
    }
    ++pos_;
    skip_ws();
    size_t deg = 1;
    if (peek() == '^' || (peek() == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
      pos_ += (peek() == '^') ? 1 : 2;
      skip_ws();
      mpq_class e = number();
      if (e > 4096) fail("exponent too large");
      deg = e.get_num().get_ui();
    }
    return {coef, deg};
  }

  mpq_class number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start))));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                       std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

mpq_class rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return mpq_class(mpz_class(v.dump()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidInput("coefficient must be an integer or a rational string: " + v.dump());
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string t = trim(text);
  std::string_view body = t;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw InvalidInput("not a rational number: '" + t + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidInput("zero denominator in '" + t + "'");
  mpq_class q(neg ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

RatPoly parse_rat_poly(std::string_view text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed coefficient array: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("coefficient list must be a JSON array");
    std::vector<mpq_class> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return RatPoly(std::move(c));
  }
  return TextParser(t).parse();
}

IntPoly parse_int_poly(std::string_view text) {
  RatPoly r = parse_rat_poly(text);
  std::vector<mpz_class> c;
  for (const auto& v : r.coeffs()) {
    if (v.get_den() != 1) throw InvalidInput("expected integer coefficients in '" + std::string(text) + "'");
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

std::vector<mpq_class> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<mpq_class> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

}  // namespace lck
