#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "lckcheck/errors.hpp"
#include "lckcheck/interval.hpp"
#include "lckcheck/roots.hpp"

using namespace lck;

namespace {

constexpr mpfr_prec_t kOracleBits = 512;

Float mp(double v) {
  Float f(kOracleBits);
  mpfr_set_d(f.get(), v, MPFR_RNDN);
  return f;
}

// |box center - (re + i im)| <= radius, checked in high precision
bool box_contains(const RootBox& b, const Float& re, const Float& im) {
  Float dr(kOracleBits), di(kOracleBits), d(kOracleBits);
  mpfr_sub(dr.get(), b.center_re.get(), re.get(), MPFR_RNDN);
  mpfr_sub(di.get(), b.center_im.get(), im.get(), MPFR_RNDN);
  mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDN);
  // oracle values carry their own rounding error
  Float slack(kOracleBits);
  mpfr_set_ui_2exp(slack.get(), 1, -480, MPFR_RNDN);
  mpfr_add(slack.get(), slack.get(), b.radius.get(), MPFR_RNDU);
  return mpfr_lessequal_p(d.get(), slack.get());
}

bool any_contains(const std::vector<RootBox>& boxes, const Float& re, const Float& im) {
  return std::count_if(boxes.begin(), boxes.end(), [&](const RootBox& b) { return box_contains(b, re, im); }) == 1;
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact results") {
  const mpfr_prec_t p = 64;
  Interval third = Interval::from_rational(mpq_class(1, 3), p);
  CHECK(mpfr_less_p(third.lo().get(), third.hi().get()));
  Interval one = third + third + third;
  CHECK(one.contains(Interval::from_rational(1, p)));
  Interval two = Interval::from_rational(2, p);
  Interval s = two.sqrt();
  CHECK(s.sqr().contains(two));
  CHECK((two / Interval::from_rational(3, p)).overlaps(Interval::from_rational(mpq_class(2, 3), 200)));
  CHECK_THROWS_AS(two / Interval(p), Error);
  Interval mixed(mp(-1.0), mp(2.0));
  CHECK(mixed.sqr().lo().sign() == 0);
  CHECK(mixed.abs().lo().sign() == 0);
  CHECK(mpfr_cmp_ui(mixed.mag().get(), 2) == 0);
  CHECK(Interval::from_rational(mpq_class(1, 2), p).max_with_one().lo().to_double() == 1.0);
  CHECK(Interval::from_rational(8, p).root(3).contains(Interval::from_rational(2, p)));
}

TEST_CASE("complex interval arithmetic") {
  const mpfr_prec_t p = 80;
  ComplexInterval i{Interval(p), Interval::from_rational(1, p)};
  ComplexInterval m1 = i * i;
  CHECK(m1.re.contains(Interval::from_rational(-1, p)));
  CHECK(m1.im.contains_zero());
  ComplexInterval q = ComplexInterval::from_rational(1, p) / i;
  CHECK(q.im.contains(Interval::from_rational(-1, p)));
  CHECK(i.abs().contains(Interval::from_rational(1, p)));
}

TEST_CASE("separation bound fixtures") {
  CHECK_FALSE(root_separation_bound(IntPoly{-3, 1}).has_value());
  auto b = root_separation_bound(IntPoly{-2, 0, 1});
  REQUIRE(b.has_value());
  // true separation is 2 sqrt 2
  CHECK(*b > 0);
  CHECK(*b <= mpq_class(2828, 1000));
  CHECK_THROWS_AS(root_separation_bound(IntPoly{1, -2, 1}), InvalidInput);
}

TEST_CASE("isolate x^4 - 2x^2 - 1 against closed forms") {
  IntPoly f{-1, 0, -2, 0, 1};
  auto boxes = isolate_roots(f, PrecisionContext{});
  REQUIRE(boxes.size() == 4);
  CHECK(boxes[0].kind == RootKind::kReal);
  CHECK(boxes[1].kind == RootKind::kReal);
  CHECK(boxes[2].kind == RootKind::kComplexUpper);
  CHECK(boxes[3].kind == RootKind::kComplexLower);
  CHECK(boxes[2].pair_id == 3u);
  CHECK(boxes[3].pair_id == 2u);
  CHECK(boxes[0].center_re.sign() < 0);

  Float s2(kOracleBits), a(kOracleBits), b(kOracleBits), zero(kOracleBits), neg(kOracleBits);
  mpfr_sqrt_ui(s2.get(), 2, MPFR_RNDN);
  mpfr_add_ui(a.get(), s2.get(), 1, MPFR_RNDN);
  mpfr_sqrt(a.get(), a.get(), MPFR_RNDN);  // sqrt(1 + sqrt 2)
  mpfr_sub_ui(b.get(), s2.get(), 1, MPFR_RNDN);
  mpfr_sqrt(b.get(), b.get(), MPFR_RNDN);  // sqrt(sqrt 2 - 1)
  CHECK(box_contains(boxes[1], a, zero));
  mpfr_neg(neg.get(), a.get(), MPFR_RNDN);
  CHECK(box_contains(boxes[0], neg, zero));
  CHECK(box_contains(boxes[2], zero, b));
  mpfr_neg(neg.get(), b.get(), MPFR_RNDN);
  CHECK(box_contains(boxes[3], zero, neg));

  for (size_t i = 0; i < boxes.size(); ++i)
    for (size_t j = i + 1; j < boxes.size(); ++j) CHECK_FALSE(boxes[i].disk_intersects(boxes[j]));
  // real root count matches Sturm
  CHECK(real_root_count(f) == 2);
}

TEST_CASE("cyclotomic roots are enclosed") {
  for (int n : {5, 7, 9, 12}) {
    // x^n - 1 has all roots of unity of order dividing n
    std::vector<mpz_class> c(static_cast<size_t>(n + 1), 0);
    c[0] = -1;
    c.back() = 1;
    IntPoly f(c);
    auto boxes = isolate_roots(f, PrecisionContext{});
    REQUIRE(boxes.size() == static_cast<size_t>(n));
    Float pi(kOracleBits), ang(kOracleBits), re(kOracleBits), im(kOracleBits);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int k = 0; k < n; ++k) {
      mpfr_mul_si(ang.get(), pi.get(), 2 * k, MPFR_RNDN);
      mpfr_div_si(ang.get(), ang.get(), n, MPFR_RNDN);
      mpfr_sin_cos(im.get(), re.get(), ang.get(), MPFR_RNDN);
      INFO("n=" << n << " k=" << k);
      CHECK(any_contains(boxes, re, im));
    }
  }
}

TEST_CASE("isolation ordering and conjugate symmetry on random squarefree inputs") {
  const std::vector<IntPoly> inputs = {IntPoly{-1, -1, 0, 1}, IntPoly{1, 1, 1, 1, 1}, IntPoly{3, -1, 0, 2, 0, 1},
                                       IntPoly{-5, 0, 0, 0, 0, 0, 1}, IntPoly{1, -3, 0, 1},
                                       IntPoly{1, 0, -10, 0, 1}};
  for (const auto& f : inputs) {
    auto boxes = isolate_roots(f, PrecisionContext{});
    REQUIRE(boxes.size() == static_cast<size_t>(f.degree()));
    const size_t r = static_cast<size_t>(real_root_count(f));
    for (size_t i = 0; i < r; ++i) {
      CHECK(boxes[i].kind == RootKind::kReal);
      CHECK(boxes[i].center_im.sign() == 0);
      if (i > 0) { CHECK(mpfr_less_p(boxes[i - 1].center_re.get(), boxes[i].center_re.get()) != 0); }
    }
    const size_t pairs = (boxes.size() - r) / 2;
    for (size_t k = 0; k < pairs; ++k) {
      const RootBox& up = boxes[r + k];
      const RootBox& lo = boxes[r + pairs + k];
      CHECK(up.kind == RootKind::kComplexUpper);
      CHECK(lo.kind == RootKind::kComplexLower);
      CHECK(mpfr_equal_p(up.center_re.get(), lo.center_re.get()));
      Float neg(up.center_im);
      mpfr_neg(neg.get(), neg.get(), MPFR_RNDN);
      CHECK(mpfr_equal_p(neg.get(), lo.center_im.get()));
    }
    // residual at each center is tiny relative to coefficient size
    for (const auto& b : boxes) CHECK(eval_enclosure(to_rat(f), b.enclosure()).contains_zero());
  }
}

TEST_CASE("refine keeps the same root") {
  IntPoly f{-2, 0, 1};
  PrecisionContext ctx;
  auto boxes = isolate_roots(f, ctx);
  mpq_class eps(1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 150);
  eps /= den;
  RootBox r = refine_root(f, boxes[1], eps, ctx);
  CHECK(mpfr_cmp_q(r.radius.get(), eps.get_mpq_t()) <= 0);
  CHECK((r.disk_inside(boxes[1]) || r.disk_intersects(boxes[1])));
  Float s2(600);
  mpfr_sqrt_ui(s2.get(), 2, MPFR_RNDN);
  Float d(600);
  mpfr_sub(d.get(), r.center_re.get(), s2.get(), MPFR_RNDN);
  mpfr_abs(d.get(), d.get(), MPFR_RNDN);
  CHECK(mpfr_cmp_q(d.get(), eps.get_mpq_t()) <= 0);
}

TEST_CASE("certified sign") {
  IntPoly f{-2, 0, 1};
  auto boxes = isolate_roots(f, PrecisionContext{});
  // sqrt 2 - 1.4142 > 0 and sqrt 2 - 1.4143 < 0
  CHECK(certified_sign(f, boxes[1], RatPoly{std::vector<mpq_class>{mpq_class(-14142, 10000), 1}}, PrecisionContext{}) == 1);
  CHECK(certified_sign(f, boxes[1], RatPoly{std::vector<mpq_class>{mpq_class(-14143, 10000), 1}}, PrecisionContext{}) == -1);
  CHECK(certified_sign(f, boxes[0], RatPoly{std::vector<mpq_class>{0, 1}}, PrecisionContext{}) == -1);
}

TEST_CASE("precision context validation and limits") {
  PrecisionContext bad;
  bad.working_digits = 10;
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  CHECK_THROWS_AS(isolate_roots(IntPoly{1, -2, 1}, PrecisionContext{}), InvalidInput);
  CHECK(isolate_roots(IntPoly{5}, PrecisionContext{}).empty());
  // (100x - 1)^2 x^20 - 2 has a close root pair near 1/100
  IntPoly m = pow(IntPoly{-1, 100}, 2) * IntPoly{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
  m -= IntPoly::constant(2);
  m = squarefree_part(m);
  auto res = isolate_roots(m, PrecisionContext{});
  CHECK(res.size() == static_cast<size_t>(m.degree()));
}
