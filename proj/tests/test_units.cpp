#include <doctest.h>

#include <random>

#include "lckcheck/units.hpp"
#include "oracles.hpp"

using namespace lck;

namespace {

FieldElement elem(const FieldPtr& k, std::initializer_list<long> c) { return FieldElement(k, to_rat(IntPoly(c))); }

double mid(const Interval& v) { return v.mid().to_double(); }


}  // namespace

TEST_CASE("log embedding fixtures") {
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  auto l = log_embedding(elem(k, {1, 1}));
  REQUIRE(l.size() == 2);
  // sigma_1 = 1 - sqrt 2 (ascending order), sigma_2 = 1 + sqrt 2
  CHECK(mid(l[1]) == doctest::Approx(0.881373587019543).epsilon(1e-14));
  CHECK(mid(l[0]) == doctest::Approx(-0.881373587019543).epsilon(1e-14));

  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  for (const auto& v : log_embedding(FieldElement::generator(z5))) CHECK(v.contains_zero());

  auto kc = NumberField::create(IntPoly{-1, -1, 0, 1});
  auto lr = log_embedding(FieldElement::generator(kc));
  REQUIRE(lr.size() == 2);
  CHECK(mid(lr[0]) == doctest::Approx(0.2811995743).epsilon(1e-9));
  CHECK(mid(lr[1]) == doctest::Approx(2 * std::log(0.8688369618)).epsilon(1e-9));
  CHECK_THROWS_AS(log_embedding(FieldElement::rational(k, 2)), InvalidInput);
  CHECK_THROWS_AS(log_embedding(FieldElement::rational(k, 0)), InvalidInput);
}

TEST_CASE("product formula on units") {
  auto kc = NumberField::create(IntPoly{-1, -1, 0, 1});
  auto kq = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  auto k2 = NumberField::create(IntPoly{-2, 0, 1});
  std::vector<FieldElement> units = {elem(k2, {1, 1}), FieldElement::generator(kc), FieldElement::generator(kq)};
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> e(-7, 7);
  for (int i = 0; i < 20; ++i) units.push_back(units[static_cast<size_t>(i % 3)].pow(e(rng)));
  Float tol(bits_for_digits(64));
  mpfr_set_str(tol.get(), "1e-50", 10, MPFR_RNDN);
  for (const auto& u : units) {
    auto l = log_embedding(u, 64);
    Interval sum(l[0].precision());
    for (const auto& v : l) sum = sum + v;
    CHECK(sum.contains_zero());
    CHECK(mpfr_less_p(sum.mag().get(), tol.get()));
  }
}

TEST_CASE("rank") {
  auto k2 = NumberField::create(IntPoly{-2, 0, 1});
  auto eps = elem(k2, {1, 1});
  auto r1 = rank(UnitSubgroup(k2, {eps}));
  CHECK(r1.certified == 1);
  CHECK(r1.estimate == 1);
  auto r2 = rank(UnitSubgroup(k2, {eps, eps.pow(2)}));
  CHECK(r2.certified == 1);
  CHECK(r2.estimate == 1);
  auto r0 = rank(UnitSubgroup(k2, {}));
  CHECK(r0.certified == 0);
  CHECK(r0.estimate == 0);
  CHECK_THROWS_AS(UnitSubgroup(k2, {FieldElement::rational(k2, 2)}), InvalidInput);
}

TEST_CASE("rank is invariant under unimodular exponent changes") {
  // x^4 - 2x^2 - 1 has unit rank 2
  auto k = NumberField::create(IntPoly{-1, 0, -2, 0, 1});
  auto a = FieldElement::generator(k);
  auto d = elem(k, {-1, -1, -2, -1});
  REQUIRE(is_unit(d));
  CHECK(rank(UnitSubgroup(k, {a, a * a * a})).estimate == 1);
  auto r2 = rank(UnitSubgroup(k, {a, d}));
  CHECK(r2.certified == 2);
  // exponent matrix [[1,1],[2,3]] has determinant 1
  auto r3 = rank(UnitSubgroup(k, {a * d, a.pow(2) * d.pow(3)}));
  CHECK(r3.estimate == r2.estimate);
  CHECK(r3.certified == r2.certified);
  // [[1,0],[1,1]]
  auto r4 = rank(UnitSubgroup(k, {a, a * d}));
  CHECK(r4.certified == 2);
}

TEST_CASE("equal modulus fixtures") {
  auto kq = NumberField::create(IntPoly{-1, 0, -2, 0, 1});
  CHECK(is_equal_modulus(FieldElement::generator(kq)).value);
  CHECK(is_equal_modulus(FieldElement::generator(kq)).certificate.method == "vacuous");

  auto k5 = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  auto d = is_equal_modulus(FieldElement::generator(k5));
  CHECK_FALSE(d.value);
  CHECK(std::stod(d.certificate.margin) >= 0.2);

  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  auto zeta = FieldElement::generator(z5);
  CHECK(is_equal_modulus(zeta).value);
  CHECK(is_equal_modulus(zeta).certificate.separation.has_value());
  // golden unit 1 + zeta + zeta^4
  auto phi = elem(z5, {1, 1, 0, 0, 1});
  CHECK(min_poly(phi) == to_rat(IntPoly{-1, -1, 1}));
  CHECK_FALSE(is_equal_modulus(phi).value);
}

TEST_CASE("equal conjugates fixtures") {
  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  CHECK(is_equal_conjugates(FieldElement::rational(z5, 3)).value);
  CHECK_FALSE(is_equal_conjugates(FieldElement::generator(z5)).value);
  auto k5 = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  CHECK_FALSE(is_equal_conjugates(FieldElement::generator(k5)).value);
}

TEST_CASE("total positivity fixtures") {
  auto k2 = NumberField::create(IntPoly{-2, 0, 1});
  CHECK(is_totally_positive(elem(k2, {3, 2})).value);
  CHECK_FALSE(is_totally_positive(elem(k2, {1, 1})).value);
  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  CHECK(is_totally_positive(FieldElement::generator(z5)).value);
  CHECK_THROWS_AS(is_totally_positive(FieldElement::rational(k2, 0)), InvalidInput);
}

TEST_CASE("subgroup analysis") {
  auto kc = NumberField::create(IntPoly{-1, -1, 0, 1});
  auto rep = analyze_subgroup(UnitSubgroup(kc, {FieldElement::generator(kc)}));
  CHECK(rep.rank.certified == 1);
  CHECK(rep.rank_equals_s);
  CHECK(rep.generators[0].totally_positive.value);
  CHECK(rep.generators[0].equal_modulus.value);
  CHECK(rep.generators[0].equal_conjugates.value);

  auto k5 = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  auto rep5 = analyze_subgroup(UnitSubgroup(k5, {FieldElement::generator(k5)}));
  CHECK(rep5.rank.certified == 1);
  CHECK(rep5.rank_equals_s);
  CHECK_FALSE(rep5.generators[0].equal_modulus.value);

  auto rep0 = analyze_subgroup(UnitSubgroup(k5, {}));
  CHECK(rep0.rank.certified == 0);
}

TEST_CASE("decisions agree with a 200-digit naive oracle") {
  std::vector<FieldElement> corpus;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-3, 3), e(-4, 4);
  const std::vector<IntPoly> fields = {IntPoly{-1, 0, -2, 0, 1}, IntPoly{-1, -1, 0, 1},    IntPoly{-1, -1, 0, 0, 0, 1},
                                       IntPoly{1, 1, 1, 1, 1},   IntPoly{1, 0, 3, 0, 1},   IntPoly{-2, 0, 1},
                                       IntPoly{1, 1, 1, 1, 1, 1, 1}};
  for (const auto& f : fields) {
    auto k = NumberField::create(f);
    auto th = FieldElement::generator(k);
    corpus.push_back(th);
    corpus.push_back(th * th);
    corpus.push_back(th.pow(e(rng)) * th.pow(2));
    for (int i = 0; i < 5; ++i) {
      std::vector<mpq_class> v;
      for (int j = 0; j < k->degree(); ++j) v.emplace_back(c(rng));
      FieldElement a(k, RatPoly(v));
      if (!a.is_zero()) corpus.push_back(a);
    }
  }
  REQUIRE(corpus.size() >= 50);
  for (const auto& u : corpus) {
    oracle::Naive n = oracle::naive(u);
    CHECK(is_equal_modulus(u).value == n.equal_modulus);
    CHECK(is_equal_conjugates(u).value == n.equal_conjugates);
    CHECK(is_totally_positive(u).value == n.totally_positive);
  }
}

TEST_CASE("decision properties") {
  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  auto k = NumberField::create(IntPoly{1, 0, 3, 0, 1});
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> e(-3, 3);
  for (const auto& field : {z5, k}) {
    auto th = FieldElement::generator(field);
    std::vector<FieldElement> sample = {th, th * th, th.pow(3), th + FieldElement::rational(field, 1),
                                        FieldElement::rational(field, -2)};
    for (const auto& u : sample) {
      if (is_equal_conjugates(u).value) CHECK(is_equal_modulus(u).value);
      for (const auto& v : sample)
        if (is_equal_modulus(u).value && is_equal_modulus(v).value) CHECK(is_equal_modulus(u * v).value);
    }
  }
  // theta^2 in x^4 + 3x^2 + 1 is real under both complex pairs
  auto sq = FieldElement::generator(k) * FieldElement::generator(k);
  CHECK_FALSE(is_equal_modulus(sq).value);
  auto rel = sq + sq.inverse();  // -phi^2 - 1/phi^2 = -3
  CHECK(rel == FieldElement::rational(k, -3));
  CHECK(is_equal_modulus(rel).value);
}
