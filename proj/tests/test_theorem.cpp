#include <doctest.h>

#include <chrono>
#include <random>

#include "lckcheck/theorem.hpp"
#include "oracles.hpp"

using namespace lck;

TEST_CASE("Dubickas fixtures") {
  auto a = dubickas_feasible({2, 1});
  REQUIRE(a.has_value());
  CHECK(a->m == 0);
  CHECK(a->q == 2);
  CHECK_FALSE(dubickas_feasible({3, 2}).has_value());
  CHECK_FALSE(dubickas_feasible({2, 2}).has_value());
  CHECK_THROWS_AS(dubickas_feasible({0, 1}), InvalidInput);
}

TEST_CASE("Dubickas relation matches brute force") {
  for (long s = 1; s <= 50; ++s)
    for (long t = 1; t <= 50; ++t) {
      auto got = dubickas_feasible({s, t});
      auto want = oracle::brute_dubickas(s, t);
      REQUIRE(got.has_value() == want.has_value());
      if (got) {
        CHECK(got->m == want->m);
        CHECK(got->q == want->q);
      }
    }
}

TEST_CASE("case analysis fixtures") {
  CHECK(signature_case_analysis({2, 2}).empty());
  CHECK(signature_case_analysis({1, 2}).empty());
  auto c = signature_case_analysis({2, 1});
  CHECK(std::find(c.begin(), c.end(), CaseRecord{2, 1, 1}) != c.end());
}

TEST_CASE("case analysis is empty for t >= 2 and matches brute force") {
  auto t0 = std::chrono::steady_clock::now();
  for (long s = 1; s <= 100; ++s)
    for (long t = 2; t <= 100; ++t) CHECK(signature_case_analysis({s, t}).empty());
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0);
  for (long s = 1; s <= 30; ++s)
    for (long t = 1; t <= 30; ++t) CHECK(signature_case_analysis({s, t}) == oracle::brute_cases(s, t));
}

TEST_CASE("lck verdicts") {
  auto kc = NumberField::create(IntPoly{-1, -1, 0, 1});
  auto v = lck_admissible(kc, {FieldElement::generator(kc)});
  CHECK(v.lck);
  CHECK(v.reasons.empty());

  auto k5 = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  auto v5 = lck_admissible(k5, {FieldElement::generator(k5)});
  CHECK_FALSE(v5.lck);
  REQUIRE(v5.reasons.size() == 1);
  CHECK(v5.reasons[0].code == "equal_modulus");
  CHECK(v5.rank_equals_s);

  auto v0 = lck_admissible(kc, {});
  CHECK_FALSE(v0.lck);
  REQUIRE(v0.reasons.size() == 1);
  CHECK(v0.reasons[0].code == "rank");

  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(lck_admissible(z5, {FieldElement::generator(z5)}), InvalidInput);
}

TEST_CASE("removing a generator never fixes a rank failure") {
  auto k = NumberField::create(IntPoly{-1, 0, -2, 0, 1});
  auto a = FieldElement::generator(k);
  auto b = FieldElement(k, to_rat(IntPoly{-1, -1, -2, -1}));
  auto full = lck_admissible(k, {a, b});
  for (size_t drop = 0; drop < 2; ++drop) {
    std::vector<FieldElement> fewer = {drop == 0 ? b : a};
    auto v = lck_admissible(k, fewer);
    if (!full.rank_equals_s && !full.lck) CHECK_FALSE(v.lck);
  }
}

TEST_CASE("audits") {
  auto kc = NumberField::create(IntPoly{-1, -1, 0, 1});
  auto a1 = main_theorem_audit(kc, {FieldElement::generator(kc)});
  CHECK(a1.consistent);
  CHECK(a1.verdict.lck);

  auto k5 = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  auto a2 = main_theorem_audit(k5, {FieldElement::generator(k5)});
  CHECK(a2.consistent);
  CHECK(a2.equal_modulus_violations == std::vector<size_t>{0});
  CHECK(a2.case_analysis.empty());
  REQUIRE(a2.point_heights.size() == 1);

  auto z5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  auto a3 = main_theorem_audit(z5, {FieldElement::generator(z5)});
  CHECK(a3.consistent);
  CHECK_FALSE(a3.verdict.lck);
  CHECK(a3.verdict.rank.certified == 0);
  REQUIRE(a3.point_heights.size() == 1);
  REQUIRE(a3.point_heights[0].height.has_value());
  CHECK(a3.point_heights[0].height->height.exact.has_value());
}

TEST_CASE("randomized audits never find lck with t >= 2") {
  const std::vector<IntPoly> fields = {IntPoly{-1, -1, 0, 1},          IntPoly{-1, -1, 0, 0, 0, 1},
                                       IntPoly{-1, 0, -2, 0, 1},       IntPoly{1, 1, 1, 1, 1},
                                       IntPoly{1, 0, 3, 0, 1},         IntPoly{-1, 1, 0, 0, 1}};
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> e(-3, 3), count(0, 3);
  int runs = 0;
  for (const auto& f : fields) {
    auto k = NumberField::create(f);
    auto th = FieldElement::generator(k);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<FieldElement> gens;
      const long n = count(rng);
      for (long i = 0; i < n; ++i) {
        auto g = th.pow(e(rng)) * (th + FieldElement::rational(k, 1)).pow(e(rng) % 2);
        gens.push_back(g);
      }
      auto a = main_theorem_audit(k, gens);
      CHECK(a.consistent);
      if (a.verdict.lck) CHECK(k->t() == 1);
      ++runs;
    }
  }
  CHECK(runs == 30);
}
