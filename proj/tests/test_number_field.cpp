#include <doctest.h>

#include <random>

#include "lckcheck/number_field.hpp"
#include "lckcheck/parse.hpp"

using namespace lck;

namespace {

FieldElement elem(const FieldPtr& k, std::initializer_list<long> c) { return FieldElement(k, to_rat(IntPoly(c))); }

FieldElement elem_q(const FieldPtr& k, std::vector<mpq_class> c) { return FieldElement(k, RatPoly(std::move(c))); }

FieldElement random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  std::vector<mpq_class> c;
  for (int i = 0; i < k->degree(); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return elem_q(k, c);
}

}  // namespace

TEST_CASE("signatures") {
  auto k1 = NumberField::create(IntPoly{-2, 0, 1});
  CHECK(k1->s() == 2);
  CHECK(k1->t() == 0);
  auto k2 = NumberField::create(IntPoly{-1, 0, -2, 0, 1});
  CHECK(k2->s() == 2);
  CHECK(k2->t() == 1);
  auto k3 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  CHECK(k3->s() == 0);
  CHECK(k3->t() == 2);
  auto k4 = NumberField::create(IntPoly{-1, -1, 0, 0, 0, 1});
  CHECK(k4->s() == 1);
  CHECK(k4->t() == 2);
  for (const auto& k : {k1, k2, k3, k4}) {
    CHECK(k->s() + 2 * k->t() == k->degree());
    CHECK(k->embeddings().size() == static_cast<size_t>(k->degree()));
  }
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(NumberField::create(IntPoly{-2, 0, 2}), InvalidInput);
  try {
    NumberField::create(IntPoly{-1, 0, 1});
    FAIL("expected reducible");
  } catch (const ReducibleInput& e) {
    CHECK(e.factor().degree() == 1);
    CHECK(exact_divide(IntPoly{-1, 0, 1}, e.factor()).has_value());
  }
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2): no rational root
  try {
    NumberField::create(IntPoly{4, 0, 0, 0, 1});
    FAIL("expected reducible");
  } catch (const ReducibleInput& e) {
    CHECK(e.factor().degree() == 2);
  }
  CHECK_THROWS_AS(NumberField::create(IntPoly{3}), InvalidInput);
  // x^4 + 1 needs the full factorization path
  auto k = NumberField::create(IntPoly{1, 0, 0, 0, 1});
  CHECK(k->irreducibility_proof() == "full factorization");
}

TEST_CASE("element arithmetic") {
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  auto th = FieldElement::generator(k);
  CHECK(th * th == FieldElement::rational(k, 2));
  CHECK((elem(k, {1, 1}) * elem(k, {-1, 1})) == FieldElement::rational(k, 1));
  CHECK(th.inverse() == elem_q(k, {0, mpq_class(1, 2)}));
  CHECK_THROWS_AS(th / FieldElement::rational(k, 0), InvalidInput);
  auto other = NumberField::create(IntPoly{-3, 0, 1});
  CHECK_THROWS_AS(th + FieldElement::generator(other), InvalidInput);
  CHECK(th.pow(-3) * th.pow(3) == FieldElement::rational(k, 1));
  CHECK(th.pow(4) == FieldElement::rational(k, 4));
}

TEST_CASE("min_poly") {
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  auto th = FieldElement::generator(k);
  CHECK(min_poly(th) == to_rat(IntPoly{-2, 0, 1}));
  CHECK(min_poly(th * th) == to_rat(IntPoly{-2, 1}));
  CHECK(min_poly(elem(k, {1, 1})) == to_rat(IntPoly{-1, -2, 1}));
  CHECK(min_poly(elem_q(k, {0, mpq_class(1, 2)})) == RatPoly(std::vector<mpq_class>{mpq_class(-1, 2), 0, 1}));
}

TEST_CASE("norm and trace") {
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  auto nt = norm_trace(elem(k, {1, 1}));
  CHECK(nt.norm == -1);
  CHECK(nt.trace == 2);
  auto k5 = NumberField::create(IntPoly{1, 1, 1, 1, 1});
  CHECK(norm_trace(FieldElement::rational(k5, 2)).norm == 16);
  auto kc = NumberField::create(IntPoly{-1, -1, 0, 1});
  CHECK(norm_trace(FieldElement::generator(kc)).norm == 1);
}

TEST_CASE("integrality and units") {
  auto k5 = NumberField::create(IntPoly{-5, 0, 1});
  CHECK(is_algebraic_integer(elem_q(k5, {mpq_class(1, 2), mpq_class(1, 2)})));
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  CHECK_FALSE(is_algebraic_integer(elem_q(k, {0, mpq_class(1, 2)})));
  CHECK(is_algebraic_integer(FieldElement::rational(k, -17)));
  CHECK(is_unit(elem(k, {1, 1})));
  CHECK_FALSE(is_unit(FieldElement::rational(k, 2)));
  CHECK_THROWS_AS(is_unit(FieldElement::rational(k, 0)), InvalidInput);
  auto kq = NumberField::create(IntPoly{-1, 0, -2, 0, 1});
  CHECK(is_unit(FieldElement::generator(kq)));
}

TEST_CASE("congruence membership") {
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  auto sqrt2 = FieldElement::generator(k);
  CHECK(congruence_check(elem(k, {3, 2}), sqrt2));
  CHECK(congruence_check(FieldElement::rational(k, 1), elem(k, {5, 3})));
  CHECK_FALSE(congruence_check(elem(k, {1, 1}), FieldElement::rational(k, 2)));
  CHECK_THROWS_AS(congruence_check(elem(k, {1, 1}), FieldElement::rational(k, 0)), InvalidInput);
  CHECK_THROWS_AS(congruence_check(FieldElement::rational(k, 2), sqrt2), InvalidInput);
}

TEST_CASE("algebraic identities on random elements") {
  std::mt19937_64 rng(99);
  const std::vector<IntPoly> fields = {IntPoly{-2, 0, 1}, IntPoly{-1, -1, 0, 1}, IntPoly{-1, 0, -2, 0, 1},
                                       IntPoly{1, 1, 1, 1, 1}, IntPoly{-1, -1, 0, 0, 0, 1}};
  for (const auto& f : fields) {
    auto k = NumberField::create(f);
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_elem(k, rng), b = random_elem(k, rng);
      CHECK(norm_trace(a * b).norm == norm_trace(a).norm * norm_trace(b).norm);
      CHECK(norm_trace(a + b).trace == norm_trace(a).trace + norm_trace(b).trace);
      // min_poly(a)(a) = 0 exactly
      RatPoly m = min_poly(a);
      FieldElement acc = FieldElement::rational(k, 0);
      for (int i = m.degree(); i >= 0; --i) acc = acc * a + FieldElement::rational(k, m[i]);
      CHECK(acc.is_zero());
      CHECK(k->degree() % m.degree() == 0);
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::rational(k, 1));
    }
  }
}

TEST_CASE("min_poly vanishes at every embedding") {
  std::mt19937_64 rng(7);
  for (const auto& f : {IntPoly{-1, 0, -2, 0, 1}, IntPoly{1, 1, 1, 1, 1}, IntPoly{-1, -1, 0, 0, 0, 1}}) {
    auto k = NumberField::create(f);
    for (int trial = 0; trial < 4; ++trial) {
      auto a = random_elem(k, rng);
      RatPoly m = min_poly(a);
      for (const auto& z : embed_all(a, 64)) CHECK(eval_enclosure(m, z).contains_zero());
    }
  }
}

TEST_CASE("unit group closure") {
  auto k = NumberField::create(IntPoly{-1, 0, -2, 0, 1});
  auto th = FieldElement::generator(k);
  auto u = th + FieldElement::rational(k, 1);  // not a unit in general
  auto v = th * th - FieldElement::rational(k, 1);
  CHECK(is_unit(th));
  CHECK(is_unit(th.inverse()));
  CHECK(is_unit(v) == is_unit(v.inverse()));
  CHECK(is_unit(th * v) == is_unit(v));
  (void)u;
}

TEST_CASE("congruence subgroup closure on random pairs") {
  auto k = NumberField::create(IntPoly{-2, 0, 1});
  auto alpha = FieldElement::generator(k);
  auto eps = elem(k, {1, 1});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-6, 6);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto u = eps.pow(e(rng)), v = eps.pow(e(rng));
    if (congruence_check(u, alpha) && congruence_check(v, alpha)) {
      CHECK(congruence_check(u * v, alpha));
      CHECK(congruence_check(u.inverse(), alpha));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("refined embeddings keep the base order") {
  // roots i*phi, i/phi share a real part, so ordering ties are decided by imaginary part
  auto k = NumberField::create(IntPoly{1, 0, 3, 0, 1});
  auto base = k->embeddings();
  auto fine = k->embeddings_at(300);
  REQUIRE(fine.size() == base.size());
  for (size_t i = 0; i < base.size(); ++i) {
    CHECK(fine[i].disk_intersects(base[i]));
    CHECK(fine[i].kind == base[i].kind);
  }
}
