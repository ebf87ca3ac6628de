#include <doctest.h>

#include <random>

#include "lckcheck/errors.hpp"
#include "lckcheck/parse.hpp"
#include "lckcheck/poly.hpp"
#include "oracles.hpp"

using namespace lck;

TEST_CASE("parse text and json forms") {
  CHECK(parse_int_poly("x^4 - 2x^2 - 1") == IntPoly{-1, 0, -2, 0, 1});
  CHECK(parse_int_poly("[-1, 0, -2, 0, 1]") == IntPoly{-1, 0, -2, 0, 1});
  CHECK(parse_int_poly("-x + 3*x^2 - 7") == IntPoly{-7, -1, 3});
  CHECK(parse_int_poly("x**3 - x - 1") == IntPoly{-1, -1, 0, 1});
  RatPoly r = parse_rat_poly("1/2*x^2 + 3/4");
  CHECK(r[2] == mpq_class(1, 2));
  CHECK(r[0] == mpq_class(3, 4));
  CHECK(parse_rat_poly("[\"1/2\", 0, 1]")[0] == mpq_class(1, 2));
  CHECK_THROWS_AS(parse_int_poly("x^2 + y"), InvalidInput);
  CHECK_THROWS_AS(parse_int_poly("1/2 x"), InvalidInput);
  CHECK_THROWS_AS(parse_int_poly(""), InvalidInput);
  CHECK(parse_rational("-7/4") == mpq_class(-7, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
}

TEST_CASE("formatting round-trips through the parser") {
  IntPoly f{-1, 0, -2, 0, 1};
  CHECK(to_string(f) == "x^4 - 2*x^2 - 1");
  CHECK(parse_int_poly(to_string(f)) == f);
  CHECK(to_string(IntPoly{}) == "0");
}

TEST_CASE("poly_gcd") {
  RatPoly a = to_rat(IntPoly{-1, 0, 1}), b = to_rat(IntPoly{-1, 1});
  CHECK(poly_gcd(a, b) == to_rat(IntPoly{-1, 1}));
  // x^4 - 2x^2 - 1 is squarefree: disc != 0 and gcd with f' is 1
  IntPoly f{-1, 0, -2, 0, 1};
  CHECK(discriminant(f) != 0);
  CHECK(poly_gcd(to_rat(f), to_rat(f.derivative())) == RatPoly::constant(1));
  RatPoly g = to_rat(IntPoly{4, 0, 2});
  CHECK(poly_gcd(g, RatPoly()) == monic(g));
}

TEST_CASE("resultant fixtures") {
  CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
  CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == 1);
  // b^2 - 4ac for x^2 - 2
  CHECK(discriminant(IntPoly{-2, 0, 1}) == 8);
  CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{0, 2}) == -8);
  CHECK(resultant(IntPoly{5}, IntPoly{1, 1, 1}) == 25);
  CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), InvalidInput);
}

TEST_CASE("resultant agrees with the Sylvester determinant and is antisymmetric") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly a = oracle::random_poly(rng, 1 + trial % 6, 9);
    IntPoly b = oracle::random_poly(rng, 1 + (trial / 6) % 5, 9);
    mpz_class r = resultant(a, b);
    CHECK(r == oracle::sylvester_resultant(a, b));
    const int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
    CHECK(r == sign * resultant(b, a));
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(IntPoly{1, -2, 1}) == IntPoly{-1, 1});
  CHECK(squarefree_part(IntPoly{0, 0, 0, 1}) == IntPoly{0, 1});
  IntPoly f{-1, 0, -2, 0, 1};
  CHECK(squarefree_part(f) == f);
  CHECK(squarefree_part(IntPoly{-3, 0, -3}) == IntPoly{1, 0, 1});
}

TEST_CASE("squarefree part is multiplicative on coprime inputs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly f = oracle::random_poly(rng, 1 + trial % 3, 5);
    IntPoly g = oracle::random_poly(rng, 1 + trial % 4, 5);
    if (gcd_int(f, g).degree() > 0) continue;
    IntPoly lhs = squarefree_part(f * f * g);
    IntPoly rhs = primitive_part(squarefree_part(f) * squarefree_part(g));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("squarefree decomposition") {
  IntPoly f = pow(IntPoly{-1, 1}, 3) * pow(IntPoly{1, 0, 1}, 2) * IntPoly{2, 1};
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::make_pair(IntPoly{2, 1}, 1));
  CHECK(parts[1] == std::make_pair(IntPoly{1, 0, 1}, 2));
  CHECK(parts[2] == std::make_pair(IntPoly{-1, 1}, 3));
}

TEST_CASE("sturm_count") {
  auto inf = ExtRat::pos_inf(), ninf = ExtRat::neg_inf();
  CHECK(sturm_count(IntPoly{-2, 0, 1}, ninf, inf) == 2);
  CHECK(sturm_count(IntPoly{1, 0, 1}, ninf, inf) == 0);
  CHECK(sturm_count(IntPoly{-1, 0, -2, 0, 1}, ninf, inf) == 2);
  // half-open interval (lo, hi]
  CHECK(sturm_count(IntPoly{0, 1}, ExtRat::finite(0), ExtRat::finite(1)) == 0);
  CHECK(sturm_count(IntPoly{0, 1}, ExtRat::finite(-1), ExtRat::finite(0)) == 1);
  CHECK(sturm_count(IntPoly{-2, 0, 1}, ExtRat::finite(0), ExtRat::finite(mpq_class(3, 2))) == 1);
  CHECK_THROWS_AS(sturm_count(IntPoly{1, -2, 1}, ninf, inf), InvalidInput);
  CHECK_THROWS_AS(sturm_count(IntPoly{-2, 0, 1}, ExtRat::finite(1), ExtRat::finite(0)), InvalidInput);
}

TEST_CASE("sturm counts agree with sign changes on a fine grid for split polynomials") {
  // products of distinct linear factors: every root is a known integer
  std::vector<int> roots = {-7, -3, 0, 2, 5, 11};
  IntPoly f{1};
  for (int r : roots) f *= IntPoly{-r, 1};
  for (int lo = -10; lo < 12; lo += 3)
    for (int hi = lo + 1; hi < 14; hi += 4) {
      int expected = 0;
      for (int r : roots)
        if (r > lo && r <= hi) ++expected;
      CHECK(sturm_count(f, ExtRat::finite(lo), ExtRat::finite(hi)) == expected);
    }
}

TEST_CASE("conjugate ratio polynomial") {
  IntPoly r = conjugate_ratio_poly(IntPoly{-2, 0, 1});
  CHECK(r == IntPoly{4, 0, -8, 0, 4});  // 4 (x-1)^2 (x+1)^2
  IntPoly lin = conjugate_ratio_poly(IntPoly{-5, 1});
  CHECK(lin.degree() == 1);
  CHECK(lin.eval(1) == 0);
  IntPoly gi = conjugate_ratio_poly(IntPoly{1, 0, 1});
  CHECK(gi.eval(1) == 0);
  CHECK(gi.eval(-1) == 0);
  CHECK_THROWS_AS(conjugate_ratio_poly(IntPoly{0, 1, 1}), InvalidInput);
  // (x - 1)^d divides the ratio polynomial
  IntPoly f{-1, -1, 0, 1};
  IntPoly cr = conjugate_ratio_poly(f);
  CHECK(exact_divide(cr, pow(IntPoly{-1, 1}, 3)).has_value());
}

TEST_CASE("conjugate product polynomial") {
  IntPoly p = conjugate_product_poly(IntPoly{-2, 0, 1});
  CHECK(p == IntPoly{2, 1});
  IntPoly q = conjugate_product_poly(IntPoly{1, 0, 1});
  CHECK(q.eval(1) == 0);
  // x^3 - x - 1: pairwise products are 1/alpha_k since the roots multiply to 1,
  // so the product polynomial is the reversal of f up to sign
  IntPoly c = conjugate_product_poly(IntPoly{-1, -1, 0, 1});
  CHECK(c.degree() == 3);
  CHECK(c == primitive_part(IntPoly{1, 0, -1, -1}));
  // a zero root contributes zero products
  IntPoly z = conjugate_product_poly(IntPoly{0, -2, 0, 1});
  CHECK(z == IntPoly{0, 0, 2, 1});
}

TEST_CASE("poly_sqrt and exact division") {
  RatPoly s = to_rat(IntPoly{1, 2, 1});
  auto r = poly_sqrt(s);
  REQUIRE(r.has_value());
  CHECK(*r == to_rat(IntPoly{1, 1}));
  CHECK_FALSE(poly_sqrt(to_rat(IntPoly{1, 0, 2})).has_value());
  CHECK(exact_divide(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
  CHECK_FALSE(exact_divide(IntPoly{-1, 0, 1}, IntPoly{1, 2}).has_value());
}

TEST_CASE("extended gcd") {
  RatPoly a = to_rat(IntPoly{-2, 0, 1}), b = to_rat(IntPoly{0, 1});
  auto e = extended_gcd(a, b);
  CHECK(e.gcd == RatPoly::constant(1));
  CHECK(e.s * a + e.t * b == e.gcd);
}
